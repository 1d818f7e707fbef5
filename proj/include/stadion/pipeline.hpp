#pragma once

// Case presets and the geometry half of the pipeline: stadium, envelope,
// quarter polygon, unfolding and decomposed periods, built once and shared.

#include "stadion/diophantine.hpp"
#include "stadion/geometry.hpp"
#include "stadion/unfolding.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace stadion {

struct CaseConfig {
  CaseLabel label = CaseLabel::Custom;
  std::string name;
  double half_flat_length = 1.0;
  std::vector<double> cap_angles;            // radians
  std::optional<std::vector<int>> k16;       // same angles in units of pi/16, when given that way
  int orbit_count = 0;                       // periodic orbits whose tangents build the envelope
  double accuracy = 0.0;                     // default Diophantine target
  std::uint64_t z_cap = 100000000000ULL;

  /// Throws std::invalid_argument on anything StadiumSpec or OrbitTangentSet would reject.
  void validate() const;
};

/// Embedded presets for the three named cases.
CaseConfig preset(CaseLabel label);
/// Parses a JSON document; "case" may name a preset whose fields the document overrides.
CaseConfig parse_config(const std::string& json_text);
CaseConfig load_config(const std::string& path);

struct CaseGeometry {
  CaseConfig config;
  StadiumSpec stadium;
  OrbitTangentSet tangents;
  PolygonEnvelope envelope;
  QuarterPolygon quarter;
  Epp epp;
  std::vector<Gluing> gluings;
  std::vector<Period> periods;     // decomposed
  Period base_x, base_y;
  UnfoldingSummary summary;
};

CaseGeometry build_case(const CaseConfig& config);

/// X_1 .. X_h where h is the highest generator used by the period coefficients.
IrrationalSet irrationals_for(const CaseGeometry& geometry);

}  // namespace stadion
