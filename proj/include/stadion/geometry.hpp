#pragma once

// Stadium billiards and their circumscribed tangent polygons.
//
// Frame conventions: the stadium is centred at the origin with flats on
// y = +-1 and unit semicircular caps centred at (+-L, 0). Cap tangent angles
// are polar angles about the right cap centre; the left cap uses the mirror
// image pi - phi. The flats are the tangents at +-pi/2 and are always present.

#include "stadion/polygon.hpp"
#include "stadion/rational.hpp"
#include "stadion/trigfield.hpp"
#include "stadion/vec2.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stadion {

enum class CaseLabel { A, B, C, Custom };

std::string to_string(CaseLabel label);
CaseLabel parse_case_label(const std::string& text);

class StadiumSpec {
 public:
  explicit StadiumSpec(double half_flat_length, CaseLabel label = CaseLabel::Custom);

  double half_flat_length() const { return half_flat_length_; }
  CaseLabel label() const { return label_; }
  /// Short rational equal to L when one exists (continued fraction to 1e-15).
  const std::optional<Rational>& exact_half_flat_length() const { return exact_l_; }

  bool contains(Vec2 p, double tol = 1e-12) const;
  /// Boundary point at arclength fraction t in [0, 1).
  Vec2 boundary_point(double t) const;
  double perimeter() const;

 private:
  double half_flat_length_;
  CaseLabel label_;
  std::optional<Rational> exact_l_;
};

class OrbitTangentSet {
 public:
  /// Polar angles (radians) on the right cap, strictly inside (-pi/2, pi/2).
  explicit OrbitTangentSet(std::vector<double> cap_angles);
  /// Angles given as integer multiples of pi/16.
  static OrbitTangentSet from_sixteenths(std::vector<int> k16);

  const std::vector<double>& cap_angles() const { return angles_; }
  /// Integer multiples of pi/16 when every angle is one.
  std::optional<std::vector<int>> sixteenths() const;
  bool symmetric() const;
  /// Largest gap between consecutive tangents, flats included.
  double max_spacing() const;
  /// Largest angle in [0, pi/2), i.e. the tangent nearest the upper flat.
  double top_angle() const;

 private:
  std::vector<double> angles_;
};

struct TangentLine {
  double normal_angle = 0.0;  // outward normal, radians
  Vec2 normal;
  double offset = 0.0;        // the line is normal . p = offset
  Vec2 cap_center;            // centre of the unit circle it touches
  bool flat = false;
  std::optional<int> k16;     // normal_angle = k16 * pi / 16 when exact
};

struct PolygonEnvelope {
  std::vector<TangentLine> lines;        // counter-clockwise; side i lies on lines[i]
  std::vector<Vec2> vertices;            // vertex i = lines[i] meet lines[i+1]
  std::vector<double> interior_angles;   // at vertex i
  std::vector<double> side_lengths;      // side i: vertex i-1 to vertex i
  std::optional<std::vector<FieldPoint>> exact_vertices;

  std::size_t size() const { return vertices.size(); }
  bool contains(Vec2 p, double tol = 1e-12) const;
  /// Distance from `center` to the envelope boundary along direction phi.
  double boundary_radius(Vec2 center, double phi) const;
};

PolygonEnvelope build_envelope(const StadiumSpec& stadium, const OrbitTangentSet& tangents);

/// Radial stretch of the caps onto the envelope; identity on |x| <= L.
Vec2 deformation_map(Vec2 p, const StadiumSpec& stadium, const PolygonEnvelope& envelope);

struct DeformationBound {
  double tangent_spacing = 0.0;
  double epsilon_pol = 0.0;
  // The spectral accuracy eta_pol is only known to exist and to vanish with
  // epsilon_pol; no numeric value is available.
  std::string eta_pol;
};

DeformationBound envelope_accuracy_bound(double tangent_spacing);
DeformationBound envelope_accuracy_bound(const OrbitTangentSet& tangents);

/// Sup of |deformation_map(p) - p| over sampled stadium boundary points.
double sampled_deformation_sup(const StadiumSpec& stadium, const PolygonEnvelope& envelope,
                               std::size_t samples);

struct EnvelopeCheck {
  std::size_t samples = 0;
  bool contained = false;          // every sampled stadium point lies inside
  double min_clearance = 0.0;      // min over samples and lines of offset - n.p
  double max_touch_gap = 0.0;      // max over lines of the smallest sampled clearance
  double max_tangency_error = 0.0; // max over lines of |offset - n.c - 1|
};

EnvelopeCheck check_envelope(const StadiumSpec& stadium, const PolygonEnvelope& envelope, std::size_t samples);

/// Continued-fraction convergent p/q with |a - p/q| < tol and the smallest q.
Rational rationalize(double a, double tol);

/// Upper-left quarter of the envelope, placed in the unfolding frame where the
/// anchor point sits at the origin and the envelope centre at (r + L + 1, 0).
struct QuarterPolygon {
  RationalPolygon polygon;
  double r = 0.0;             // anchor-to-envelope distance
  std::optional<FieldElement> r_exact;
  Vec2 center;                // envelope centre in the unfolding frame
  std::optional<FieldPoint> center_exact;
};

QuarterPolygon make_quarter(const StadiumSpec& stadium, const OrbitTangentSet& tangents,
                            const PolygonEnvelope& envelope);

}  // namespace stadion
