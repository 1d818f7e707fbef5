#include "stadion/pipeline.hpp"

#include "json.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace stadion {

namespace {

using nlohmann::json;

// Cap tangent angles in units of pi/16; the flats are implicit.
constexpr const char* kPresets = R"({
  "A": {"L": 1, "k16": [-6, -4, -2, 0, 2, 4, 6], "orbits": 8, "accuracy": 8.67e-4},
  "B": {"L": 1, "k16": [-6, -4, -3, -2, 0, 2, 3, 4, 6], "orbits": 7, "accuracy": 4.951e-2},
  "C": {"L": 1, "k16": [-6, -4, -2, -1, 0, 1, 2, 4, 6], "orbits": 8, "accuracy": 4.951e-2}
})";

void apply_fields(CaseConfig& c, const json& j) {
  if (j.contains("name")) c.name = j.at("name").get<std::string>();
  if (j.contains("L")) c.half_flat_length = j.at("L").get<double>();
  if (j.contains("k16")) {
    c.k16 = j.at("k16").get<std::vector<int>>();
    c.cap_angles.clear();
    for (int k : *c.k16) c.cap_angles.push_back(k * std::numbers::pi / 16.0);
  }
  if (j.contains("angles")) {
    c.cap_angles = j.at("angles").get<std::vector<double>>();
    c.k16.reset();
  }
  if (j.contains("orbits")) c.orbit_count = j.at("orbits").get<int>();
  if (j.contains("accuracy")) c.accuracy = j.at("accuracy").get<double>();
  if (j.contains("zcap")) c.z_cap = j.at("zcap").get<std::uint64_t>();
}

}  // namespace

void CaseConfig::validate() const {
  if (!(half_flat_length > 0.0) || !std::isfinite(half_flat_length))
    throw std::invalid_argument("L must be positive and finite");
  if (cap_angles.empty()) throw std::invalid_argument("no cap tangent angles");
  OrbitTangentSet check(cap_angles);
  if (accuracy < 0.0 || accuracy >= 1.0) throw std::invalid_argument("accuracy must lie in (0, 1)");
  if (z_cap < 1) throw std::invalid_argument("zcap must be at least 1");
}

CaseConfig preset(CaseLabel label) {
  static const json presets = json::parse(kPresets);
  if (label == CaseLabel::Custom) throw std::invalid_argument("custom cases have no preset");
  CaseConfig c;
  c.label = label;
  c.name = to_string(label);
  apply_fields(c, presets.at(to_string(label)));
  return c;
}

CaseConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  CaseConfig c;
  if (j.contains("case")) {
    const CaseLabel label = parse_case_label(j.at("case").get<std::string>());
    if (label != CaseLabel::Custom) c = preset(label);
  }
  try {
    apply_fields(c, j);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad config field: ") + e.what());
  }
  if (c.name.empty()) c.name = "custom";
  c.validate();
  return c;
}

CaseConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

CaseGeometry build_case(const CaseConfig& config) {
  config.validate();
  StadiumSpec stadium(config.half_flat_length, config.label);
  OrbitTangentSet tangents = config.k16 ? OrbitTangentSet::from_sixteenths(*config.k16) : OrbitTangentSet(config.cap_angles);
  PolygonEnvelope envelope = build_envelope(stadium, tangents);
  QuarterPolygon quarter = make_quarter(stadium, tangents, envelope);
  Epp epp = build_epp(quarter.polygon);
  auto gluings = enumerate_gluings(epp);
  auto periods = enumerate_periods(epp);
  auto [bx, by] = base_periods(periods);
  decompose_all(periods, bx, by);
  for (Period* b : {&bx, &by}) std::tie(b->a_x, b->a_y) = decompose_period(*b, bx, by);
  auto summary = summarize(epp, periods);
  return CaseGeometry{config,   std::move(stadium), std::move(tangents), std::move(envelope), std::move(quarter),
                      std::move(epp), std::move(gluings), std::move(periods), std::move(bx), std::move(by), summary};
}

IrrationalSet irrationals_for(const CaseGeometry& g) {
  const int h = g.summary.highest_generator;
  if (h < 1) throw std::domain_error("period coefficients are rational; nothing to approximate");
  std::vector<std::size_t> idx;
  for (int q = 1; q <= h; ++q) idx.push_back(std::size_t(q));
  return IrrationalSet::generators(idx);
}

}  // namespace stadion
