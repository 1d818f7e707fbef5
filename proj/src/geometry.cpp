#include "stadion/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace stadion {

namespace {

constexpr double kPi = std::numbers::pi;

Vec2 unit(double a) { return {std::cos(a), std::sin(a)}; }

FieldPoint exact_unit(int k16) { return {cos_pi16(k16), sin_pi16(k16)}; }
FieldPoint exact_tangent(int k16) { return {-sin_pi16(k16), cos_pi16(k16)}; }

// tan(k*pi/32) = sin(k*pi/16) / (1 + cos(k*pi/16))
FieldElement exact_half_tan(int k16) {
  return sin_pi16(k16) * inverse(FieldElement(Rational(1)) + cos_pi16(k16));
}

std::optional<int> as_sixteenth(double angle) {
  const double k = angle * 16.0 / kPi;
  const double kr = std::round(k);
  if (std::abs(k - kr) > 1e-9) return std::nullopt;
  return static_cast<int>(kr);
}

}  // namespace

std::string to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::A: return "A";
    case CaseLabel::B: return "B";
    case CaseLabel::C: return "C";
    case CaseLabel::Custom: return "custom";
  }
  return "custom";
}

CaseLabel parse_case_label(const std::string& text) {
  if (text == "A" || text == "a") return CaseLabel::A;
  if (text == "B" || text == "b") return CaseLabel::B;
  if (text == "C" || text == "c") return CaseLabel::C;
  if (text == "custom") return CaseLabel::Custom;
  throw std::invalid_argument("unknown case label '" + text + "' (expected A, B, C or custom)");
}

StadiumSpec::StadiumSpec(double half_flat_length, CaseLabel label)
    : half_flat_length_(half_flat_length), label_(label) {
  if (!(half_flat_length > 0.0) || !std::isfinite(half_flat_length))
    throw std::invalid_argument("stadium half flat length L must be positive");
  Rational q = rationalize(half_flat_length, 1e-15 * std::max(1.0, half_flat_length));
  if (boost::multiprecision::denominator(q) < 1000000 && to_double(q) == half_flat_length) exact_l_ = q;
}

bool StadiumSpec::contains(Vec2 p, double tol) const {
  const double L = half_flat_length_;
  if (std::abs(p.x) <= L) return std::abs(p.y) <= 1.0 + tol;
  const Vec2 c{p.x > 0 ? L : -L, 0.0};
  return norm(p - c) <= 1.0 + tol;
}

double StadiumSpec::perimeter() const { return 4.0 * half_flat_length_ + 2.0 * kPi; }

Vec2 StadiumSpec::boundary_point(double t) const {
  const double L = half_flat_length_;
  t -= std::floor(t);
  double s = t * perimeter();
  // bottom flat, right cap, top flat, left cap
  if (s < 2 * L) return {-L + s, -1.0};
  s -= 2 * L;
  if (s < kPi) return Vec2{L, 0.0} + unit(-kPi / 2 + s);
  s -= kPi;
  if (s < 2 * L) return {L - s, 1.0};
  s -= 2 * L;
  return Vec2{-L, 0.0} + unit(kPi / 2 + s);
}

OrbitTangentSet::OrbitTangentSet(std::vector<double> cap_angles) : angles_(std::move(cap_angles)) {
  for (double a : angles_) {
    if (!std::isfinite(a)) throw std::invalid_argument("non-finite tangent angle");
    if (std::abs(a) >= kPi / 2 - 1e-12)
      throw std::invalid_argument("cap tangent at +-pi/2 coincides with a flat side");
  }
  std::sort(angles_.begin(), angles_.end());
}

OrbitTangentSet OrbitTangentSet::from_sixteenths(std::vector<int> k16) {
  std::vector<double> a;
  a.reserve(k16.size());
  for (int k : k16) {
    if (k <= -8 || k >= 8) throw std::invalid_argument("cap tangent at +-pi/2 coincides with a flat side");
    a.push_back(k * kPi / 16.0);
  }
  return OrbitTangentSet(std::move(a));
}

std::optional<std::vector<int>> OrbitTangentSet::sixteenths() const {
  std::vector<int> out;
  for (double a : angles_) {
    auto k = as_sixteenth(a);
    if (!k) return std::nullopt;
    out.push_back(*k);
  }
  return out;
}

bool OrbitTangentSet::symmetric() const {
  const std::size_t n = angles_.size();
  for (std::size_t i = 0; i < n; ++i)
    if (std::abs(angles_[i] + angles_[n - 1 - i]) > 1e-12) return false;
  return true;
}

double OrbitTangentSet::max_spacing() const {
  double prev = -kPi / 2, gap = 0.0;
  for (double a : angles_) {
    gap = std::max(gap, a - prev);
    prev = a;
  }
  return std::max(gap, kPi / 2 - prev);
}

double OrbitTangentSet::top_angle() const {
  if (angles_.empty()) throw std::invalid_argument("empty tangent set");
  return angles_.back();
}

bool PolygonEnvelope::contains(Vec2 p, double tol) const {
  for (const auto& l : lines)
    if (dot(l.normal, p) > l.offset + tol) return false;
  return true;
}

double PolygonEnvelope::boundary_radius(Vec2 center, double phi) const {
  const Vec2 u = unit(phi);
  double best = INFINITY;
  for (const auto& l : lines) {
    const double nu = dot(l.normal, u);
    if (nu <= 1e-15) continue;
    best = std::min(best, (l.offset - dot(l.normal, center)) / nu);
  }
  return best;
}

PolygonEnvelope build_envelope(const StadiumSpec& stadium, const OrbitTangentSet& tangents) {
  const auto& angles = tangents.cap_angles();
  if (angles.empty()) throw std::invalid_argument("tangent set is empty");
  const double L = stadium.half_flat_length();

  auto cap_line = [&](double normal_angle, Vec2 c) {
    TangentLine t;
    t.normal_angle = normal_angle;
    t.normal = unit(normal_angle);
    t.offset = dot(t.normal, c) + 1.0;
    t.cap_center = c;
    t.k16 = as_sixteenth(normal_angle);
    return t;
  };
  auto flat_line = [&](double normal_angle) {
    TangentLine t = cap_line(normal_angle, {0.0, 0.0});
    t.normal = normal_angle < kPi ? Vec2{0.0, 1.0} : Vec2{0.0, -1.0};
    t.flat = true;
    return t;
  };

  PolygonEnvelope env;
  for (double a : angles) env.lines.push_back(cap_line(a, {L, 0.0}));
  env.lines.push_back(flat_line(kPi / 2));
  for (auto it = angles.rbegin(); it != angles.rend(); ++it) env.lines.push_back(cap_line(kPi - *it, {-L, 0.0}));
  env.lines.push_back(flat_line(3 * kPi / 2));

  const std::size_t n = env.lines.size();
  std::vector<double> deltas(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& l1 = env.lines[i];
    const auto& l2 = env.lines[(i + 1) % n];
    double d = l2.normal_angle - l1.normal_angle;
    if (i + 1 == n) d += 2 * kPi;
    if (d <= 1e-12 || d >= kPi - 1e-12)
      throw std::domain_error("degenerate envelope: consecutive tangent lines are parallel");
    deltas[i] = d;
    const double det = cross(l1.normal, l2.normal);
    const Vec2 v{(l1.offset * l2.normal.y - l2.offset * l1.normal.y) / det,
                 (l1.normal.x * l2.offset - l2.normal.x * l1.offset) / det};
    env.vertices.push_back(v);
    env.interior_angles.push_back(kPi - d);
  }
  for (std::size_t i = 0; i < n; ++i) env.side_lengths.push_back(norm(env.vertices[i] - env.vertices[(i + n - 1) % n]));

  const bool all_exact =
      stadium.exact_half_flat_length().has_value() &&
      std::all_of(env.lines.begin(), env.lines.end(), [](const TangentLine& l) { return l.k16.has_value(); });
  if (all_exact) {
    const FieldElement Lx(*stadium.exact_half_flat_length());
    std::vector<FieldPoint> ev;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& l1 = env.lines[i];
      const auto& l2 = env.lines[(i + 1) % n];
      int dk = *l2.k16 - *l1.k16;
      if (dk < 0) dk += 32;
      // Flats touch both caps; use the centre of whichever neighbour is a cap line.
      const TangentLine& cap = l1.flat ? l2 : l1;
      const FieldPoint c{cap.cap_center.x > 0 ? Lx : -Lx, FieldElement()};
      ev.push_back(c + exact_unit(*l1.k16) + exact_half_tan(dk) * exact_tangent(*l1.k16));
    }
    env.exact_vertices = std::move(ev);
  }
  return env;
}

Vec2 deformation_map(Vec2 p, const StadiumSpec& stadium, const PolygonEnvelope& envelope) {
  if (!stadium.contains(p, 1e-9)) throw std::invalid_argument("deformation_map: point lies outside the stadium");
  const double L = stadium.half_flat_length();
  if (std::abs(p.x) <= L) return p;
  const Vec2 c{p.x > 0 ? L : -L, 0.0};
  const Vec2 v = p - c;
  const double phi = std::atan2(v.y, v.x);
  return c + envelope.boundary_radius(c, phi) * v;
}

DeformationBound envelope_accuracy_bound(double spacing) {
  if (!(spacing >= 0.0) || spacing >= kPi) throw std::invalid_argument("tangent spacing must lie in [0, pi)");
  DeformationBound b;
  b.tangent_spacing = spacing;
  const double s = std::sin(spacing / 4);
  b.epsilon_pol = 2 * s * s / std::cos(spacing / 2);
  b.eta_pol = "bounded and monotone in epsilon_pol, vanishing as epsilon_pol -> 0; no numeric constant available";
  return b;
}

DeformationBound envelope_accuracy_bound(const OrbitTangentSet& tangents) {
  // For uneven spacing the widest gap dominates, since sec(d/2) - 1 increases with d.
  return envelope_accuracy_bound(tangents.max_spacing());
}

double sampled_deformation_sup(const StadiumSpec& stadium, const PolygonEnvelope& envelope, std::size_t samples) {
  double sup = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const Vec2 p = stadium.boundary_point(double(i) / double(samples));
    sup = std::max(sup, norm(deformation_map(p, stadium, envelope) - p));
  }
  return sup;
}

EnvelopeCheck check_envelope(const StadiumSpec& stadium, const PolygonEnvelope& envelope, std::size_t samples) {
  EnvelopeCheck c;
  c.samples = samples;
  c.min_clearance = INFINITY;
  std::vector<double> touch(envelope.lines.size(), INFINITY);
  for (std::size_t i = 0; i < samples; ++i) {
    const Vec2 p = stadium.boundary_point(double(i) / double(samples));
    for (std::size_t k = 0; k < envelope.lines.size(); ++k) {
      const auto& l = envelope.lines[k];
      const double gap = l.offset - dot(l.normal, p);
      c.min_clearance = std::min(c.min_clearance, gap);
      touch[k] = std::min(touch[k], gap);
    }
  }
  for (double t : touch) c.max_touch_gap = std::max(c.max_touch_gap, t);
  for (const auto& l : envelope.lines)
    c.max_tangency_error = std::max(c.max_tangency_error, std::abs(l.offset - dot(l.normal, l.cap_center) - 1.0));
  c.contained = c.min_clearance >= -1e-12;
  return c;
}

Rational rationalize(double a, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("rationalize: tol must be positive");
  const Rational x = exact_rational(a);
  const Rational t = exact_rational(tol);
  // Convergents h/k of the continued fraction of x.
  BigInt h_prev = 0, h = 1, k_prev = 1, k = 0;
  Rational rest = x;
  for (;;) {
    BigInt ai = boost::multiprecision::numerator(rest) / boost::multiprecision::denominator(rest);
    if (ai * boost::multiprecision::denominator(rest) > boost::multiprecision::numerator(rest)) --ai;  // floor
    const BigInt hn = ai * h + h_prev, kn = ai * k + k_prev;
    h_prev = h, h = hn, k_prev = k, k = kn;
    const Rational c(h, k);
    const Rational err = c > x ? Rational(c - x) : Rational(x - c);
    if (err < t) return c;
    rest -= ai;
    if (rest == 0) return c;
    rest = 1 / rest;
  }
}

QuarterPolygon make_quarter(const StadiumSpec& stadium, const OrbitTangentSet& tangents,
                            const PolygonEnvelope& envelope) {
  if (!tangents.symmetric()) throw std::invalid_argument("quarter construction needs a tangent set symmetric in phi -> -phi");
  const double L = stadium.half_flat_length();
  const std::size_t n = envelope.size();
  const auto& a = tangents.cap_angles();
  const std::size_t top = a.size();  // index of the upper flat line

  QuarterPolygon q;
  const double psi = std::max(0.0, tangents.top_angle());
  q.r = 1.0 / std::cos(psi) - 1.0;
  q.center = {q.r + L + 1.0, 0.0};

  // Walk counter-clockwise from the upper flat to the negative x axis.
  std::vector<std::size_t> idx;
  for (std::size_t i = top; i < n; ++i) {
    if (envelope.vertices[i].y < -1e-12) break;
    idx.push_back(i);
  }
  const bool pole = std::abs(envelope.vertices[idx.back()].y) > 1e-12;

  std::vector<Vec2> v = {q.center, q.center + Vec2{0.0, 1.0}};
  for (std::size_t i : idx) v.push_back(q.center + envelope.vertices[i]);
  if (pole) v.push_back(q.center + Vec2{-L - 1.0, 0.0});
  v.back().y = 0.0;

  std::optional<std::vector<FieldPoint>> ex;
  const auto k16 = tangents.sixteenths();
  if (envelope.exact_vertices && k16 && stadium.exact_half_flat_length()) {
    const FieldElement one(Rational(1)), Lx(*stadium.exact_half_flat_length());
    const int kt = std::max(0, k16->back());
    q.r_exact = inverse(cos_pi16(kt)) - one;
    q.center_exact = FieldPoint{*q.r_exact + Lx + one, FieldElement()};
    std::vector<FieldPoint> e = {*q.center_exact, *q.center_exact + FieldPoint{FieldElement(), one}};
    for (std::size_t i : idx) e.push_back(*q.center_exact + (*envelope.exact_vertices)[i]);
    if (pole) e.push_back(*q.center_exact + FieldPoint{-Lx - one, FieldElement()});
    ex = std::move(e);
  }

  q.polygon = RationalPolygon::from_vertices(std::move(v), std::move(ex));
  const std::size_t m = q.polygon.size();
  q.polygon.side_names[0] = "b";
  q.polygon.side_names[1] = "flat";
  for (std::size_t i = 2; i + 1 < m; ++i) q.polygon.side_names[i] = "cap" + std::to_string(i - 1);
  q.polygon.side_names[m - 1] = "a";
  q.polygon.side_a = int(m - 1);
  q.polygon.side_b = 0;
  return q;
}

}  // namespace stadion
