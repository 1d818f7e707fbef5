#include "stadion/semiclassics.hpp"

#include "bigfloat.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace stadion {

namespace {

namespace mp = boost::multiprecision;
using detail::Big;
using detail::big_eval;

constexpr long double kPiL = std::numbers::pi_v<long double>;

void require_mode(ModeNumbers mode) {
  if (mode.m == 0 && mode.n == 0) throw std::invalid_argument("mode numbers m = n = 0 are excluded");
}

long double to_ld(const Big& v) { return v.convert_to<long double>(); }
long double exact_ld(const FieldElement& e) { return to_ld(big_eval(e)); }

// exp(2 pi i v) with v reduced mod 1 before leaving 100-digit arithmetic.
Complex unit_phase(const Big& v) {
  const Big f = v - mp::floor(v);
  const long double t = 2.0L * kPiL * to_ld(f);
  return {std::cos(t), std::sin(t)};
}

const FieldElement& sqrt2() {
  static const FieldElement a = FieldElement::generator(Generator::A);
  return a;
}

Rational ri(long v) { return Rational(v); }

const FieldPoint& corner_exact(const CaseGeometry& g) {
  if (!g.quarter.center_exact) throw std::domain_error("quarter polygon has no exact corner");
  return *g.quarter.center_exact;
}

const std::vector<FieldPoint>& exact_vertices(const CaseGeometry& g) {
  if (!g.quarter.polygon.exact) throw std::domain_error("quarter polygon has no exact vertices");
  return *g.quarter.polygon.exact;
}

// Local (corner-relative) endpoints of a side, from exact data.
std::array<long double, 4> side_local(const CaseGeometry& g, int side) {
  const auto& e = exact_vertices(g);
  const FieldPoint& c = corner_exact(g);
  const FieldPoint a = e[std::size_t(side)] - c;
  const FieldPoint b = e[(std::size_t(side) + 1) % e.size()] - c;
  return {exact_ld(a.x), exact_ld(a.y), exact_ld(b.x), exact_ld(b.y)};
}

std::array<long double, 2> outward_normal(const std::array<long double, 4>& s) {
  const long double dx = s[2] - s[0], dy = s[3] - s[1];
  const long double len = std::hypot(dx, dy);
  return {dy / len, -dx / len};
}

bool half_integral(const FieldElement& w) {
  for (const auto& c : w.coeffs())
    if (mp::denominator(Rational(2 * c)) != 1) return false;
  return true;
}

}  // namespace

std::array<long double, 2> quantize_momentum(std::uint64_t Z, ModeNumbers mode) {
  require_mode(mode);
  const long double k = 4.0L * kPiL * static_cast<long double>(Z);
  return {k * mode.m, k * mode.n};
}

long double energy(std::uint64_t Z, ModeNumbers mode) {
  require_mode(mode);
  const long double z = static_cast<long double>(Z);
  return 8.0L * kPiL * kPiL * z * z * static_cast<long double>(mode.m * mode.m + mode.n * mode.n);
}

BigInt energy_over_pi2(std::uint64_t Z, ModeNumbers mode) {
  require_mode(mode);
  const BigInt z = Z;
  return 8 * z * z * (BigInt(mode.m) * mode.m + BigInt(mode.n) * mode.n);
}

Complex bswf_eval(const std::array<long double, 2>& p, Vec2 point, int sign) {
  const long double t = p[0] * point.x + p[1] * point.y;
  return Complex(std::cos(t), std::sin(t)) * static_cast<long double>(sign);
}

// ---- the model ------------------------------------------------------------------

SwfModel SwfModel::build(const CaseGeometry& g, std::uint64_t Z, ModeNumbers mode) {
  require_mode(mode);
  const Epp& epp = g.epp;
  const int K = epp.angle_unit();
  if (16 % K != 0) throw std::domain_error("wave function needs side directions in multiples of pi/16");
  const FieldPoint& c0 = corner_exact(g);

  SwfModel s;
  s.z_ = Z;
  s.mode_ = mode;
  s.p_ = quantize_momentum(Z, mode);
  s.energy_ = stadion::energy(Z, mode);
  s.c0x_ = exact_ld(c0.x);

  const long double k = 4.0L * kPiL * static_cast<long double>(Z);
  const Big twoz = Big(2) * Big(Z);
  for (const auto& copy : epp.copies()) {
    if (copy.index_in_block != 0) continue;
    SwfTerm t;
    t.block = copy.block;
    t.sign = copy.parity;
    t.corner = epp.apply_exact(copy, c0);
    const int k16 = copy.g.rot * (16 / K);
    const FieldElement cs = cos_pi16(k16), sn = sin_pi16(k16);
    const Rational f = copy.g.flip ? -1 : 1;
    t.ux_coef = ri(mode.m) * cs + ri(mode.n) * sn;
    t.uy_coef = f * (ri(mode.n) * cs - ri(mode.m) * sn);
    t.ux = k * exact_ld(t.ux_coef);
    t.uy = k * exact_ld(t.uy_coef);
    // p . C = 4 pi Z (m Cx + n Cy) = 2 pi * 2Z (m Cx + n Cy)
    t.phase = unit_phase(twoz * big_eval(ri(mode.m) * t.corner.x + ri(mode.n) * t.corner.y));
    s.terms_.push_back(std::move(t));
  }

  // principal axis of the sampled values: alpha = arg(sum psi^2) / 2
  const auto& vs = g.quarter.polygon.vertices;
  double x0 = vs[0].x, x1 = x0, y1 = 0.0;
  for (const auto& v : vs) {
    x0 = std::min(x0, v.x);
    x1 = std::max(x1, v.x);
    y1 = std::max(y1, v.y);
  }
  Complex acc = 0;
  long double peak = 0.0L;
  constexpr int kAlign = 64;
  for (int j = 0; j < kAlign; ++j)
    for (int i = 0; i < kAlign; ++i) {
      const Complex v = s.value({x0 + (x1 - x0) * (i + 0.5) / kAlign, y1 * (j + 0.5) / kAlign});
      acc += v * v;
      peak = std::max(peak, std::abs(v));
    }
  // |m| = |n| cancels term by term in case A; elsewhere the pairs only cancel
  // up to their phase errors, so check the samples
  s.degenerate_ = std::abs(mode.m) == std::abs(mode.n) && peak < 1e-12L;
  if (std::abs(acc) > 0) s.align_ = std::polar(1.0L, -std::arg(acc) / 2);
  return s;
}

Complex SwfModel::value(Vec2 point) const { return value_local(point.x - c0x_, point.y); }

Complex SwfModel::value_local(long double X, long double y) const {
  Complex s = 0;
  for (const auto& t : terms_) s += t.phase * (t.sign * std::sin(t.ux * X) * std::sin(t.uy * y));
  return s;
}

std::array<Complex, 2> SwfModel::gradient_local(long double X, long double y) const {
  Complex gx = 0, gy = 0;
  for (const auto& t : terms_) {
    const long double sx = std::sin(t.ux * X), cx = std::cos(t.ux * X);
    const long double sy = std::sin(t.uy * y), cy = std::cos(t.uy * y);
    gx += t.phase * (t.sign * t.ux * cx * sy);
    gy += t.phase * (t.sign * t.uy * sx * cy);
  }
  return {gx, gy};
}

std::array<Complex, 3> SwfModel::hessian_local(long double X, long double y) const {
  Complex hxx = 0, hxy = 0, hyy = 0;
  for (const auto& t : terms_) {
    const long double sx = std::sin(t.ux * X), cx = std::cos(t.ux * X);
    const long double sy = std::sin(t.uy * y), cy = std::cos(t.uy * y);
    hxx -= t.phase * (t.sign * t.ux * t.ux * sx * sy);
    hxy += t.phase * (t.sign * t.ux * t.uy * cx * cy);
    hyy -= t.phase * (t.sign * t.uy * t.uy * sx * sy);
  }
  return {hxx, hxy, hyy};
}

Complex SwfModel::laplacian_local(long double X, long double y) const {
  const auto h = hessian_local(X, y);
  return h[0] + h[2];
}

Complex swf_eval_A_literal(std::uint64_t Z, ModeNumbers mode, const FieldElement& c0x, Vec2 point) {
  require_mode(mode);
  const long double z = static_cast<long double>(Z), m = mode.m, n = mode.n;
  const long double X = point.x - exact_ld(c0x), y = point.y;
  const long double r2 = std::sqrt(2.0L);
  const Big bz = Big(Z), bc = big_eval(c0x), a = detail::big_generators()[1];
  // exp(4 pi i m Z c0x) = exp(2 pi i * 2 m Z c0x), and so on.
  const Complex e1 = unit_phase(2 * Big(mode.m) * bz * bc);
  const Complex e2 = unit_phase(2 * Big(mode.n) * bz * bc);
  const Complex e3 = unit_phase(Big(mode.m - mode.n) * a * bz * bc);
  const Complex e4 = unit_phase(Big(mode.m + mode.n) * a * bz * bc);
  const long double k4 = 4.0L * kPiL * z, k2 = 2.0L * kPiL * r2 * z;
  return e1 * (std::sin(k4 * m * X) * std::sin(k4 * n * y)) - e2 * (std::sin(k4 * n * X) * std::sin(k4 * m * y)) +
         e3 * (std::sin(k2 * (m - n) * X) * std::sin(k2 * (m + n) * y)) -
         e4 * (std::sin(k2 * (m + n) * X) * std::sin(k2 * (m - n) * y));
}

std::vector<std::array<FieldElement, 2>> closed_form_BC_arguments(ModeNumbers mode) {
  const FieldElement B = FieldElement::generator(Generator::B), C = FieldElement::generator(Generator::C);
  const Rational m = mode.m, n = mode.n, h = Rational(1, 2);
  const FieldElement one(Rational(1));
  const FieldElement& A = sqrt2();
  return {
      {m * one, n * one},
      {h * (n * B - m * C), h * (m * B + n * C)},
      {n * one, m * one},
      {h * (m * B + n * C), h * (n * B - m * C)},
      {h * (m - n) * A, h * (m + n) * A},
      {h * (n * B + m * C), h * (m * B - n * C)},
      {h * (m + n) * A, h * (m - n) * A},
      {h * (m * B - n * C), h * (n * B + m * C)},
  };
}

Complex swf_eval_BC(const SwfModel& model, Vec2 point) { return model.value(point); }

// ---- residual constants -------------------------------------------------------------

PeriodConstants period_constants(const Period& p) {
  if (!p.a_x || !p.a_y) throw std::domain_error("period " + p.label + " is not decomposed");
  PeriodConstants c;
  c.label = p.label;
  c.vector = p.vector;
  for (std::size_t f = 0; f < kFieldDim; ++f) {
    const Rational ax = 4 * (*p.a_x)[f], ay = 4 * (*p.a_y)[f];
    if (mp::denominator(ax) != 1 || mp::denominator(ay) != 1)
      throw std::domain_error("period " + p.label + " has coefficients outside (1/4) Z");
    c.a_x[f] = mp::numerator(ax);
    c.a_y[f] = mp::numerator(ay);
    if (f >= 1) {
      c.I_x += mp::abs(c.a_x[f]);
      c.I_y += mp::abs(c.a_y[f]);
    }
  }
  return c;
}

BigInt I_mn(const PeriodConstants& c, ModeNumbers mode, const Approximation& approx) {
  if (!approx.found) throw std::invalid_argument("approximation has no multiplier");
  BigInt s = 0;
  for (std::size_t f = 0; f < kFieldDim; ++f) {
    const BigInt w = BigInt(mode.m) * c.a_x[f] + BigInt(mode.n) * c.a_y[f];
    if (w == 0) continue;
    if (f == 0) {
      s += w * BigInt(approx.Z);
    } else {
      if (f > approx.q.size()) throw std::invalid_argument("approximation does not cover X_" + std::to_string(f));
      s += w * approx.q[f - 1];
    }
  }
  return s;
}

std::vector<SideConstants> side_constants(const CaseGeometry& g) {
  const auto& poly = g.quarter.polygon;
  std::vector<SideConstants> out(poly.size());
  for (std::size_t s = 0; s < poly.size(); ++s) {
    out[s].side = int(s);
    out[s].name = poly.side_names[s];
    out[s].construction_zero = int(s) == poly.side_a || int(s) == poly.side_b;
  }
  for (const auto& gl : g.gluings) {
    if (gl.zero) continue;
    Period p;
    p.label = "gluing";
    p.source = gl.source;
    p.target = gl.target;
    p.vector = gl.vector;
    p.exact = gl.exact;
    auto [ax, ay] = decompose_period(p, g.base_x, g.base_y);
    p.a_x = std::move(ax);
    p.a_y = std::move(ay);
    const PeriodConstants c = period_constants(p);
    auto& sc = out.at(std::size_t(gl.source.side));
    sc.J_x += c.I_x;
    sc.J_y += c.I_y;
    ++sc.gluings;
  }
  return out;
}

// ---- certificates --------------------------------------------------------------------

bool SideResidual::within_bound() const {
  if (constants.construction_zero) return max_abs < 1e-12L;
  return max_abs < nominal_bound;
}

std::vector<SideResidual> boundary_residual(const SwfModel& model, const CaseGeometry& g, double eps,
                                            std::size_t samples, int threads) {
  if (samples < 2) throw std::invalid_argument("need at least two samples per side");
  const auto consts = side_constants(g);
  const long double am = std::abs(model.mode().m), an = std::abs(model.mode().n);
  std::vector<SideResidual> out;
  for (const auto& sc : consts) {
    const auto e = side_local(g, sc.side);
    std::vector<long double> vals(samples);
    detail::parallel_for(samples, threads, [&](std::size_t b, std::size_t end) {
      for (std::size_t k = b; k < end; ++k) {
        const long double t = static_cast<long double>(k) / static_cast<long double>(samples - 1);
        // endpoints taken verbatim so that axis sides stay on their axis
        const long double X = k == 0 ? e[0] : k + 1 == samples ? e[2] : e[0] + t * (e[2] - e[0]);
        const long double y = k == 0 ? e[1] : k + 1 == samples ? e[3] : e[1] + t * (e[3] - e[1]);
        vals[k] = std::abs(model.value_local(X, y));
      }
    });
    SideResidual r;
    r.constants = sc;
    r.samples = samples;
    r.max_abs = *std::max_element(vals.begin(), vals.end());
    r.nominal_bound = 2.0L * kPiL * (am * sc.J_x.convert_to<long double>() + an * sc.J_y.convert_to<long double>()) * eps;
    r.rigorous_bound = r.nominal_bound / 4.0L;
    out.push_back(std::move(r));
  }
  return out;
}

WavelengthMismatch wavelength_mismatch(const Period& period, const SwfModel& model, const Approximation& approx,
                                       double eps) {
  const PeriodConstants c = period_constants(period);
  const ModeNumbers mode = model.mode();
  WavelengthMismatch w;
  w.label = period.label;
  if (!period.exact) throw std::domain_error("period has no exact vector");
  const Big len = mp::sqrt(big_eval(dot(*period.exact, *period.exact)));
  w.length = to_ld(len);
  // p . D / 2 pi
  Big s = 0;
  const auto& gen = detail::big_generators();
  for (std::size_t f = 0; f < kFieldDim; ++f) {
    const BigInt k = BigInt(mode.m) * c.a_x[f] + BigInt(mode.n) * c.a_y[f];
    if (k != 0) s += Big(k) * Big(model.Z()) * gen[f];
  }
  w.I_mn = I_mn(c, mode, approx);
  const long double weight = std::abs(mode.m) * c.I_x.convert_to<long double>() +
                             std::abs(mode.n) * c.I_y.convert_to<long double>();
  if (s == 0) {
    w.degenerate = true;
    w.wavelength = std::numeric_limits<long double>::infinity();
    w.mismatch = w.length;
    w.bound = std::numeric_limits<long double>::infinity();
    return w;
  }
  const Big as = mp::abs(s);
  w.wavelength = to_ld(len / as);
  w.bound = weight * static_cast<long double>(eps) * w.wavelength;
  if (w.I_mn == 0) {
    w.degenerate = true;
    w.mismatch = w.length;
    return w;
  }
  w.mismatch = to_ld(mp::abs(len * (as - Big(mp::abs(w.I_mn))) / as));
  return w;
}

// ---- periodic skeleton ----------------------------------------------------------------

PocLevel poc_level(const CaseGeometry& g, std::uint64_t Z, ModeNumbers mode) {
  if (mode.n == 0) throw std::invalid_argument("the transverse quantum number n must be nonzero");
  if (!g.base_x.exact || !g.base_y.exact) throw std::domain_error("base periods need exact vectors");
  const FieldElement lx2 = dot(*g.base_x.exact, *g.base_x.exact), ly2 = dot(*g.base_y.exact, *g.base_y.exact);
  if (lx2.support_degree() > 0 || ly2.support_degree() > 0)
    throw std::domain_error("base period lengths are not rational");
  const BigInt z = Z;
  PocLevel l;
  l.mode = mode;
  // E0 = (8 pi Z n / |D_x|)^2 / 2 and p = 8 pi Z m / |D_y|
  l.e0_over_pi2 = Rational(32 * z * z * BigInt(mode.n) * mode.n) / lx2[0];
  l.longitudinal_over_pi2 = Rational(32 * z * z * BigInt(mode.m) * mode.m) / ly2[0];
  l.total_over_pi2 = l.e0_over_pi2 + l.longitudinal_over_pi2;
  l.aperiodic_over_pi2 = energy_over_pi2(Z, mode);
  l.matches = l.total_over_pi2 == Rational(l.aperiodic_over_pi2);
  return l;
}

Complex poc_profile(const PocLevel& level, std::uint64_t, Complex a, Complex b, Vec2 point) {
  const long double k = kPiL * std::sqrt(2.0L * to_long_double(level.e0_over_pi2));
  long double p = kPiL * std::sqrt(2.0L * to_long_double(level.longitudinal_over_pi2));
  if (level.mode.m < 0) p = -p;
  const Complex wave(std::cos(p * point.y), std::sin(p * point.y));
  return wave * (a * std::sin(k * point.x) + b * std::cos(k * point.x));
}

// ---- singular diagonals -----------------------------------------------------------------

std::vector<DiagonalSpec> make_diagonals(const CaseGeometry& g) {
  const auto& poly = g.quarter.polygon;
  const auto& ev = exact_vertices(g);
  std::vector<FieldElement> xs = {FieldElement()};
  for (const auto& c : g.epp.copies()) {
    for (std::size_t v = 0; v < poly.size(); ++v) {
      if (mp::numerator(poly.interior_angle[v]) == 1) continue;
      FieldElement x = g.epp.apply_exact(c, ev[v]).x;
      if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(std::move(x));
    }
  }
  std::vector<DiagonalSpec> out;
  for (auto& x : xs) {
    if (!x.in_span(3)) throw std::domain_error("diagonal abscissa " + x.to_string() + " leaves span{1, A, B, C}");
    const FieldElement xr = sqrt2() * x;
    if (!xr.in_span(3)) throw std::domain_error("sqrt2 * abscissa leaves span{1, A, B, C}");
    DiagonalSpec d;
    for (std::size_t l = 0; l < 4; ++l) {
      d.coeffs[l] = x[l];
      d.coeffs_sqrt2[l] = xr[l];
    }
    d.value = x.eval();
    d.x = std::move(x);
    out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end(), [](const DiagonalSpec& a, const DiagonalSpec& b) { return a.value < b.value; });
  return out;
}

std::vector<DiagonalResidual> diagonal_residual(const SwfModel& model, const CaseGeometry& g,
                                                const std::vector<DiagonalSpec>& diagonals, double eps,
                                                std::size_t samples, int threads) {
  if (samples < 2) throw std::invalid_argument("need at least two samples per diagonal");
  const FieldElement& c0x = corner_exact(g).x;
  long double ymax = 0.0L;
  for (const auto& v : g.quarter.polygon.vertices) ymax = std::max<long double>(ymax, v.y);
  const long double am = std::abs(model.mode().m), an = std::abs(model.mode().n);
  std::vector<DiagonalResidual> out;
  for (const auto& d : diagonals) {
    DiagonalResidual r;
    r.diagonal = d;
    r.samples = samples;
    const FieldElement rel = d.x - c0x;
    r.construction_zero = rel.is_zero();
    const long double X = exact_ld(rel);
    std::vector<long double> vals(samples);
    detail::parallel_for(samples, threads, [&](std::size_t b, std::size_t e) {
      for (std::size_t k = b; k < e; ++k)
        vals[k] = std::abs(model.value_local(X, ymax * k / static_cast<long double>(samples - 1)));
    });
    r.max_abs = *std::max_element(vals.begin(), vals.end());
    long double sx = 0.0L, sxr = 0.0L;
    for (std::size_t l = 1; l < 4; ++l) {
      sx += to_long_double(mp::abs(d.coeffs[l]));
      sxr += to_long_double(mp::abs(d.coeffs_sqrt2[l]));
    }
    r.nominal_bound = 4.0L * kPiL * ((am + an) * sx + an * sxr + 2.0L * am + 4.0L * an) * eps;
    for (const auto& t : model.terms()) {
      // u_x (x_k - c0x) = 2 pi Z w with w = 2 ux_coef (x_k - c0x)
      const FieldElement w = Rational(2) * t.ux_coef * rel;
      if (!half_integral(w)) r.term_bound_valid = false;
      long double s = 0.0L;
      for (std::size_t f = 1; f < kFieldDim; ++f) s += to_long_double(mp::abs(w[f]));
      r.term_bound += 2.0L * kPiL * s * eps;
    }
    out.push_back(std::move(r));
  }
  return out;
}

// ---- nodal line --------------------------------------------------------------------------

NodalEstimate nodal_distance(const SwfModel& model, const CaseGeometry& g, int side, Vec2 point,
                             const SideConstants& sc, double eps) {
  const auto e = side_local(g, side);
  const auto nh = outward_normal(e);
  const long double X = point.x - model.corner_x(), y = point.y;
  const long double am = std::abs(model.mode().m), an = std::abs(model.mode().n);
  const long double scale = (am + an) * static_cast<long double>(model.Z());
  const long double weight = am * sc.J_x.convert_to<long double>() + an * sc.J_y.convert_to<long double>();

  NodalEstimate r;
  r.c1_factor = std::sqrt(kPiL * weight) * std::sqrt(static_cast<long double>(eps));
  r.validity_floor = 4.0L * r.c1_factor;
  const Complex al = model.alignment();
  const long double psi = (al * model.value_local(X, y)).real();
  const auto grad = model.gradient_local(X, y);
  const long double gn = nh[0] * (al * grad[0]).real() + nh[1] * (al * grad[1]).real();
  r.M = std::abs(gn) / scale;

  if (psi == 0.0L) {
    r.valid = true;
    r.order = 0;
    r.reason = "point is a zero of the wave function";
    return r;
  }
  if (r.M > r.validity_floor) {
    r.valid = true;
    r.order = 1;
    r.l = -psi / gn;
    r.scaled = std::abs(scale * r.l);
    return r;
  }
  const auto h = model.hessian_local(X, y);
  const long double hn = nh[0] * nh[0] * (al * h[0]).real() + 2.0L * nh[0] * nh[1] * (al * h[1]).real() +
                         nh[1] * nh[1] * (al * h[2]).real();
  const long double disc = gn * gn - 2.0L * hn * psi;
  if (hn == 0.0L || disc < 0.0L) {
    r.reason = "normal derivative below the validity floor and no real second-order root";
    return r;
  }
  const long double sq = std::sqrt(disc);
  const long double r1 = (-gn + sq) / hn, r2 = (-gn - sq) / hn;
  const long double l = std::abs(r1) < std::abs(r2) ? r1 : r2;
  if (std::abs(scale * l) >= 1.0L) {
    r.reason = "normal derivative below the validity floor and the nearest root is a wavelength away";
    return r;
  }
  r.valid = true;
  r.order = 2;
  r.l = l;
  r.scaled = std::abs(scale * l);
  r.reason = "second order";
  return r;
}

std::vector<NodalSummary> nodal_scan(const SwfModel& model, const CaseGeometry& g, double eps, std::size_t samples) {
  const auto consts = side_constants(g);
  std::vector<NodalSummary> out;
  for (const auto& sc : consts) {
    const auto e = side_local(g, sc.side);
    NodalSummary s;
    s.side = sc.side;
    s.name = sc.name;
    for (std::size_t k = 0; k < samples; ++k) {
      const long double t = (k + 0.5L) / static_cast<long double>(samples);
      const Vec2 p{static_cast<double>(model.corner_x() + e[0] + t * (e[2] - e[0])),
                   static_cast<double>(e[1] + t * (e[3] - e[1]))};
      const NodalEstimate ne = nodal_distance(model, g, sc.side, p, sc, eps);
      s.c1_factor = ne.c1_factor;
      if (!ne.valid) {
        ++s.excluded;
        continue;
      }
      ++s.valid;
      if (ne.order == 2) ++s.second_order;
      s.max_abs_l = std::max(s.max_abs_l, std::abs(ne.l));
      s.max_scaled = std::max(s.max_scaled, ne.scaled);
    }
    out.push_back(std::move(s));
  }
  return out;
}

AccuracyReport spectrum_accuracy_report(const SwfModel& model, const CaseGeometry& g, double eps,
                                        std::size_t samples) {
  AccuracyReport r;
  r.epsilon_pol = envelope_accuracy_bound(g.tangents).epsilon_pol;
  for (const auto& s : nodal_scan(model, g, eps, samples)) r.epsilon_mn = std::max(r.epsilon_mn, double(s.max_abs_l));
  r.composite = r.epsilon_pol + r.epsilon_mn;
  const double am = std::abs(model.mode().m), an = std::abs(model.mode().n);
  for (const auto& sc : side_constants(g))
    r.admissibility = std::max(r.admissibility, (am * sc.J_x.convert_to<double>() + an * sc.J_y.convert_to<double>()) * eps);
  r.admissible = r.admissibility <= 0.01;
  const double ratio = r.epsilon_pol > 0 ? r.epsilon_mn / r.epsilon_pol : 0.0;
  if (ratio >= 1.0 / 3.0 && ratio <= 3.0)
    r.regime = "comparable: envelope deformation and nodal displacement contribute almost equally";
  else if (ratio < 1.0 / 3.0)
    r.regime = "envelope dominated";
  else
    r.regime = "nodal displacement dominated";
  r.eta_statement =
      "a relative spectral accuracy eta exists and tends to zero with epsilon_pol + epsilon_mn for admissible "
      "modes; no numeric value is available";
  if (!r.admissible) r.eta_statement += "; this mode is outside the admissible set, so the statement does not apply";
  return r;
}

// ---- grids -----------------------------------------------------------------------------------

std::vector<GridSample> grid_eval(const SwfModel& model, const CaseGeometry& g, std::size_t n, int threads) {
  if (n == 0) throw std::invalid_argument("grid size must be positive");
  const auto& vs = g.quarter.polygon.vertices;
  double x0 = vs[0].x, x1 = vs[0].x, y0 = vs[0].y, y1 = vs[0].y;
  for (const auto& v : vs) {
    x0 = std::min(x0, v.x);
    x1 = std::max(x1, v.x);
    y0 = std::min(y0, v.y);
    y1 = std::max(y1, v.y);
  }
  // the quarter is convex
  auto inside = [&](Vec2 p) {
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (cross(vs[(i + 1) % vs.size()] - vs[i], p - vs[i]) < 0) return false;
    return true;
  };
  std::vector<GridSample> out(n * n);
  detail::parallel_for(n, threads, [&](std::size_t b, std::size_t e) {
    for (std::size_t j = b; j < e; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        GridSample& s = out[j * n + i];
        s.x = x0 + (x1 - x0) * (i + 0.5) / double(n);
        s.y = y0 + (y1 - y0) * (j + 0.5) / double(n);
        const Complex v = model.value({s.x, s.y});
        s.re = v.real();
        s.im = v.imag();
        s.inside = inside({s.x, s.y});
      }
    }
  });
  return out;
}

}  // namespace stadion
