#include "stadion/unfolding.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace stadion {

namespace {

constexpr double kPi = std::numbers::pi;

int mod(int a, int m) {
  a %= m;
  return a < 0 ? a + m : a;
}

Vec2 rotate(Vec2 p, double a) {
  const double c = std::cos(a), s = std::sin(a);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

FieldPoint rotate_exact(const FieldPoint& p, int k16) {
  const FieldElement c = cos_pi16(k16), s = sin_pi16(k16);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

// Reflection of a point in the line through `a` with direction angle
// two_theta/2, i.e. Rot(two_theta) conj (p - a) + a.
Vec2 mirror(Vec2 p, Vec2 a, double two_theta) {
  Vec2 d = p - a;
  d.y = -d.y;
  return rotate(d, two_theta) + a;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int root(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(int a, int b) { parent[root(a)] = root(b); }
};

std::string side_label(const PolygonCopy& c, int side) {
  const int parts[3] = {c.block + 1, c.index_in_block + 1, side + 1};
  const bool wide = parts[0] > 9 || parts[1] > 9 || parts[2] > 9;
  std::string s;
  for (int i = 0; i < 3; ++i) {
    if (wide && i > 0) s += '.';
    s += std::to_string(parts[i]);
  }
  return s;
}

}  // namespace

std::string PolygonCopy::id() const { return std::to_string(block + 1) + "." + std::to_string(index_in_block + 1); }

int Epp::block_count() const {
  int b = 0;
  for (const auto& c : copies_) b = std::max(b, c.block + 1);
  return b;
}

Vec2 Epp::apply(const PolygonCopy& c, Vec2 p) const {
  if (c.g.flip) p.y = -p.y;
  return rotate(p, c.g.rot * kPi / k_) + c.t;
}

FieldPoint Epp::apply_exact(const PolygonCopy& c, const FieldPoint& p) const {
  if (!exact_ || !c.t_exact) throw std::domain_error("EPP has no exact coordinates");
  FieldPoint q = p;
  if (c.g.flip) q.y = -q.y;
  return rotate_exact(q, c.g.rot * (16 / k_)) + *c.t_exact;
}

Vec2 Epp::vertex(std::size_t copy, std::size_t v) const { return apply(copies_.at(copy), polygon_.vertex(v)); }

std::array<double, 4> Epp::matrix(const PolygonCopy& c) const {
  const double a = c.g.rot * kPi / k_;
  const double cs = std::cos(a), sn = std::sin(a), f = c.g.flip ? -1.0 : 1.0;
  return {cs, -sn * f, sn, cs * f};
}

int Epp::find(DihedralElement g) const {
  for (std::size_t i = 0; i < copies_.size(); ++i)
    if (copies_[i].g == g) return int(i);
  return -1;
}

PolygonCopy Epp::reflect(const PolygonCopy& c, int side) const {
  const int n = int(polygon_.size());
  if (side < 0 || side >= n) throw std::out_of_range("side index out of range");
  const Rational dsq = polygon_.side_direction[side] * k_;
  const int ds = boost::multiprecision::numerator(dsq).convert_to<int>();
  const int theta_w = c.g.rot + (c.g.flip ? -ds : ds);
  const int two_theta = 2 * theta_w;

  PolygonCopy r;
  r.g.rot = mod(two_theta - c.g.rot, 2 * k_);
  r.g.flip = !c.g.flip;
  r.parity = -c.parity;
  const Vec2 a = apply(c, polygon_.vertex(side));
  r.t = mirror(c.t, a, two_theta * kPi / k_);
  if (exact_ && c.t_exact) {
    const FieldPoint ae = apply_exact(c, (*polygon_.exact)[side]);
    FieldPoint d = *c.t_exact - ae;
    d.y = -d.y;
    r.t_exact = rotate_exact(d, two_theta * (16 / k_)) + ae;
  }
  return r;
}

Epp build_epp(const RationalPolygon& polygon, const EppOptions& options) {
  Epp epp;
  epp.polygon_ = polygon;
  BigInt k = 1;
  for (const auto& d : polygon.side_direction) k = lcm(k, boost::multiprecision::denominator(d));
  if (k > 1024) throw std::domain_error("side directions need denominators above 1024; rationalize first");
  epp.k_ = k.convert_to<int>();
  epp.exact_ = polygon.exact.has_value() && 16 % epp.k_ == 0;

  std::vector<int> seeds = options.seed_sides;
  if (seeds.empty() && options.use_polygon_seeds) {
    if (polygon.side_a >= 0) seeds.push_back(polygon.side_a);
    if (polygon.side_b >= 0) seeds.push_back(polygon.side_b);
  }
  for (int s : seeds)
    if (s < 0 || s >= int(polygon.size())) throw std::invalid_argument("seed side index out of range");

  PolygonCopy first;
  if (epp.exact_) first.t_exact = FieldPoint{};

  auto add_block = [&](PolygonCopy c) {
    const int block = epp.block_count();
    std::vector<PolygonCopy> blk;
    c.block = block;
    c.index_in_block = 0;
    blk.push_back(c);
    auto known = [&](DihedralElement g) {
      if (epp.find(g) >= 0) return true;
      return std::any_of(blk.begin(), blk.end(), [&](const PolygonCopy& x) { return x.g == g; });
    };
    for (std::size_t i = 0; i < blk.size(); ++i) {
      for (int s : seeds) {
        PolygonCopy r = epp.reflect(blk[i], s);
        if (known(r.g)) continue;
        r.block = block;
        r.index_in_block = int(blk.size());
        blk.push_back(r);
      }
    }
    epp.copies_.insert(epp.copies_.end(), blk.begin(), blk.end());
    if (epp.copies_.size() > options.copy_budget) throw std::runtime_error("EPP construction exceeded the copy budget");
  };

  add_block(first);
  if (!options.grow) return epp;

  const int n = int(polygon.size());
  while (epp.copies_.size() < epp.group_order()) {
    // Grow towards the anchor: reflect in the side nearest to it that yields
    // a new orientation class.
    int best_copy = -1, best_side = -1;
    double best_dist = INFINITY;
    for (int ci = 0; ci < int(epp.copies_.size()); ++ci) {
      for (int s = 0; s < n; ++s) {
        if (std::find(seeds.begin(), seeds.end(), s) != seeds.end()) continue;
        const PolygonCopy r = epp.reflect(epp.copies_[ci], s);
        if (epp.find(r.g) >= 0) continue;
        const Vec2 a = epp.vertex(ci, s), b = epp.vertex(ci, s + 1);
        const Vec2 d = b - a;
        const double dist = std::abs(cross(d, options.anchor - a)) / norm(d);
        if (dist < best_dist - 1e-9) {
          best_dist = dist;
          best_copy = ci;
          best_side = s;
        }
      }
    }
    if (best_copy < 0) throw std::runtime_error("EPP growth stalled before reaching maximality");
    add_block(epp.reflect(epp.copies_[best_copy], best_side));
  }
  return epp;
}

bool is_maximal(const Epp& epp) {
  const auto& cs = epp.copies();
  for (const auto& c : cs)
    for (int s = 0; s < int(epp.polygon().size()); ++s)
      if (epp.find(epp.reflect(c, s).g) < 0) return false;
  return true;
}

std::vector<Gluing> enumerate_gluings(const Epp& epp) {
  const auto& cs = epp.copies();
  const int n = int(epp.polygon().size());
  std::set<std::tuple<int, int, int>> seen;
  std::vector<Gluing> out;
  for (int ci = 0; ci < int(cs.size()); ++ci) {
    for (int s = 0; s < n; ++s) {
      const PolygonCopy r = epp.reflect(cs[ci], s);
      const int cj = epp.find(r.g);
      if (cj < 0) throw std::runtime_error("EPP is not maximal; gluings are undefined");
      if (!seen.insert({std::min(ci, cj), std::max(ci, cj), s}).second) continue;
      Gluing g;
      g.source = {ci, s};
      g.target = {cj, s};
      g.vector = cs[cj].t - r.t;
      if (r.t_exact && cs[cj].t_exact) {
        g.exact = *cs[cj].t_exact - *r.t_exact;
        g.zero = g.exact->is_zero();
      } else {
        g.zero = norm(g.vector) < 1e-9;
      }
      if (g.zero) g.vector = {0.0, 0.0};
      out.push_back(g);
    }
  }
  return out;
}

std::vector<Period> enumerate_periods(const Epp& epp) {
  const auto& cs = epp.copies();
  std::vector<Period> out;
  for (const auto& g : enumerate_gluings(epp)) {
    if (g.zero) continue;
    bool dup = false;
    for (auto& p : out) {
      bool same;
      if (p.exact && g.exact)
        same = *p.exact == *g.exact || *p.exact == FieldPoint{-g.exact->x, -g.exact->y};
      else
        same = norm(p.vector - g.vector) < 1e-9 || norm(p.vector + g.vector) < 1e-9;
      if (same) {
        ++p.multiplicity;
        dup = true;
        break;
      }
    }
    if (dup) continue;
    Period p;
    p.source = g.source;
    p.target = g.target;
    p.vector = g.vector;
    p.exact = g.exact;
    p.label = side_label(cs[g.source.copy], g.source.side) + "->" + side_label(cs[g.target.copy], g.target.side);
    out.push_back(p);
  }
  return out;
}

std::pair<FieldElement, FieldElement> decompose_period(const Period& p, const Period& bx, const Period& by) {
  if (!p.exact || !bx.exact || !by.exact) throw std::domain_error("period decomposition needs exact coordinates");
  const FieldElement det = cross(*bx.exact, *by.exact);
  if (det.is_zero()) throw std::domain_error("base periods are parallel");
  const FieldElement inv = inverse(det);
  FieldElement ax = cross(*p.exact, *by.exact) * inv;
  FieldElement ay = cross(*bx.exact, *p.exact) * inv;
  const Vec2 back = ax.eval() * bx.vector + ay.eval() * by.vector;
  if (norm(back - p.vector) > 1e-8 * std::max(1.0, norm(p.vector)))
    throw std::domain_error("period decomposition residual too large: geometry inconsistency");
  return {std::move(ax), std::move(ay)};
}

std::pair<Period, Period> base_periods(const std::vector<Period>& periods) {
  auto pick = [&](Vec2 want) -> Period {
    for (const auto& p : periods) {
      if (norm(p.vector - want) < 1e-9) return p;
      if (norm(p.vector + want) < 1e-9) {
        Period q = p;
        std::swap(q.source, q.target);
        q.vector = -1.0 * p.vector;
        if (p.exact) q.exact = FieldPoint{-p.exact->x, -p.exact->y};
        const auto arrow = p.label.find("->");
        q.label = p.label.substr(arrow + 2) + "->" + p.label.substr(0, arrow);
        return q;
      }
    }
    throw std::runtime_error("no base period of length 2 along the axis");
  };
  return {pick({2.0, 0.0}), pick({0.0, 2.0})};
}

void decompose_all(std::vector<Period>& periods, const Period& bx, const Period& by) {
  for (auto& p : periods) {
    auto [ax, ay] = decompose_period(p, bx, by);
    p.a_x = std::move(ax);
    p.a_y = std::move(ay);
  }
}

int genus(const RationalPolygon& polygon) {
  BigInt big_n = 1;
  for (const auto& a : polygon.interior_angle) {
    if (a <= 0) throw std::domain_error("non-positive vertex angle");
    big_n = lcm(big_n, boost::multiprecision::denominator(a));
  }
  Rational sum = 0;
  for (const auto& a : polygon.interior_angle) {
    const Rational m = boost::multiprecision::numerator(a), n = boost::multiprecision::denominator(a);
    sum += (m - 1) / n;
  }
  const Rational g = 1 + Rational(big_n) / 2 * sum;
  if (boost::multiprecision::denominator(g) != 1) throw std::domain_error("genus formula gave a non-integer");
  return boost::multiprecision::numerator(g).convert_to<int>();
}

int euler_genus(const Epp& epp) {
  const int nc = int(epp.copies().size());
  const int ns = int(epp.polygon().size());
  UnionFind uf(std::size_t(nc) * ns);
  const auto gl = enumerate_gluings(epp);
  for (const auto& g : gl) {
    const int s = g.source.side, s1 = (s + 1) % ns;
    uf.join(g.source.copy * ns + s, g.target.copy * ns + s);
    uf.join(g.source.copy * ns + s1, g.target.copy * ns + s1);
  }
  std::set<int> classes;
  for (int i = 0; i < nc * ns; ++i) classes.insert(uf.root(i));
  const int chi = int(classes.size()) - int(gl.size()) + nc;
  if ((2 - chi) % 2 != 0) throw std::runtime_error("glued EPP is not an orientable closed surface");
  return (2 - chi) / 2;
}

UnfoldingSummary summarize(const Epp& epp, const std::vector<Period>& decomposed) {
  UnfoldingSummary s;
  s.genus = genus(epp.polygon());
  s.euler_genus = euler_genus(epp);
  s.independent_period_count = 2 * s.euler_genus;
  s.linking_period_count = int(decomposed.size());
  const auto gl = enumerate_gluings(epp);
  s.gluing_count = int(gl.size());
  s.internal_gluing_count = int(std::count_if(gl.begin(), gl.end(), [](const Gluing& g) { return g.zero; }));
  s.copy_count = epp.copies().size();
  s.block_count = epp.block_count();
  for (const auto& p : decomposed) {
    for (const auto* a : {&p.a_x, &p.a_y}) {
      if (!a->has_value()) continue;
      s.coefficient_lcm = lcm(s.coefficient_lcm, (*a)->denominator_lcm());
      s.highest_generator = std::max(s.highest_generator, (*a)->support_degree());
    }
  }
  return s;
}

}  // namespace stadion
