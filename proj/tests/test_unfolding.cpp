#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "stadion/pipeline.hpp"
#include "stadion/unfolding.hpp"

#include <cmath>
#include <set>

using namespace stadion;

namespace {

const CaseGeometry& geometry(CaseLabel label) {
  static const CaseGeometry a = build_case(preset(CaseLabel::A));
  static const CaseGeometry b = build_case(preset(CaseLabel::B));
  static const CaseGeometry c = build_case(preset(CaseLabel::C));
  return label == CaseLabel::A ? a : label == CaseLabel::B ? b : c;
}

// Brute-force closure for the square: reflect in every side of every copy
// until no new (orientation, translation) pair appears, with translations
// reduced modulo the torus lattice 2Z x 2Z.
std::size_t square_closure_oracle() {
  struct Copy { int sx, sy; int tx, ty; };
  std::vector<Copy> seen{{1, 1, 0, 0}};
  auto key = [](const Copy& c) { return std::tuple(c.sx, c.sy, ((c.tx % 2) + 2) % 2, ((c.ty % 2) + 2) % 2); };
  std::set<std::tuple<int, int, int, int>> keys{key(seen[0])};
  for (std::size_t i = 0; i < seen.size(); ++i) {
    const Copy c = seen[i];
    // reflections in x = tx, x = tx + sx, y = ty, y = ty + sy
    for (int s = 0; s < 4; ++s) {
      Copy n = c;
      if (s < 2) { n.sx = -c.sx; n.tx = c.tx + (s == 0 ? 0 : 2 * c.sx); }
      else { n.sy = -c.sy; n.ty = c.ty + (s == 2 ? 0 : 2 * c.sy); }
      if (keys.insert(key(n)).second) seen.push_back(n);
    }
  }
  return seen.size();
}

}  // namespace

TEST_CASE("unit square") {
  const auto sq = unit_square();
  const Epp epp = build_epp(sq);
  CHECK(epp.copies().size() == 4);
  CHECK(epp.copies().size() == square_closure_oracle());
  CHECK(is_maximal(epp));
  CHECK(genus(sq) == 1);
  CHECK(euler_genus(epp) == 1);
  auto periods = enumerate_periods(epp);
  const auto s = summarize(epp, periods);
  CHECK(s.independent_period_count == 2);
  CHECK(s.linking_period_count == 2);
}

TEST_CASE("seed-only pattern is not maximal") {
  EppOptions o;
  o.use_polygon_seeds = false;
  o.grow = false;
  const Epp epp = build_epp(unit_square(), o);
  CHECK(epp.copies().size() == 1);
  CHECK(!is_maximal(epp));
}

TEST_CASE("irrational polygons and copy budget") {
  RationalPolygon p = unit_square();
  p.side_direction[1] = Rational(1, 2003);
  CHECK_THROWS_AS(build_epp(p), std::domain_error);
  EppOptions o;
  o.copy_budget = 2;
  CHECK_THROWS_AS(build_epp(unit_square(), o), std::runtime_error);
}

TEST_CASE("case A unfolding") {
  const auto& g = geometry(CaseLabel::A);
  CHECK(genus(g.quarter.polygon) == 13);
  CHECK(g.summary.genus == 13);
  CHECK(g.summary.euler_genus == 13);
  CHECK(g.summary.independent_period_count == 26);
  CHECK(g.summary.linking_period_count == 29);
  // the printed prefactor 4 is a common denominator; this unfolding needs only 2
  CHECK(4 % int(g.summary.coefficient_lcm) == 0);
  CHECK(g.summary.highest_generator == 3);
  CHECK(is_maximal(g.epp));
  // the first block is the envelope: four copies reflected in sides a and b
  CHECK(g.epp.copies().size() % 4 == 0);
  CHECK(g.epp.copies()[0].block == 0);
  for (const auto& p : g.periods) {
    REQUIRE(p.a_x.has_value());
    CHECK(p.a_x->in_span(3));
    CHECK(p.a_y->in_span(3));
    CHECK(4 % int(p.a_x->denominator_lcm()) == 0);
    CHECK(4 % int(p.a_y->denominator_lcm()) == 0);
  }
}

TEST_CASE("case B and C unfolding") {
  for (auto label : {CaseLabel::B, CaseLabel::C}) {
    const auto& g = geometry(label);
    CHECK(genus(g.quarter.polygon) == 33);
    CHECK(g.summary.euler_genus == 33);
    CHECK(g.summary.independent_period_count == 66);
    CHECK(g.summary.linking_period_count == 73);
    CHECK(g.summary.highest_generator == 7);
    CHECK(is_maximal(g.epp));
  }
}

TEST_CASE("decomposition") {
  for (auto label : {CaseLabel::A, CaseLabel::B, CaseLabel::C}) {
    const auto& g = geometry(label);
    const auto [ax, ay] = decompose_period(g.base_x, g.base_x, g.base_y);
    CHECK(ax == FieldElement(Rational(1)));
    CHECK(ay.is_zero());
    CHECK(g.base_x.vector.x == doctest::Approx(2.0));
    CHECK(g.base_y.vector.y == doctest::Approx(2.0));
    for (const auto& p : g.periods) {
      const Vec2 v = p.a_x->eval() * g.base_x.vector + p.a_y->eval() * g.base_y.vector;
      CHECK(norm(v - p.vector) <= 1e-10 * std::max(1.0, norm(p.vector)));
    }
  }
  Period bare;
  bare.vector = {1, 0};
  CHECK_THROWS_AS(decompose_period(bare, geometry(CaseLabel::A).base_x, geometry(CaseLabel::A).base_y),
                  std::domain_error);
}

TEST_CASE("signs follow reflection parity") {
  for (auto label : {CaseLabel::A, CaseLabel::B}) {
    const auto& epp = geometry(label).epp;
    for (const auto& c : epp.copies()) {
      CHECK(c.parity == c.g.sign());
      const auto m = epp.matrix(c);
      CHECK(m[0] * m[3] - m[1] * m[2] == doctest::Approx(c.parity));
      // reflecting twice in the same side returns the copy's class
      for (int s = 0; s < int(epp.polygon().size()); ++s) {
        const PolygonCopy r = epp.reflect(c, s);
        CHECK(r.parity == -c.parity);
        CHECK(epp.reflect(r, s).g == c.g);
      }
    }
  }
}

TEST_CASE("gluings pair parallel sides by translation") {
  const auto& g = geometry(CaseLabel::A);
  for (const auto& gl : g.gluings) {
    const Vec2 a0 = g.epp.vertex(gl.source.copy, gl.source.side);
    const Vec2 a1 = g.epp.vertex(gl.source.copy, gl.source.side + 1);
    const Vec2 b0 = g.epp.vertex(gl.target.copy, gl.target.side);
    const Vec2 b1 = g.epp.vertex(gl.target.copy, gl.target.side + 1);
    // opposite orientation: the target side runs backwards
    CHECK(std::abs(cross(a1 - a0, b1 - b0)) < 1e-9);
    const bool straight = norm(a0 + gl.vector - b0) < 1e-9 && norm(a1 + gl.vector - b1) < 1e-9;
    const bool reversed = norm(a0 + gl.vector - b1) < 1e-9 && norm(a1 + gl.vector - b0) < 1e-9;
    CHECK((straight || reversed));
  }
}
