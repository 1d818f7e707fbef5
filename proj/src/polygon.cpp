#include "stadion/polygon.hpp"

#include "stadion/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace stadion {

namespace {

Rational angle_over_pi(double angle, long max_den) {
  const double x = angle / std::numbers::pi;
  Rational q = rationalize(x, 1e-9);
  if (boost::multiprecision::denominator(q) > max_den)
    throw std::domain_error("irrational polygon: angle/pi = " + std::to_string(x) +
                            " has no small rational form; rationalize the envelope first");
  return q;
}

}  // namespace

RationalPolygon RationalPolygon::from_vertices(std::vector<Vec2> vertices,
                                               std::optional<std::vector<FieldPoint>> exact,
                                               long max_denominator) {
  const std::size_t n = vertices.size();
  if (n < 3) throw std::invalid_argument("polygon needs at least three vertices");
  if (exact && exact->size() != n) throw std::invalid_argument("exact vertex count mismatch");

  double area = 0.0;
  for (std::size_t i = 0; i < n; ++i) area += cross(vertices[i], vertices[(i + 1) % n]);
  if (area <= 0.0) throw std::invalid_argument("polygon must be counter-clockwise and non-degenerate");

  RationalPolygon p;
  p.vertices = std::move(vertices);
  p.exact = std::move(exact);
  p.side_direction.resize(n);
  p.interior_angle.resize(n);
  p.side_names.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 d = p.vertex(i + 1) - p.vertex(i);
    if (norm(d) < 1e-14) throw std::invalid_argument("polygon has a zero-length side");
    double a = std::atan2(d.y, d.x);
    if (a < 0) a += 2 * std::numbers::pi;
    Rational q = angle_over_pi(a, max_denominator);
    if (q >= 2) q -= 2;
    p.side_direction[i] = q;
    p.side_names[i] = "s" + std::to_string(i + 1);
  }
  for (std::size_t i = 0; i < n; ++i) {
    Rational turn = p.side_direction[i] - p.side_direction[(i + n - 1) % n];
    while (turn < 0) turn += 2;
    if (turn > 1) turn -= 2;
    p.interior_angle[i] = 1 - turn;
  }
  return p;
}

RationalPolygon unit_square() {
  std::vector<Vec2> v = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const FieldElement zero, one(Rational(1));
  std::vector<FieldPoint> e = {{zero, zero}, {one, zero}, {one, one}, {zero, one}};
  RationalPolygon p = RationalPolygon::from_vertices(v, e);
  p.side_names = {"a", "right", "top", "b"};
  p.side_a = 0;
  p.side_b = 3;
  return p;
}

}  // namespace stadion
