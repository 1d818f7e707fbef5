#pragma once

#include "stadion/rational.hpp"
#include "stadion/trigfield.hpp"
#include "stadion/vec2.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stadion {

/// A simple counter-clockwise polygon whose side directions are rational
/// multiples of pi. Side i runs from vertex i to vertex i+1.
struct RationalPolygon {
  std::vector<Vec2> vertices;
  std::optional<std::vector<FieldPoint>> exact;  // present when all coordinates are field elements
  std::vector<Rational> side_direction;          // angle / pi, in [0, 2)
  std::vector<Rational> interior_angle;          // angle / pi
  std::vector<std::string> side_names;
  int side_a = -1;  // Dirichlet seed sides (the symmetry axes for a stadium quarter)
  int side_b = -1;

  std::size_t size() const { return vertices.size(); }
  Vec2 vertex(std::size_t i) const { return vertices[i % vertices.size()]; }

  /// Builds the angle data from vertex coordinates. Angles are recovered as
  /// rationals with denominator at most max_denominator; anything else is
  /// rejected as irrational (std::domain_error).
  static RationalPolygon from_vertices(std::vector<Vec2> vertices,
                                       std::optional<std::vector<FieldPoint>> exact = std::nullopt,
                                       long max_denominator = 1024);
};

/// The axis-aligned unit square [0,1]^2 with sides a (bottom) and b (left).
RationalPolygon unit_square();

}  // namespace stadion
