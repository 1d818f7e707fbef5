#pragma once

// Exact arithmetic in the rational span of
//   X0 = 1, X1 = A = sqrt(2), X2 = B = sqrt(2+sqrt2), X3 = C = sqrt(2-sqrt2),
//   X4 = D = sqrt(2+B), X5 = E = sqrt(2+C), X6 = F = sqrt(2-B), X7 = G = sqrt(2-C).
// The span is closed under multiplication; it is the field generated by the
// cosines of multiples of pi/16.

#include "stadion/rational.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace stadion {

inline constexpr std::size_t kFieldDim = 8;

enum class Generator : std::size_t { One = 0, A, B, C, D, E, F, G };

class FieldElement {
 public:
  FieldElement() = default;
  explicit FieldElement(Rational value) { coeffs_[0] = std::move(value); }
  explicit FieldElement(std::array<Rational, kFieldDim> coeffs) : coeffs_(std::move(coeffs)) {}

  static FieldElement generator(Generator g);
  static FieldElement generator(std::size_t index);
  static FieldElement from_ints(std::initializer_list<long long> coeffs);

  const Rational& operator[](std::size_t q) const { return coeffs_[q]; }
  const std::array<Rational, kFieldDim>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  // Largest generator index with a nonzero coefficient, or -1 for zero.
  int support_degree() const;
  bool in_span(std::size_t highest_index) const { return support_degree() <= int(highest_index); }
  // Least common multiple of the coefficient denominators.
  BigInt denominator_lcm() const;
  bool has_integer_coeffs() const { return denominator_lcm() == 1; }

  double eval() const;
  long double eval_ld() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const Rational& s);
  FieldElement& operator*=(const FieldElement& o);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const Rational& s) { return a *= s; }
  friend FieldElement operator*(const Rational& s, FieldElement a) { return a *= s; }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  /// Human-readable form, e.g. "1/2*B - 1/2*C".
  std::string to_string() const;
  /// Eight "num/den" strings, X0 first.
  std::vector<std::string> to_strings() const;
  static FieldElement from_strings(const std::vector<std::string>& parts);

 private:
  std::array<Rational, kFieldDim> coeffs_{};
};

/// Product of two elements through the generator structure tensor.
FieldElement mul(const FieldElement& a, const FieldElement& b);

/// Multiplicative inverse by exact linear solve of mul(a, x) = 1.
/// Throws std::domain_error when a is singular.
FieldElement inverse(const FieldElement& a);

double eval(const FieldElement& a);

/// Numeric value of generator X_q at long double precision.
long double generator_value(std::size_t q);

/// The structure constant table: generator_product(i, j) = X_i * X_j.
const FieldElement& generator_product(std::size_t i, std::size_t j);

enum class TrigKind { Cosine, Sine };

/// cos or sin of (k * pi / 16) for k in [0, 8]. Throws std::invalid_argument otherwise.
FieldElement from_trig(TrigKind kind, int numerator_of_pi_over_16);

/// cos(k*pi/16) and sin(k*pi/16) for any integer k, via quadrant symmetry.
FieldElement cos_pi16(int k);
FieldElement sin_pi16(int k);

struct FieldPoint {
  FieldElement x;
  FieldElement y;

  friend FieldPoint operator+(const FieldPoint& a, const FieldPoint& b) { return {a.x + b.x, a.y + b.y}; }
  friend FieldPoint operator-(const FieldPoint& a, const FieldPoint& b) { return {a.x - b.x, a.y - b.y}; }
  friend FieldPoint operator*(const FieldElement& s, const FieldPoint& p) { return {s * p.x, s * p.y}; }
  friend bool operator==(const FieldPoint& a, const FieldPoint& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const FieldPoint& a, const FieldPoint& b) { return !(a == b); }
  bool is_zero() const { return x.is_zero() && y.is_zero(); }
};

FieldElement dot(const FieldPoint& a, const FieldPoint& b);
FieldElement cross(const FieldPoint& a, const FieldPoint& b);

}  // namespace stadion
