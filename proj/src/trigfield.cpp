#include "stadion/trigfield.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace stadion {

namespace {

constexpr const char* kNames[kFieldDim] = {"1", "A", "B", "C", "D", "E", "F", "G"};

// Upper triangle of the product table over the irrational generators,
// row/column order A..G. Each entry lists (coefficient, generator) pairs.
struct Term {
  int coeff;
  std::size_t gen;
};
using Entry = std::vector<Term>;

enum : std::size_t { k1 = 0, kA, kB, kC, kD, kE, kF, kG };

std::array<std::array<FieldElement, kFieldDim>, kFieldDim> build_table() {
  const Entry upper[7][7] = {
      // A
      {{{2, k1}}, {{1, kB}, {1, kC}}, {{1, kB}, {-1, kC}}, {{1, kE}, {1, kG}}, {{1, kD}, {1, kF}},
       {{1, kE}, {-1, kG}}, {{1, kD}, {-1, kF}}},
      // B
      {{}, {{2, k1}, {1, kA}}, {{1, kA}}, {{1, kD}, {1, kE}}, {{1, kD}, {1, kG}}, {{-1, kF}, {1, kG}},
       {{1, kE}, {1, kF}}},
      // C
      {{}, {}, {{2, k1}, {-1, kA}}, {{1, kF}, {1, kG}}, {{1, kE}, {-1, kF}}, {{1, kD}, {-1, kE}},
       {{1, kD}, {-1, kG}}},
      // D
      {{}, {}, {}, {{2, k1}, {1, kB}}, {{1, kA}, {1, kB}}, {{1, kC}}, {{1, kA}, {1, kC}}},
      // E
      {{}, {}, {}, {}, {{2, k1}, {1, kC}}, {{1, kA}, {-1, kC}}, {{1, kB}}},
      // F
      {{}, {}, {}, {}, {}, {{2, k1}, {-1, kB}}, {{-1, kA}, {1, kB}}},
      // G
      {{}, {}, {}, {}, {}, {}, {{2, k1}, {-1, kC}}},
  };

  std::array<std::array<FieldElement, kFieldDim>, kFieldDim> t;
  for (std::size_t i = 0; i < kFieldDim; ++i) {
    t[0][i] = FieldElement::generator(i);
    t[i][0] = FieldElement::generator(i);
  }
  for (std::size_t i = 0; i < 7; ++i) {
    for (std::size_t j = i; j < 7; ++j) {
      std::array<Rational, kFieldDim> c{};
      for (const auto& term : upper[i][j]) c[term.gen] += term.coeff;
      t[i + 1][j + 1] = FieldElement(c);
      t[j + 1][i + 1] = FieldElement(c);
    }
  }
  return t;
}

const std::array<std::array<FieldElement, kFieldDim>, kFieldDim>& table() {
  static const auto t = build_table();
  return t;
}

std::array<long double, kFieldDim> build_values() {
  const long double a = std::sqrt(2.0L);
  const long double b = std::sqrt(2.0L + a);
  const long double c = std::sqrt(2.0L - a);
  return {1.0L, a, b, c, std::sqrt(2.0L + b), std::sqrt(2.0L + c), std::sqrt(2.0L - b),
          std::sqrt(2.0L - c)};
}

}  // namespace

FieldElement FieldElement::generator(Generator g) { return generator(static_cast<std::size_t>(g)); }

FieldElement FieldElement::generator(std::size_t index) {
  if (index >= kFieldDim) throw std::out_of_range("generator index out of range");
  FieldElement e;
  e.coeffs_[index] = 1;
  return e;
}

FieldElement FieldElement::from_ints(std::initializer_list<long long> coeffs) {
  if (coeffs.size() > kFieldDim) throw std::invalid_argument("too many coefficients");
  FieldElement e;
  std::size_t i = 0;
  for (long long c : coeffs) e.coeffs_[i++] = c;
  return e;
}

bool FieldElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

int FieldElement::support_degree() const {
  for (int q = int(kFieldDim) - 1; q >= 0; --q)
    if (coeffs_[q] != 0) return q;
  return -1;
}

BigInt FieldElement::denominator_lcm() const {
  BigInt l = 1;
  for (const auto& c : coeffs_) l = lcm(l, boost::multiprecision::denominator(c));
  return l;
}

double FieldElement::eval() const { return static_cast<double>(eval_ld()); }

long double FieldElement::eval_ld() const {
  long double s = 0.0L;
  for (std::size_t q = 0; q < kFieldDim; ++q)
    if (coeffs_[q] != 0) s += to_long_double(coeffs_[q]) * generator_value(q);
  return s;
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  for (std::size_t q = 0; q < kFieldDim; ++q) coeffs_[q] += o.coeffs_[q];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  for (std::size_t q = 0; q < kFieldDim; ++q) coeffs_[q] -= o.coeffs_[q];
  return *this;
}

FieldElement& FieldElement::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) { return *this = mul(*this, o); }

FieldElement operator*(const FieldElement& a, const FieldElement& b) { return mul(a, b); }

std::string FieldElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t q = 0; q < kFieldDim; ++q) {
    const Rational& c = coeffs_[q];
    if (c == 0) continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const bool unit = mag == 1;
    if (q == 0) {
      os << mag;
    } else {
      if (!unit) os << mag << "*";
      os << kNames[q];
    }
  }
  if (first) os << "0";
  return os.str();
}

std::vector<std::string> FieldElement::to_strings() const {
  std::vector<std::string> out;
  out.reserve(kFieldDim);
  for (const auto& c : coeffs_) out.push_back(stadion::to_string(c));
  return out;
}

FieldElement FieldElement::from_strings(const std::vector<std::string>& parts) {
  if (parts.size() != kFieldDim) throw std::invalid_argument("field element needs 8 coefficients");
  FieldElement e;
  for (std::size_t q = 0; q < kFieldDim; ++q) e.coeffs_[q] = parse_rational(parts[q]);
  return e;
}

const FieldElement& generator_product(std::size_t i, std::size_t j) { return table().at(i).at(j); }

FieldElement mul(const FieldElement& a, const FieldElement& b) {
  std::array<Rational, kFieldDim> out{};
  const auto& t = table();
  for (std::size_t i = 0; i < kFieldDim; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < kFieldDim; ++j) {
      if (b[j] == 0) continue;
      const Rational w = a[i] * b[j];
      const auto& prod = t[i][j];
      for (std::size_t q = 0; q < kFieldDim; ++q)
        if (prod[q] != 0) out[q] += w * prod[q];
    }
  }
  return FieldElement(out);
}

FieldElement inverse(const FieldElement& a) {
  // Column j of m is the coefficient vector of a * X_j.
  std::array<std::array<Rational, kFieldDim + 1>, kFieldDim> m{};
  for (std::size_t j = 0; j < kFieldDim; ++j) {
    const FieldElement col = mul(a, FieldElement::generator(j));
    for (std::size_t i = 0; i < kFieldDim; ++i) m[i][j] = col[i];
  }
  m[0][kFieldDim] = 1;

  for (std::size_t col = 0; col < kFieldDim; ++col) {
    std::size_t pivot = col;
    while (pivot < kFieldDim && m[pivot][col] == 0) ++pivot;
    if (pivot == kFieldDim) throw std::domain_error("singular field element has no inverse: " + a.to_string());
    std::swap(m[pivot], m[col]);
    const Rational inv = 1 / m[col][col];
    for (auto& v : m[col]) v *= inv;
    for (std::size_t r = 0; r < kFieldDim; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c <= kFieldDim; ++c) m[r][c] -= f * m[col][c];
    }
  }
  std::array<Rational, kFieldDim> x{};
  for (std::size_t i = 0; i < kFieldDim; ++i) x[i] = m[i][kFieldDim];
  return FieldElement(x);
}

double eval(const FieldElement& a) { return a.eval(); }

long double generator_value(std::size_t q) {
  static const auto values = build_values();
  return values.at(q);
}

FieldElement from_trig(TrigKind kind, int k) {
  if (k < 0 || k > 8) throw std::invalid_argument("from_trig supports k*pi/16 with k in [0, 8]");
  // cos(k*pi/16) for k = 0..8 as (coefficient numerator over 2, generator)
  static const std::size_t half_gen[9] = {k1, kD, kB, kE, kA, kG, kC, kF, 0};
  const int idx = kind == TrigKind::Cosine ? k : 8 - k;
  if (idx == 0) return FieldElement(Rational(1));
  if (idx == 8) return FieldElement();
  return FieldElement::generator(half_gen[idx]) * Rational(1, 2);
}

FieldElement cos_pi16(int k) {
  k %= 32;
  if (k < 0) k += 32;
  if (k > 16) k = 32 - k;  // even
  if (k > 8) return -from_trig(TrigKind::Cosine, 16 - k);
  return from_trig(TrigKind::Cosine, k);
}

FieldElement sin_pi16(int k) { return cos_pi16(8 - k); }

FieldElement dot(const FieldPoint& a, const FieldPoint& b) { return a.x * b.x + a.y * b.y; }
FieldElement cross(const FieldPoint& a, const FieldPoint& b) { return a.x * b.y - a.y * b.x; }

}  // namespace stadion
