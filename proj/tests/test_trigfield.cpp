#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "stadion/rational.hpp"
#include "stadion/trigfield.hpp"
#include "table_products.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace stadion;

namespace {

FieldElement g(Generator q) { return FieldElement::generator(q); }
FieldElement one() { return FieldElement(Rational(1)); }

FieldElement random_element(std::mt19937& rng, int lo = -8, int hi = 8) {
  std::uniform_int_distribution<int> num(lo, hi), den(1, 4);
  std::array<Rational, kFieldDim> c;
  for (auto& x : c) x = Rational(num(rng), den(rng));
  return FieldElement(c);
}

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(to_string(Rational(3, 6)) == "1/2");
  CHECK(to_string(Rational(4)) == "4/1");
  CHECK(parse_rational("-7/21") == Rational(-1, 3));
  CHECK(parse_rational("5") == Rational(5));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(exact_rational(0.5) == Rational(1, 2));
  CHECK(exact_rational(0.1) != Rational(1, 10));
  CHECK(lcm(BigInt(4), BigInt(6)) == 12);
}

TEST_CASE("printed products") {
  CHECK(table::products().size() == 28);
  for (const auto& e : table::products()) {
    INFO("X" << e.i << " * X" << e.j);
    const auto prod = mul(FieldElement::generator(std::size_t(e.i)), FieldElement::generator(std::size_t(e.j)));
    CHECK(prod == table::element(e.c));
    CHECK(std::abs(prod.eval() - generator_value(e.i) * generator_value(e.j)) < 1e-12);
  }
}

TEST_CASE("table entries") {
  CHECK(mul(g(Generator::A), g(Generator::A)) == FieldElement(Rational(2)));
  CHECK(mul(g(Generator::B), g(Generator::C)) == g(Generator::A));
  CHECK(mul(g(Generator::A), g(Generator::B)) == g(Generator::B) + g(Generator::C));
  CHECK(std::abs(eval(mul(g(Generator::A), g(Generator::B)) - (g(Generator::B) + g(Generator::C)))) < 1e-12);
  std::mt19937 rng(7);
  for (int i = 0; i < 20; ++i) {
    const auto e = random_element(rng);
    CHECK(mul(one(), e) == e);
  }
}

TEST_CASE("generator values") {
  CHECK(eval(one()) == 1.0);
  CHECK(g(Generator::B).eval() == doctest::Approx(1.8477590650225735).epsilon(1e-15));
  CHECK(generator_value(4) == doctest::Approx(std::sqrt(2 + std::sqrt(2 + std::sqrt(2.0)))).epsilon(1e-15));
  for (std::size_t i = 0; i < kFieldDim; ++i)
    for (std::size_t j = 0; j < kFieldDim; ++j)
      CHECK(std::abs(generator_product(i, j).eval() - generator_value(i) * generator_value(j)) < 1e-12);
}

TEST_CASE("commutative and associative on generators") {
  for (std::size_t i = 0; i < kFieldDim; ++i)
    for (std::size_t j = 0; j < kFieldDim; ++j) {
      const auto a = FieldElement::generator(i), b = FieldElement::generator(j);
      CHECK(mul(a, b) == mul(b, a));
      for (std::size_t k = 0; k < kFieldDim; ++k) {
        const auto c = FieldElement::generator(k);
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
      }
    }
}

TEST_CASE("distributive and evaluation homomorphism") {
  std::mt19937 rng(11);
  for (int t = 0; t < 50; ++t) {
    const auto a = random_element(rng), b = random_element(rng), c = random_element(rng);
    CHECK(mul(a, b + c) == mul(a, b) + mul(a, c));
    const double ab = a.eval() * b.eval();
    CHECK(std::abs(mul(a, b).eval() - ab) <= 1e-12 * (1 + std::abs(ab)));
  }
}

TEST_CASE("inverses") {
  CHECK(inverse(one()) == one());
  CHECK(inverse(g(Generator::A)) == Rational(1, 2) * g(Generator::A));
  CHECK(inverse(g(Generator::B)) == Rational(1, 2) * (g(Generator::B) - g(Generator::C)));
  CHECK(inverse(g(Generator::B)) == Rational(1, 2) * mul(g(Generator::A), g(Generator::C)));
  for (std::size_t q = 1; q < kFieldDim; ++q) {
    const auto x = FieldElement::generator(q);
    CHECK(mul(x, inverse(x)) == one());
  }
  std::mt19937 rng(3);
  for (int t = 0; t < 10; ++t) {
    const auto a = random_element(rng);
    if (a.is_zero()) continue;
    CHECK(mul(a, inverse(a)) == one());
  }
  CHECK_THROWS_AS(inverse(FieldElement()), std::domain_error);
  CHECK_THROWS_AS(inverse(FieldElement(Rational(2)) - mul(g(Generator::A), g(Generator::A))), std::domain_error);
}

TEST_CASE("trig values") {
  CHECK(from_trig(TrigKind::Cosine, 2) == Rational(1, 2) * g(Generator::B));
  CHECK(from_trig(TrigKind::Cosine, 0) == one());
  CHECK(from_trig(TrigKind::Sine, 3) == Rational(1, 2) * g(Generator::G));
  CHECK(from_trig(TrigKind::Cosine, 1) == Rational(1, 2) * g(Generator::D));
  CHECK(from_trig(TrigKind::Sine, 1) == Rational(1, 2) * g(Generator::F));
  CHECK_THROWS_AS(from_trig(TrigKind::Cosine, 9), std::invalid_argument);
  CHECK_THROWS_AS(from_trig(TrigKind::Sine, -1), std::invalid_argument);
  for (int k = -40; k <= 40; ++k) {
    CHECK(cos_pi16(k).eval() == doctest::Approx(std::cos(k * std::numbers::pi / 16)).epsilon(1e-14));
    CHECK(std::abs(sin_pi16(k).eval() - std::sin(k * std::numbers::pi / 16)) < 1e-14);
  }
}

TEST_CASE("plumbing") {
  const auto e = Rational(1, 2) * g(Generator::B) - Rational(1, 2) * g(Generator::C);
  CHECK(e.to_string() == "1/2*B - 1/2*C");
  CHECK(FieldElement::from_strings(e.to_strings()) == e);
  CHECK(e.to_strings().size() == kFieldDim);
  CHECK(e.support_degree() == 3);
  CHECK(FieldElement().support_degree() == -1);
  CHECK(e.denominator_lcm() == 2);
  CHECK(!e.has_integer_coeffs());
  CHECK((-e + e).is_zero());
  CHECK(FieldElement::from_ints({1, 2}) == one() + Rational(2) * g(Generator::A));
  CHECK(cross(FieldPoint{one(), FieldElement()}, FieldPoint{FieldElement(), one()}) == one());
}
