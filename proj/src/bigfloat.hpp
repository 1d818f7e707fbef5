#pragma once

// 100-digit evaluation of field elements, shared by the scan and the wave
// function phases.

#include "stadion/trigfield.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <array>

namespace stadion::detail {

using Big = boost::multiprecision::cpp_bin_float_100;

inline const std::array<Big, kFieldDim>& big_generators() {
  static const std::array<Big, kFieldDim> g = [] {
    namespace mp = boost::multiprecision;
    const Big two = 2;
    const Big a = mp::sqrt(two);
    const Big b = mp::sqrt(two + a);
    const Big c = mp::sqrt(two - a);
    return std::array<Big, kFieldDim>{Big(1), a, b, c, mp::sqrt(two + b), mp::sqrt(two + c), mp::sqrt(two - b),
                                      mp::sqrt(two - c)};
  }();
  return g;
}

inline Big big_rational(const Rational& q) {
  return Big(boost::multiprecision::numerator(q)) / Big(boost::multiprecision::denominator(q));
}

inline Big big_eval(const FieldElement& e) {
  Big s = 0;
  for (std::size_t q = 0; q < kFieldDim; ++q)
    if (e[q] != 0) s += big_rational(e[q]) * big_generators()[q];
  return s;
}

}  // namespace stadion::detail
