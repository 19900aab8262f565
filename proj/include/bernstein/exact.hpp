#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace bernstein {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// base^e for e >= 0 with the 0^0 = 1 convention.
template <class Scalar>
Scalar pow_nonneg(const Scalar& base, int e) {
  Scalar acc(1);
  for (int i = 0; i < e; ++i) acc *= base;
  return acc;
}

}  // namespace bernstein
