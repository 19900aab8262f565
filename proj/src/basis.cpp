#include "bernstein/basis.hpp"

#include <cmath>

namespace bernstein {

Rational partition_check(int k, int n, const SimplexPointQ& x) {
  Rational sum = 0;
  for (const auto& [v, value] : eval_all<Rational>(k, n, x)) sum += value;
  return sum;
}

double generating_partial(const MultiIndex& v, const SimplexPointF& x, double t,
                          int truncation) {
  const int base = v.total();
  if (truncation < base)
    throw TruncationTooSmall("truncation " + std::to_string(truncation) +
                             " is below |v| = " + std::to_string(base));
  if (x.dimension() != v.dimension())
    throw DimensionMismatch("point has dimension " +
                            std::to_string(x.dimension()) + ", index has " +
                            std::to_string(v.dimension()));
  // Leading term (n = |v|): (t x)^v / v!
  double term = 1.0;
  for (int i = 0; i < v.dimension(); ++i) term *= pow_nonneg(t * x[i], v[i]);
  term /= index_factorial(v).convert_to<double>();
  double sum = term;
  const double ratio = t * x.one_minus_total();
  for (int m = 1; base + m <= truncation; ++m) {
    term *= ratio / m;
    sum += term;
  }
  return sum;
}

double generating_closed(const MultiIndex& v, const SimplexPointF& x, double t) {
  if (x.dimension() != v.dimension())
    throw DimensionMismatch("point has dimension " +
                            std::to_string(x.dimension()) + ", index has " +
                            std::to_string(v.dimension()));
  double value = 1.0;
  for (int i = 0; i < v.dimension(); ++i) value *= pow_nonneg(t * x[i], v[i]);
  value /= index_factorial(v).convert_to<double>();
  return value * std::exp(t * x.one_minus_total());
}

}  // namespace bernstein
