#pragma once

#include <map>
#include <string>
#include <type_traits>

#include "bernstein/multi_index.hpp"
#include "bernstein/simplex_point.hpp"

namespace bernstein {

/// Identifies the basis member B_{v,n}: a multi-index v with |v| <= n.
class BasisId {
 public:
  BasisId(MultiIndex index, int degree) : index_(std::move(index)), degree_(degree) {
    if (degree_ < 0)
      throw InvalidInput("degree must be >= 0, got " + std::to_string(degree_));
    if (index_.total() > degree_)
      throw DegreeMismatch("|v| = " + std::to_string(index_.total()) +
                           " exceeds degree n = " + std::to_string(degree_));
  }

  const MultiIndex& index() const { return index_; }
  int degree() const { return degree_; }

 private:
  MultiIndex index_;
  int degree_;
};

/// The coefficient of B_{v,n}: n!/(v!(n-|v|)!), exact.
inline BigInt basis_coefficient(const BasisId& id) {
  return multinomial(id.degree(), id.index());
}

template <class Scalar>
Scalar scalar_from(const BigInt& b) {
  if constexpr (std::is_same_v<Scalar, double>)
    return b.convert_to<double>();
  else
    return Scalar(b);
}

template <class Scalar>
Scalar scalar_from(const Rational& r) {
  if constexpr (std::is_same_v<Scalar, double>)
    return to_double(r);
  else
    return r;
}

/// B_{v,n}(x) = C(n,v) x^v (1-|x|)^{n-|v|}, with 0^0 = 1 on the boundary.
template <class Scalar>
Scalar eval(const BasisId& id, const SimplexPoint<Scalar>& x) {
  const MultiIndex& v = id.index();
  if (x.dimension() != v.dimension())
    throw DimensionMismatch("point has dimension " +
                            std::to_string(x.dimension()) + ", index has " +
                            std::to_string(v.dimension()));
  Scalar value = scalar_from<Scalar>(basis_coefficient(id));
  for (int i = 0; i < x.dimension(); ++i) value *= pow_nonneg(x[i], v[i]);
  value *= pow_nonneg(x.one_minus_total(), id.degree() - v.total());
  return value;
}

/// Values of every B_{v,n}(x) with |v| <= n, keyed by v (so iteration is in
/// lexicographic order). The walk carries binomial and monomial factors
/// along incrementally; no entry recomputes a multinomial from scratch.
template <class Scalar>
std::map<MultiIndex, Scalar> eval_all(int k, int n, const SimplexPoint<Scalar>& x) {
  if (k != x.dimension())
    throw DimensionMismatch("point has dimension " +
                            std::to_string(x.dimension()) + ", expected k = " +
                            std::to_string(k));
  if (n < 0) throw InvalidInput("degree n must be >= 0");

  std::vector<Scalar> tail_pow(n + 1);  // (1-|x|)^r
  tail_pow[0] = Scalar(1);
  const Scalar tail = x.one_minus_total();
  for (int r = 1; r <= n; ++r) tail_pow[r] = tail_pow[r - 1] * tail;

  std::map<MultiIndex, Scalar> out;
  std::vector<int> entry(k, 0);

  // At depth i with `budget` degree left, `weight` carries
  // C(n, v_1) C(n-v_1, v_2) ... and the monomials x_1^{v_1}...x_{i-1}^{v_{i-1}}.
  auto walk = [&](auto&& self, int depth, int budget, Scalar weight) -> void {
    if (depth == k) {
      out.emplace_hint(out.end(), MultiIndex(entry), weight * tail_pow[budget]);
      return;
    }
    Scalar w = weight;
    for (int t = 0; t <= budget; ++t) {
      entry[depth] = t;
      self(self, depth + 1, budget - t, w);
      if (t < budget)  // advance C(budget, t) x^t -> C(budget, t+1) x^{t+1}
        w = w * x[depth] * Scalar(budget - t) / Scalar(t + 1);
    }
    entry[depth] = 0;
  };
  walk(walk, 0, n, Scalar(1));
  return out;
}

/// Exact sum of all B_{v,n}(x) over |v| <= n; equals 1 for every x in the
/// simplex (partition of unity).
Rational partition_check(int k, int n, const SimplexPointQ& x);

/// Partial sum of the exponential generating series
/// sum_{n >= |v|} B_{v,n}(x) t^n/n!, truncated at n = truncation. Each term
/// follows from the previous by one multiply-divide.
double generating_partial(const MultiIndex& v, const SimplexPointF& x, double t,
                          int truncation);

/// Closed form of the same series: (t x)^v / v! * e^{t(1-|x|)}.
double generating_closed(const MultiIndex& v, const SimplexPointF& x, double t);

}  // namespace bernstein
