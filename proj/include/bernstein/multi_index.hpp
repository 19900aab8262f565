#pragma once

#include <compare>
#include <vector>

#include "bernstein/exact.hpp"
#include "bernstein/errors.hpp"

namespace bernstein {

/// A vector of k nonnegative integers (v_1,...,v_k), k >= 1. Immutable.
/// Ordering is lexicographic ascending, which fixes the enumeration order
/// used everywhere (CLI output, eval_all, golden files).
class MultiIndex {
 public:
  explicit MultiIndex(std::vector<int> entries);

  static MultiIndex zeros(int k);
  /// The i-th unit index e_i (0-based slot) in dimension k.
  static MultiIndex unit(int k, int i);

  int dimension() const { return static_cast<int>(entries_.size()); }
  int operator[](int i) const { return entries_[i]; }
  const std::vector<int>& entries() const { return entries_; }

  /// |v| = v_1 + ... + v_k.
  int total() const;

  auto operator<=>(const MultiIndex&) const = default;

 private:
  std::vector<int> entries_;
};

/// Componentwise u_i <= v_i for all i. Throws DimensionMismatch on
/// differing dimensions.
bool componentwise_le(const MultiIndex& u, const MultiIndex& v);

/// v - u componentwise; requires u <= v.
MultiIndex difference(const MultiIndex& v, const MultiIndex& u);

BigInt factorial(int n);

/// v! = v_1! ... v_k!
BigInt index_factorial(const MultiIndex& v);

/// n! / (v_1! ... v_k! (n-|v|)!), exact. Throws DegreeMismatch if |v| > n.
/// Computed as a telescoping product of binomials rather than from
/// factorials, so tests can use the factorial formula as an independent
/// oracle.
BigInt multinomial(int n, const MultiIndex& v);

/// All v in N_0^k with |v| <= n, lexicographic ascending. Length is
/// C(n+k, k).
std::vector<MultiIndex> enumerate_multi_indices(int k, int n);

/// All u with u <= v componentwise and |u| <= cap, lexicographic ascending.
std::vector<MultiIndex> enumerate_dominated(const MultiIndex& v, int cap);

}  // namespace bernstein
