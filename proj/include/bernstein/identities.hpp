#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "bernstein/basis.hpp"
#include "bernstein/report.hpp"

namespace bernstein {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

/// Weight on each term of the degree-decomposition sum. `standard` is 1:
/// the products B_{u,m} B_{v-u,n-m} enter plainly, and the sum collapses to
/// B_{v,n} through the Vandermonde convolution of their coefficients.
/// `shifted_denominator` scales each term by u!(m-|u|)!/(m+1)! instead and
/// exists solely so the checkers can demonstrate they catch a broken
/// coefficient. For m <= 1 the two weights differ by the constant factor
/// 1/(m+1)!, so even the low splits expose the mutation.
enum class DecompositionWeight { standard, shifted_denominator };

Rational decomposition_weight(const MultiIndex& u, int m,
                              DecompositionWeight rule);

/// The convolution sum_{u <= v, |u| <= m} w(u) G(u, m) G(v-u, n-m) shared by
/// the classical and q-deformed checks; `basis_at(index, degree)` supplies
/// the basis values and is only called with |index| <= degree. Factors whose
/// index total exceeds their degree are the zero polynomial and drop out.
template <class Scalar, class BasisAt>
Scalar decomposition_sum(const MultiIndex& v, int n, int m, BasisAt&& basis_at,
                         DecompositionWeight rule = DecompositionWeight::standard) {
  Scalar acc(0);
  for (const MultiIndex& u : enumerate_dominated(v, m)) {
    if (v.total() - u.total() > n - m) continue;
    acc += scalar_from<Scalar>(decomposition_weight(u, m, rule)) *
           basis_at(u, m) * basis_at(difference(v, u), n - m);
  }
  return acc;
}

/// One instance of the decomposition identity: split parameter m with
/// 0 <= m <= min(|v|, n), |v| <= n, n >= 1.
struct DecompositionCase {
  DecompositionCase(int n, int m, MultiIndex v, SimplexPointQ x);

  int n;
  int m;
  MultiIndex v;
  SimplexPointQ x;
};

/// Left side of the decomposition identity, exact; equals B_{v,n}(x).
Rational decomposition_lhs(const DecompositionCase& c,
                           DecompositionWeight rule = DecompositionWeight::standard);

/// The pure-coefficient content of the decomposition identity:
/// sum_{u <= v, |u| <= m} C(m, u) C(n-m, v-u) over admissible u, which
/// equals C(n, v) in exact integers (a multinomial Vandermonde convolution;
/// the monomial and tail factors of the basis products cancel pointwise).
BigInt decomposition_coefficient_sum(int n, int m, const MultiIndex& v);

/// The m = 1 recurrence, written directly from its own formula (not by
/// specializing decomposition_sum):
/// (1-|x|) B_{v,n-1}(x) + sum_{v_i >= 1} x_i B_{v-e_i,n-1}(x) = B_{v,n}(x).
Rational recurrence_step(const MultiIndex& v, int n, const SimplexPointQ& x);

/// T_{j,1} on points: replace x_j by 1 - |x|. An involution that maps the
/// simplex onto itself. `axis` is 1-based.
template <class Scalar>
SimplexPoint<Scalar> transform_point(int axis, const SimplexPoint<Scalar>& x) {
  if (axis < 1 || axis > x.dimension())
    throw InvalidInput("axis " + std::to_string(axis) + " outside 1.." +
                       std::to_string(x.dimension()));
  std::vector<Scalar> coords = x.coords();
  coords[axis - 1] = x.one_minus_total();
  return SimplexPoint<Scalar>(std::move(coords));
}

/// T_{j,n} on indices: replace v_j by n - |v|. An involution on the index
/// set of degree-n basis members. `axis` is 1-based.
MultiIndex transform_index(int axis, const MultiIndex& v, int n);

/// A permutation of {1,...,k}, stored as the image list (sigma(1),...,
/// sigma(k)).
class Permutation {
 public:
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int k);
  /// All k! permutations in lexicographic image order (k <= 6).
  static std::vector<Permutation> all(int k);

  int dimension() const { return static_cast<int>(image_.size()); }
  /// sigma(i), 1-based.
  int image(int i) const { return image_[i - 1]; }
  const std::vector<int>& image_list() const { return image_; }

  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> image_;
};

/// Function composition: compose(a, b)(i) = a(b(i)). With the coordinate
/// action below, permute_point(b, permute_point(a, x)) equals
/// permute_point(compose(a, b), x).
Permutation compose(const Permutation& a, const Permutation& b);

/// sigma(x) = (x_{sigma(1)},...,x_{sigma(k)}).
template <class Scalar>
SimplexPoint<Scalar> permute_point(const Permutation& p,
                                   const SimplexPoint<Scalar>& x) {
  if (p.dimension() != x.dimension())
    throw DimensionMismatch("permutation acts on " +
                            std::to_string(p.dimension()) +
                            " slots, point has " +
                            std::to_string(x.dimension()));
  std::vector<Scalar> coords(x.dimension());
  for (int i = 1; i <= x.dimension(); ++i) coords[i - 1] = x[p.image(i) - 1];
  return SimplexPoint<Scalar>(std::move(coords));
}

MultiIndex permute_index(const Permutation& p, const MultiIndex& v);

/// The permutations a symmetry check exercises: all k! of them for k <= 3,
/// otherwise the identity plus a seeded sample of distinct shuffles.
std::vector<Permutation> permutation_pool(int k, std::mt19937_64& rng);

/// Shared knobs of the identity checkers. A fixed seed makes every run of
/// a suite reproduce the same case grid.
struct CheckConfig {
  std::uint64_t seed = kDefaultSeed;
  int points_per_case = 6;      // first two are |x| = 1 and x_i = 0 cases
  int max_denominator = 64;
  bool float_pass = true;       // re-run each case in double as a spot check
  double float_tolerance = 1e-12;
  std::size_t max_records = 64;
};

/// Decomposition identity over every n <= n_max, every |v| <= n, every
/// m <= min(|v|, n), at seeded rational points; exact equality plus a float
/// spot pass. Suite name "thm1".
Report check_decomposition(int k, int n_max, const CheckConfig& cfg = {},
                           DecompositionWeight rule = DecompositionWeight::standard);

/// Axis symmetry B_{v,n}(T_{j,1} x) = B_{T_{j,n} v,n}(x) over all axes.
/// Suite name "thm2".
Report check_axis_symmetry(int k, int n_max, const CheckConfig& cfg = {});

/// Permutation symmetry B_{v,n}(sigma x) = B_{sigma^{-1} v,n}(x); every
/// permutation for k <= 3, a seeded sample for larger k. Suite name "thm2".
Report check_permutation_symmetry(int k, int n_max, const CheckConfig& cfg = {});

}  // namespace bernstein
