#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bernstein/simplex_point.hpp"

namespace bernstein {

/// Seeded generator of rational simplex points for the identity checks.
/// Denominators stay small (<= max_denominator) so exact arithmetic stays
/// cheap; the sampled sets always lead with the two boundary situations the
/// identities must survive: |x| = 1 and a vanishing coordinate.
class RationalPointSampler {
 public:
  explicit RationalPointSampler(std::uint64_t seed) : rng_(seed) {}

  /// A random point with denominator <= max_denominator and |x| <= 1.
  SimplexPointQ sample(int k, int max_denominator);

  /// A random point on the face |x| = 1.
  SimplexPointQ sample_sum_one(int k, int max_denominator);

  /// A random point with at least one coordinate equal to 0.
  SimplexPointQ sample_with_zero(int k, int max_denominator);

  /// `count` points (count >= 2): one |x| = 1 point, one zero-coordinate
  /// point, the rest general.
  std::vector<SimplexPointQ> sample_set(int k, int count, int max_denominator);

  /// Nonnegative integers (a_1,...,a_k) with sum <= scale; the scaled point
  /// (a_1/scale,...,a_k/scale) lies in the simplex.
  std::vector<int> sample_scaled_numerators(int k, int scale);

 private:
  std::vector<int> split_budget(int k, int budget);

  std::mt19937_64 rng_;
};

}  // namespace bernstein
