#include "bernstein/point_sampler.hpp"

#include <algorithm>

namespace bernstein {

namespace {

SimplexPointQ scaled_point(const std::vector<int>& numerators, int denominator) {
  std::vector<Rational> coords;
  coords.reserve(numerators.size());
  for (int a : numerators) coords.emplace_back(a, denominator);
  return SimplexPointQ(std::move(coords));
}

}  // namespace

std::vector<int> RationalPointSampler::split_budget(int k, int budget) {
  std::vector<int> parts(k, 0);
  int remaining = budget;
  for (int i = 0; i < k; ++i) {
    std::uniform_int_distribution<int> dist(0, remaining);
    parts[i] = dist(rng_);
    remaining -= parts[i];
  }
  // The sequential split favours early slots; shuffling removes the bias.
  std::shuffle(parts.begin(), parts.end(), rng_);
  return parts;
}

SimplexPointQ RationalPointSampler::sample(int k, int max_denominator) {
  std::uniform_int_distribution<int> den_dist(1, max_denominator);
  const int den = den_dist(rng_);
  return scaled_point(split_budget(k, den), den);
}

SimplexPointQ RationalPointSampler::sample_sum_one(int k, int max_denominator) {
  std::uniform_int_distribution<int> den_dist(1, max_denominator);
  const int den = den_dist(rng_);
  std::vector<int> parts = split_budget(k, den);
  int used = 0;
  for (int p : parts) used += p;
  std::uniform_int_distribution<int> slot(0, k - 1);
  parts[slot(rng_)] += den - used;
  return scaled_point(parts, den);
}

SimplexPointQ RationalPointSampler::sample_with_zero(int k, int max_denominator) {
  std::uniform_int_distribution<int> den_dist(1, max_denominator);
  const int den = den_dist(rng_);
  std::vector<int> parts = split_budget(k, den);
  std::uniform_int_distribution<int> slot(0, k - 1);
  parts[slot(rng_)] = 0;
  return scaled_point(parts, den);
}

std::vector<SimplexPointQ> RationalPointSampler::sample_set(int k, int count,
                                                            int max_denominator) {
  if (count < 2) throw InvalidInput("sample_set needs count >= 2");
  std::vector<SimplexPointQ> points;
  points.reserve(count);
  points.push_back(sample_sum_one(k, max_denominator));
  points.push_back(sample_with_zero(k, max_denominator));
  for (int i = 2; i < count; ++i) points.push_back(sample(k, max_denominator));
  return points;
}

std::vector<int> RationalPointSampler::sample_scaled_numerators(int k, int scale) {
  std::uniform_int_distribution<int> budget_dist(0, scale);
  return split_budget(k, budget_dist(rng_));
}

}  // namespace bernstein
