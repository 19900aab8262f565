#include "bernstein/multi_index.hpp"

#include <numeric>
#include <string>

namespace bernstein {

namespace {

std::string to_string(const MultiIndex& v) {
  std::string s = "(";
  for (int i = 0; i < v.dimension(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

// C(top, bottom) by the usual multiplicative loop; every intermediate
// division is exact.
BigInt binomial(int top, int bottom) {
  BigInt acc = 1;
  for (int i = 1; i <= bottom; ++i) {
    acc *= top - bottom + i;
    acc /= i;
  }
  return acc;
}

}  // namespace

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty())
    throw InvalidInput("a multi-index needs at least one entry");
  for (int e : entries_)
    if (e < 0)
      throw InvalidInput("multi-index entries must be nonnegative, got " +
                         std::to_string(e));
}

MultiIndex MultiIndex::zeros(int k) { return MultiIndex(std::vector<int>(k, 0)); }

MultiIndex MultiIndex::unit(int k, int i) {
  std::vector<int> e(k, 0);
  e.at(i) = 1;
  return MultiIndex(std::move(e));
}

int MultiIndex::total() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0);
}

bool componentwise_le(const MultiIndex& u, const MultiIndex& v) {
  if (u.dimension() != v.dimension())
    throw DimensionMismatch("cannot compare " + to_string(u) + " with " +
                            to_string(v));
  for (int i = 0; i < u.dimension(); ++i)
    if (u[i] > v[i]) return false;
  return true;
}

MultiIndex difference(const MultiIndex& v, const MultiIndex& u) {
  if (!componentwise_le(u, v))
    throw InvalidInput("difference requires " + to_string(u) +
                       " <= " + to_string(v) + " componentwise");
  std::vector<int> e(v.dimension());
  for (int i = 0; i < v.dimension(); ++i) e[i] = v[i] - u[i];
  return MultiIndex(std::move(e));
}

BigInt factorial(int n) {
  BigInt acc = 1;
  for (int i = 2; i <= n; ++i) acc *= i;
  return acc;
}

BigInt index_factorial(const MultiIndex& v) {
  BigInt acc = 1;
  for (int i = 0; i < v.dimension(); ++i) acc *= factorial(v[i]);
  return acc;
}

BigInt multinomial(int n, const MultiIndex& v) {
  if (v.total() > n)
    throw DegreeMismatch("|v| = " + std::to_string(v.total()) + " for v = " +
                         to_string(v) + " exceeds n = " + std::to_string(n));
  // n!/(v_1!...v_k!(n-|v|)!) == prod_i C(n - v_1 - ... - v_{i-1}, v_i)
  BigInt acc = 1;
  int remaining = n;
  for (int i = 0; i < v.dimension(); ++i) {
    acc *= binomial(remaining, v[i]);
    remaining -= v[i];
  }
  return acc;
}

namespace {

void enumerate_rec(std::vector<int>& entry, std::size_t depth, int budget,
                   const std::vector<int>* bounds,
                   std::vector<MultiIndex>& out) {
  if (depth == entry.size()) {
    out.push_back(MultiIndex(entry));
    return;
  }
  int top = bounds ? std::min(budget, (*bounds)[depth]) : budget;
  for (int t = 0; t <= top; ++t) {
    entry[depth] = t;
    enumerate_rec(entry, depth + 1, budget - t, bounds, out);
  }
  entry[depth] = 0;
}

}  // namespace

std::vector<MultiIndex> enumerate_multi_indices(int k, int n) {
  if (k < 1) throw InvalidInput("dimension k must be >= 1");
  if (n < 0) throw InvalidInput("degree n must be >= 0");
  std::vector<MultiIndex> out;
  std::vector<int> entry(k, 0);
  enumerate_rec(entry, 0, n, nullptr, out);
  return out;
}

std::vector<MultiIndex> enumerate_dominated(const MultiIndex& v, int cap) {
  std::vector<MultiIndex> out;
  std::vector<int> entry(v.dimension(), 0);
  enumerate_rec(entry, 0, cap, &v.entries(), out);
  return out;
}

}  // namespace bernstein
