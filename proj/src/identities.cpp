#include "bernstein/identities.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <utility>

#include "bernstein/point_sampler.hpp"

namespace bernstein {

Rational decomposition_weight(const MultiIndex& u, int m,
                              DecompositionWeight rule) {
  if (rule == DecompositionWeight::shifted_denominator)
    return Rational(index_factorial(u) * factorial(m - u.total()),
                    factorial(m + 1));
  return Rational(1);
}

DecompositionCase::DecompositionCase(int n_in, int m_in, MultiIndex v_in,
                                     SimplexPointQ x_in)
    : n(n_in), m(m_in), v(std::move(v_in)), x(std::move(x_in)) {
  if (n < 1) throw InvalidInput("decomposition degree n must be >= 1");
  if (v.dimension() != x.dimension())
    throw DimensionMismatch("index has " + std::to_string(v.dimension()) +
                            " parts, point has " +
                            std::to_string(x.dimension()));
  if (v.total() > n)
    throw DegreeMismatch("index total " + std::to_string(v.total()) +
                         " exceeds degree " + std::to_string(n));
  if (m < 0 || m > std::min(v.total(), n))
    throw HypothesisViolated("split m = " + std::to_string(m) +
                             " outside 0..min(|v|, n) = " +
                             std::to_string(std::min(v.total(), n)));
}

Rational decomposition_lhs(const DecompositionCase& c, DecompositionWeight rule) {
  return decomposition_sum<Rational>(
      c.v, c.n, c.m,
      [&](const MultiIndex& u, int degree) {
        return eval<Rational>(BasisId(u, degree), c.x);
      },
      rule);
}

BigInt decomposition_coefficient_sum(int n, int m, const MultiIndex& v) {
  if (v.total() > n)
    throw DegreeMismatch("index total " + std::to_string(v.total()) +
                         " exceeds degree " + std::to_string(n));
  if (m < 0 || m > std::min(v.total(), n))
    throw HypothesisViolated("split m = " + std::to_string(m) +
                             " outside 0..min(|v|, n)");
  BigInt acc = 0;
  for (const MultiIndex& u : enumerate_dominated(v, m)) {
    if (v.total() - u.total() > n - m) continue;
    acc += multinomial(m, u) * multinomial(n - m, difference(v, u));
  }
  return acc;
}

Rational recurrence_step(const MultiIndex& v, int n, const SimplexPointQ& x) {
  if (n < 1) throw InvalidInput("recurrence needs degree n >= 1");
  if (v.total() > n)
    throw DegreeMismatch("index total " + std::to_string(v.total()) +
                         " exceeds degree " + std::to_string(n));
  if (v.dimension() != x.dimension())
    throw DimensionMismatch("index has " + std::to_string(v.dimension()) +
                            " parts, point has " +
                            std::to_string(x.dimension()));
  Rational acc(0);
  if (v.total() <= n - 1)
    acc += x.one_minus_total() * eval<Rational>(BasisId(v, n - 1), x);
  for (int i = 0; i < v.dimension(); ++i) {
    if (v[i] == 0) continue;
    MultiIndex shifted = difference(v, MultiIndex::unit(v.dimension(), i));
    acc += x[i] * eval<Rational>(BasisId(std::move(shifted), n - 1), x);
  }
  return acc;
}

MultiIndex transform_index(int axis, const MultiIndex& v, int n) {
  if (axis < 1 || axis > v.dimension())
    throw InvalidInput("axis " + std::to_string(axis) + " outside 1.." +
                       std::to_string(v.dimension()));
  if (v.total() > n)
    throw DegreeMismatch("index total " + std::to_string(v.total()) +
                         " exceeds degree " + std::to_string(n));
  std::vector<int> entries = v.entries();
  entries[axis - 1] = n - v.total();
  return MultiIndex(std::move(entries));
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  if (image_.empty()) throw InvalidInput("permutation needs at least one slot");
  std::vector<bool> seen(image_.size(), false);
  for (int value : image_) {
    if (value < 1 || value > static_cast<int>(image_.size()) ||
        seen[value - 1])
      throw InvalidInput("permutation image is not a bijection of 1.." +
                         std::to_string(image_.size()));
    seen[value - 1] = true;
  }
}

Permutation Permutation::identity(int k) {
  std::vector<int> image(k);
  std::iota(image.begin(), image.end(), 1);
  return Permutation(std::move(image));
}

std::vector<Permutation> Permutation::all(int k) {
  if (k < 1 || k > 6)
    throw InvalidInput("full permutation listing is limited to 1 <= k <= 6");
  std::vector<int> image(k);
  std::iota(image.begin(), image.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(Permutation(image));
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> image(image_.size());
  for (int i = 1; i <= dimension(); ++i) image[this->image(i) - 1] = i;
  return Permutation(std::move(image));
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.dimension() != b.dimension())
    throw DimensionMismatch("cannot compose permutations of " +
                            std::to_string(a.dimension()) + " and " +
                            std::to_string(b.dimension()) + " slots");
  std::vector<int> image(a.dimension());
  for (int i = 1; i <= a.dimension(); ++i) image[i - 1] = a.image(b.image(i));
  return Permutation(std::move(image));
}

MultiIndex permute_index(const Permutation& p, const MultiIndex& v) {
  if (p.dimension() != v.dimension())
    throw DimensionMismatch("permutation acts on " +
                            std::to_string(p.dimension()) +
                            " slots, index has " +
                            std::to_string(v.dimension()));
  std::vector<int> entries(v.dimension());
  for (int i = 1; i <= v.dimension(); ++i) entries[i - 1] = v[p.image(i) - 1];
  return MultiIndex(std::move(entries));
}

namespace {

Counterexample make_entry(int k, int n, const MultiIndex& v,
                          const SimplexPointQ& x) {
  Counterexample ce;
  ce.k = k;
  ce.n = n;
  ce.v = v.entries();
  ce.x.assign(x.coords().begin(), x.coords().end());
  return ce;
}

struct PointSet {
  std::vector<SimplexPointQ> exact;
  std::vector<SimplexPointF> floats;
};

PointSet draw_points(RationalPointSampler& sampler, int k,
                     const CheckConfig& cfg) {
  PointSet set;
  set.exact = sampler.sample_set(k, cfg.points_per_case, cfg.max_denominator);
  set.floats.reserve(set.exact.size());
  for (const SimplexPointQ& p : set.exact) set.floats.push_back(to_float(p));
  return set;
}

}  // namespace

Report check_decomposition(int k, int n_max, const CheckConfig& cfg,
                           DecompositionWeight rule) {
  if (k < 1) throw InvalidInput("dimension k must be >= 1");
  if (n_max < 1) throw InvalidInput("degree cap n_max must be >= 1");
  Report report;
  report.suite = "thm1";
  RationalPointSampler sampler(cfg.seed);
  PointSet points = draw_points(sampler, k, cfg);
  for (int n = 1; n <= n_max; ++n) {
    for (const MultiIndex& v : enumerate_multi_indices(k, n)) {
      for (int m = 0; m <= std::min(v.total(), n); ++m) {
        for (std::size_t pi = 0; pi < points.exact.size(); ++pi) {
          const SimplexPointQ& x = points.exact[pi];
          Rational lhs = decomposition_lhs(DecompositionCase(n, m, v, x), rule);
          Rational rhs = eval<Rational>(BasisId(v, n), x);
          if (lhs != rhs) {
            Counterexample ce = make_entry(k, n, v, x);
            ce.m = m;
            ce.lhs = lhs;
            ce.rhs = rhs;
            report.record(std::move(ce), cfg.max_records);
          }
          if (!cfg.float_pass) continue;
          const SimplexPointF& fx = points.floats[pi];
          double flhs = decomposition_sum<double>(
              v, n, m,
              [&](const MultiIndex& u, int degree) {
                return eval<double>(BasisId(u, degree), fx);
              },
              rule);
          double frhs = eval<double>(BasisId(v, n), fx);
          if (std::abs(flhs - frhs) > cfg.float_tolerance) {
            Counterexample ce = make_entry(k, n, v, x);
            ce.m = m;
            ce.lhs = flhs;
            ce.rhs = frhs;
            report.record(std::move(ce), cfg.max_records);
          }
        }
      }
    }
  }
  return report;
}

Report check_axis_symmetry(int k, int n_max, const CheckConfig& cfg) {
  if (k < 1) throw InvalidInput("dimension k must be >= 1");
  if (n_max < 1) throw InvalidInput("degree cap n_max must be >= 1");
  Report report;
  report.suite = "thm2";
  RationalPointSampler sampler(cfg.seed);
  PointSet points = draw_points(sampler, k, cfg);
  for (int n = 1; n <= n_max; ++n) {
    for (const MultiIndex& v : enumerate_multi_indices(k, n)) {
      for (int j = 1; j <= k; ++j) {
        MultiIndex reflected = transform_index(j, v, n);
        for (std::size_t pi = 0; pi < points.exact.size(); ++pi) {
          const SimplexPointQ& x = points.exact[pi];
          Rational lhs = eval<Rational>(BasisId(v, n), transform_point(j, x));
          Rational rhs = eval<Rational>(BasisId(reflected, n), x);
          if (lhs != rhs) {
            Counterexample ce = make_entry(k, n, v, x);
            ce.j = j;
            ce.lhs = lhs;
            ce.rhs = rhs;
            report.record(std::move(ce), cfg.max_records);
          }
          if (!cfg.float_pass) continue;
          const SimplexPointF& fx = points.floats[pi];
          double flhs = eval<double>(BasisId(v, n), transform_point(j, fx));
          double frhs = eval<double>(BasisId(reflected, n), fx);
          if (std::abs(flhs - frhs) > cfg.float_tolerance) {
            Counterexample ce = make_entry(k, n, v, x);
            ce.j = j;
            ce.lhs = flhs;
            ce.rhs = frhs;
            report.record(std::move(ce), cfg.max_records);
          }
        }
      }
    }
  }
  return report;
}

std::vector<Permutation> permutation_pool(int k, std::mt19937_64& rng) {
  if (k <= 3) return Permutation::all(k);
  std::set<std::vector<int>> images;
  images.insert(Permutation::identity(k).image_list());
  std::vector<int> image = Permutation::identity(k).image_list();
  while (images.size() < 8) {
    std::shuffle(image.begin(), image.end(), rng);
    images.insert(image);
  }
  std::vector<Permutation> out;
  for (const std::vector<int>& im : images) out.emplace_back(Permutation(im));
  return out;
}

Report check_permutation_symmetry(int k, int n_max, const CheckConfig& cfg) {
  if (k < 1) throw InvalidInput("dimension k must be >= 1");
  if (n_max < 1) throw InvalidInput("degree cap n_max must be >= 1");
  Report report;
  report.suite = "thm2";
  RationalPointSampler sampler(cfg.seed);
  PointSet points = draw_points(sampler, k, cfg);
  std::mt19937_64 perm_rng(cfg.seed ^ 0x9E3779B97F4A7C15ull);
  std::vector<Permutation> perms = permutation_pool(k, perm_rng);
  for (int n = 1; n <= n_max; ++n) {
    for (const MultiIndex& v : enumerate_multi_indices(k, n)) {
      for (const Permutation& sigma : perms) {
        MultiIndex pulled = permute_index(sigma.inverse(), v);
        for (std::size_t pi = 0; pi < points.exact.size(); ++pi) {
          const SimplexPointQ& x = points.exact[pi];
          Rational lhs = eval<Rational>(BasisId(v, n), permute_point(sigma, x));
          Rational rhs = eval<Rational>(BasisId(pulled, n), x);
          if (lhs != rhs) {
            Counterexample ce = make_entry(k, n, v, x);
            ce.sigma = sigma.image_list();
            ce.lhs = lhs;
            ce.rhs = rhs;
            report.record(std::move(ce), cfg.max_records);
          }
          if (!cfg.float_pass) continue;
          const SimplexPointF& fx = points.floats[pi];
          double flhs = eval<double>(BasisId(v, n), permute_point(sigma, fx));
          double frhs = eval<double>(BasisId(pulled, n), fx);
          if (std::abs(flhs - frhs) > cfg.float_tolerance) {
            Counterexample ce = make_entry(k, n, v, x);
            ce.sigma = sigma.image_list();
            ce.lhs = flhs;
            ce.rhs = frhs;
            report.record(std::move(ce), cfg.max_records);
          }
        }
      }
    }
  }
  return report;
}

}  // namespace bernstein
