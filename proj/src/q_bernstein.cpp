#include "bernstein/q_bernstein.hpp"

#include <cmath>
#include <numeric>
#include <utility>

#include "bernstein/point_sampler.hpp"

namespace bernstein {

QParam::QParam(double q) : q_(q) {
  if (!(q > 0.0 && q <= 1.0))
    throw InvalidQ("q must lie in (0, 1], got " + std::to_string(q));
}

double q_pow(const QParam& q, double x) {
  return std::exp(x * std::log(q.value()));
}

double q_bracket(double x, const QParam& q) {
  if (q.classical()) return x;
  if (x == 1.0) return 1.0;  // (1-q)/(1-q), folded so the value is exact
  return (1.0 - q_pow(q, x)) / (1.0 - q.value());
}

double q_basis_eval(const QBasisId& b, const SimplexPointF& x) {
  const MultiIndex& v = b.id.index();
  if (x.dimension() != v.dimension())
    throw DimensionMismatch("point has dimension " +
                            std::to_string(x.dimension()) + ", index has " +
                            std::to_string(v.dimension()));
  if (b.q.classical()) return eval<double>(b.id, x);
  double value = scalar_from<double>(basis_coefficient(b.id));
  for (int i = 0; i < x.dimension(); ++i)
    value *= pow_nonneg(q_bracket(x[i], b.q), v[i]);
  value *= pow_nonneg(q_bracket(x.one_minus_total(), b.q),
                      b.id.degree() - v.total());
  return value;
}

std::vector<double> q_limit_gaps(const BasisId& id, const SimplexPointF& x,
                                 std::span<const double> ascending_q) {
  if (ascending_q.empty())
    throw InvalidInput("q sequence must not be empty");
  for (std::size_t i = 1; i < ascending_q.size(); ++i)
    if (!(ascending_q[i - 1] < ascending_q[i]))
      throw InvalidInput("q sequence must be strictly increasing");
  const double classical = eval<double>(id, x);
  std::vector<double> gaps;
  gaps.reserve(ascending_q.size());
  for (double q : ascending_q)
    gaps.push_back(std::abs(q_basis_eval(QBasisId(id, QParam(q)), x) - classical));
  return gaps;
}

Rational scaled_q_bracket(int numerator, const Rational& q0, int scale) {
  if (scale < 1) throw InvalidInput("bracket scale must be >= 1");
  if (numerator < 0) throw InvalidInput("bracket numerator must be >= 0");
  if (!(q0 > 0 && q0 < 1))
    throw InvalidQ("scaled bracket needs a rational q0 in (0, 1)");
  return (1 - pow_nonneg(q0, numerator)) / (1 - pow_nonneg(q0, scale));
}

Rational scaled_q_basis_eval(const MultiIndex& v, int n,
                             const std::vector<int>& numerators,
                             const Rational& q0, int scale) {
  BasisId id(v, n);
  if (static_cast<int>(numerators.size()) != v.dimension())
    throw DimensionMismatch("point has dimension " +
                            std::to_string(numerators.size()) +
                            ", index has " + std::to_string(v.dimension()));
  int total = std::accumulate(numerators.begin(), numerators.end(), 0);
  for (int a : numerators)
    if (a < 0) throw OutOfSimplex("scaled coordinate is negative");
  if (total > scale) throw OutOfSimplex("scaled coordinates sum past 1");
  Rational value(basis_coefficient(id));
  for (int i = 0; i < v.dimension(); ++i)
    value *= pow_nonneg(scaled_q_bracket(numerators[i], q0, scale), v[i]);
  value *= pow_nonneg(scaled_q_bracket(scale - total, q0, scale),
                      n - v.total());
  return value;
}

namespace {

bool q_close(double lhs, double rhs, const QCheckConfig& cfg, double scale_hint) {
  double diff = std::abs(lhs - rhs);
  if (diff <= cfg.relative_tolerance * std::max(std::abs(lhs), std::abs(rhs)))
    return true;
  return diff <= cfg.absolute_floor * std::max(1.0, scale_hint);
}

Counterexample q_entry(int k, int n, const MultiIndex& v,
                       const std::vector<Rational>& coords, double q) {
  Counterexample ce;
  ce.k = k;
  ce.n = n;
  ce.v = v.entries();
  ce.x = coords;
  ce.q = q;
  return ce;
}

std::vector<Rational> rational_coords(const SimplexPointQ& x) {
  return x.coords();
}

std::vector<Rational> scaled_coords(const std::vector<int>& numerators,
                                    int scale) {
  std::vector<Rational> coords;
  coords.reserve(numerators.size());
  for (int a : numerators) coords.emplace_back(a, scale);
  return coords;
}

/// Scaled integer points for the exact pass: a |x| = 1 point, a point with a
/// vanishing coordinate, the origin, then general samples.
std::vector<std::vector<int>> scaled_pool(RationalPointSampler& sampler, int k,
                                          int scale, int count) {
  std::vector<std::vector<int>> pool;
  std::vector<int> full = sampler.sample_scaled_numerators(k, scale);
  full.back() += scale - std::accumulate(full.begin(), full.end(), 0);
  pool.push_back(std::move(full));
  std::vector<int> pinched = sampler.sample_scaled_numerators(k, scale);
  pinched.front() = 0;
  pool.push_back(std::move(pinched));
  pool.push_back(std::vector<int>(k, 0));
  while (static_cast<int>(pool.size()) < count)
    pool.push_back(sampler.sample_scaled_numerators(k, scale));
  return pool;
}

}  // namespace

Report check_q_decomposition(int k, int n_max, std::span<const double> qs,
                             const QCheckConfig& cfg, DecompositionWeight rule) {
  if (k < 1) throw InvalidInput("dimension k must be >= 1");
  if (n_max < 1) throw InvalidInput("degree cap n_max must be >= 1");
  if (qs.empty()) throw InvalidInput("q list must not be empty");
  std::vector<QParam> params;
  for (double q : qs) params.emplace_back(q);

  Report report;
  report.suite = "thm3";
  RationalPointSampler sampler(cfg.base.seed);
  std::vector<SimplexPointQ> points =
      sampler.sample_set(k, cfg.base.points_per_case, cfg.base.max_denominator);
  std::vector<SimplexPointF> fpoints;
  fpoints.reserve(points.size());
  for (const SimplexPointQ& p : points) fpoints.push_back(to_float(p));
  std::vector<std::vector<int>> scaled =
      scaled_pool(sampler, k, cfg.exact_scale, cfg.base.points_per_case);

  for (int n = 1; n <= n_max; ++n) {
    for (const MultiIndex& v : enumerate_multi_indices(k, n)) {
      const double coeff_scale = scalar_from<double>(basis_coefficient(BasisId(v, n)));
      for (int m = 0; m <= std::min(v.total(), n); ++m) {
        for (const QParam& q : params) {
          for (std::size_t pi = 0; pi < fpoints.size(); ++pi) {
            const SimplexPointF& fx = fpoints[pi];
            double lhs = decomposition_sum<double>(
                v, n, m,
                [&](const MultiIndex& u, int degree) {
                  return q_basis_eval(QBasisId(u, degree, q), fx);
                },
                rule);
            double rhs = q_basis_eval(QBasisId(v, n, q), fx);
            if (!q_close(lhs, rhs, cfg, coeff_scale)) {
              Counterexample ce =
                  q_entry(k, n, v, rational_coords(points[pi]), q.value());
              ce.m = m;
              ce.lhs = lhs;
              ce.rhs = rhs;
              report.record(std::move(ce), cfg.base.max_records);
            }
          }
          if (!cfg.exact_pass || q.classical()) continue;
          const Rational q0(q.value());
          for (const std::vector<int>& nums : scaled) {
            Rational lhs = decomposition_sum<Rational>(
                v, n, m,
                [&](const MultiIndex& u, int degree) {
                  return scaled_q_basis_eval(u, degree, nums, q0,
                                             cfg.exact_scale);
                },
                rule);
            Rational rhs =
                scaled_q_basis_eval(v, n, nums, q0, cfg.exact_scale);
            if (lhs != rhs) {
              Counterexample ce =
                  q_entry(k, n, v, scaled_coords(nums, cfg.exact_scale),
                          to_double(pow_nonneg(q0, cfg.exact_scale)));
              ce.m = m;
              ce.lhs = lhs;
              ce.rhs = rhs;
              report.record(std::move(ce), cfg.base.max_records);
            }
          }
        }
      }
    }
  }
  return report;
}

Report check_q_symmetry(int k, int n_max, std::span<const double> qs,
                        const QCheckConfig& cfg) {
  if (k < 1) throw InvalidInput("dimension k must be >= 1");
  if (n_max < 1) throw InvalidInput("degree cap n_max must be >= 1");
  if (qs.empty()) throw InvalidInput("q list must not be empty");
  std::vector<QParam> params;
  for (double q : qs) params.emplace_back(q);

  Report report;
  report.suite = "thm4";
  RationalPointSampler sampler(cfg.base.seed);
  std::vector<SimplexPointQ> points =
      sampler.sample_set(k, cfg.base.points_per_case, cfg.base.max_denominator);
  std::vector<SimplexPointF> fpoints;
  fpoints.reserve(points.size());
  for (const SimplexPointQ& p : points) fpoints.push_back(to_float(p));
  std::vector<std::vector<int>> scaled =
      scaled_pool(sampler, k, cfg.exact_scale, cfg.base.points_per_case);
  std::mt19937_64 perm_rng(cfg.base.seed ^ 0x9E3779B97F4A7C15ull);
  std::vector<Permutation> perms = permutation_pool(k, perm_rng);

  for (int n = 1; n <= n_max; ++n) {
    for (const MultiIndex& v : enumerate_multi_indices(k, n)) {
      const double coeff_scale = scalar_from<double>(basis_coefficient(BasisId(v, n)));
      for (const QParam& q : params) {
        // Axis part: B(T_{j,1} x | q) = B at the reflected index.
        for (int j = 1; j <= k; ++j) {
          MultiIndex reflected = transform_index(j, v, n);
          for (std::size_t pi = 0; pi < fpoints.size(); ++pi) {
            double lhs = q_basis_eval(QBasisId(v, n, q),
                                      transform_point(j, fpoints[pi]));
            double rhs = q_basis_eval(QBasisId(reflected, n, q), fpoints[pi]);
            if (!q_close(lhs, rhs, cfg, coeff_scale)) {
              Counterexample ce =
                  q_entry(k, n, v, rational_coords(points[pi]), q.value());
              ce.j = j;
              ce.lhs = lhs;
              ce.rhs = rhs;
              report.record(std::move(ce), cfg.base.max_records);
            }
          }
          if (!cfg.exact_pass || q.classical()) continue;
          const Rational q0(q.value());
          for (const std::vector<int>& nums : scaled) {
            std::vector<int> mirrored = nums;
            mirrored[j - 1] = cfg.exact_scale -
                              std::accumulate(nums.begin(), nums.end(), 0);
            Rational lhs =
                scaled_q_basis_eval(v, n, mirrored, q0, cfg.exact_scale);
            Rational rhs =
                scaled_q_basis_eval(reflected, n, nums, q0, cfg.exact_scale);
            if (lhs != rhs) {
              Counterexample ce =
                  q_entry(k, n, v, scaled_coords(nums, cfg.exact_scale),
                          to_double(pow_nonneg(q0, cfg.exact_scale)));
              ce.j = j;
              ce.lhs = lhs;
              ce.rhs = rhs;
              report.record(std::move(ce), cfg.base.max_records);
            }
          }
        }
        // Permutation part: B(sigma x | q) = B at the pulled-back index.
        for (const Permutation& sigma : perms) {
          MultiIndex pulled = permute_index(sigma.inverse(), v);
          for (std::size_t pi = 0; pi < fpoints.size(); ++pi) {
            double lhs = q_basis_eval(QBasisId(v, n, q),
                                      permute_point(sigma, fpoints[pi]));
            double rhs = q_basis_eval(QBasisId(pulled, n, q), fpoints[pi]);
            if (!q_close(lhs, rhs, cfg, coeff_scale)) {
              Counterexample ce =
                  q_entry(k, n, v, rational_coords(points[pi]), q.value());
              ce.sigma = sigma.image_list();
              ce.lhs = lhs;
              ce.rhs = rhs;
              report.record(std::move(ce), cfg.base.max_records);
            }
          }
          if (!cfg.exact_pass || q.classical()) continue;
          const Rational q0(q.value());
          for (const std::vector<int>& nums : scaled) {
            std::vector<int> shuffled(nums.size());
            for (int i = 1; i <= k; ++i)
              shuffled[i - 1] = nums[sigma.image(i) - 1];
            Rational lhs =
                scaled_q_basis_eval(v, n, shuffled, q0, cfg.exact_scale);
            Rational rhs =
                scaled_q_basis_eval(pulled, n, nums, q0, cfg.exact_scale);
            if (lhs != rhs) {
              Counterexample ce =
                  q_entry(k, n, v, scaled_coords(nums, cfg.exact_scale),
                          to_double(pow_nonneg(q0, cfg.exact_scale)));
              ce.sigma = sigma.image_list();
              ce.lhs = lhs;
              ce.rhs = rhs;
              report.record(std::move(ce), cfg.base.max_records);
            }
          }
        }
      }
    }
  }
  return report;
}

}  // namespace bernstein
