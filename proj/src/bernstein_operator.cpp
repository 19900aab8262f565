#include "bernstein/bernstein_operator.hpp"

#include <cmath>

namespace bernstein {

namespace {

void require_positive_degree(int n) {
  if (n < 1)
    throw InvalidInput("operator degree must be >= 1, got " + std::to_string(n));
}

void require_arity(const SampledFunction& f, int k) {
  if (f.arity != k)
    throw ArityMismatch("function '" + f.label + "' has arity " +
                        std::to_string(f.arity) + ", point has dimension " +
                        std::to_string(k));
}

}  // namespace

SimplexPointF lattice_node(const MultiIndex& v, int n) {
  std::vector<double> coords(v.dimension());
  for (int i = 0; i < v.dimension(); ++i)
    coords[i] = static_cast<double>(v[i]) / static_cast<double>(n);
  return SimplexPointF(std::move(coords));
}

double apply(const SampledFunction& f, int n, const SimplexPointF& x) {
  require_positive_degree(n);
  require_arity(f, x.dimension());
  double acc = 0.0;
  for (const auto& [v, b] : eval_all<double>(x.dimension(), n, x))
    acc += f(lattice_node(v, n)) * b;
  return acc;
}

double sup_error(const SampledFunction& f, int n,
                 std::span<const SimplexPointF> grid) {
  require_positive_degree(n);
  if (grid.empty()) throw EmptyGrid("sup_error needs a nonempty grid");
  const int k = f.arity;
  for (const SimplexPointF& x : grid) require_arity(f, x.dimension());

  const std::vector<MultiIndex> indices = enumerate_multi_indices(k, n);
  std::vector<double> node_values(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i)
    node_values[i] = f(lattice_node(indices[i], n));

  double worst = 0.0;
  for (const SimplexPointF& x : grid) {
    double acc = 0.0;
    std::size_t i = 0;
    for (const auto& [v, b] : eval_all<double>(k, n, x)) acc += node_values[i++] * b;
    worst = std::max(worst, std::fabs(acc - f(x)));
  }
  return worst;
}

std::vector<SimplexPointF> barycentric_grid(int k, int subdivisions) {
  if (subdivisions < 1) throw InvalidInput("grid subdivisions must be >= 1");
  std::vector<SimplexPointF> grid;
  for (const MultiIndex& v : enumerate_multi_indices(k, subdivisions))
    grid.push_back(lattice_node(v, subdivisions));
  return grid;
}

std::vector<ConvergenceRow> convergence_table(const SampledFunction& f,
                                              const std::vector<int>& degrees,
                                              const Rational& grid_step) {
  if (degrees.empty()) throw EmptyDegrees("need at least one degree");
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (degrees[i] < 1)
      throw InvalidInput("degrees must be >= 1, got " +
                         std::to_string(degrees[i]));
    if (i > 0 && degrees[i] <= degrees[i - 1])
      throw InvalidInput("degrees must be strictly ascending");
  }
  if (numerator(grid_step) != 1 || denominator(grid_step) < 1)
    throw InvalidInput("grid step must be a unit fraction 1/M");
  const int subdivisions = denominator(grid_step).convert_to<int>();

  const std::vector<SimplexPointF> grid = barycentric_grid(f.arity, subdivisions);
  std::vector<ConvergenceRow> rows;
  rows.reserve(degrees.size());
  for (int n : degrees)
    rows.push_back({f.label, f.arity, n, grid_step, sup_error(f, n, grid)});
  return rows;
}

}  // namespace bernstein
