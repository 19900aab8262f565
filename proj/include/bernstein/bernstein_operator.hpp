#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "bernstein/basis.hpp"

namespace bernstein {

/// A black-box real-valued function on Delta_k. The evaluator must be total
/// on the closed simplex (boundary included), reentrant and side-effect
/// free.
struct SampledFunction {
  int arity;
  std::function<double(const SimplexPointF&)> evaluator;
  std::string label;

  double operator()(const SimplexPointF& x) const { return evaluator(x); }
};

/// The lattice node v/n as a float point; coordinates are single divisions
/// of exact integers, so placement carries no accumulated roundoff.
SimplexPointF lattice_node(const MultiIndex& v, int n);

/// The approximation operator: sum over |v| <= n of f(v/n) B_{v,n}(x).
/// The nodes v/n always lie in Delta_k, so f is never sampled outside its
/// domain.
double apply(const SampledFunction& f, int n, const SimplexPointF& x);

/// max over the grid of |apply(f,n,x) - f(x)|. Node values are computed
/// once and reused across grid points.
double sup_error(const SampledFunction& f, int n,
                 std::span<const SimplexPointF> grid);

/// The uniform barycentric lattice {v/M : |v| <= M} on Delta_k.
std::vector<SimplexPointF> barycentric_grid(int k, int subdivisions);

struct ConvergenceRow {
  std::string function;
  int k;
  int degree;
  Rational grid_step;
  double sup_error;
};

/// One sup-error row per degree over the lattice with step grid_step (which
/// must be a unit fraction 1/M). Degrees must be nonempty and ascending.
std::vector<ConvergenceRow> convergence_table(const SampledFunction& f,
                                              const std::vector<int>& degrees,
                                              const Rational& grid_step);

}  // namespace bernstein
