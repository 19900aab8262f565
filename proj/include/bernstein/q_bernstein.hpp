#pragma once

#include <span>
#include <vector>

#include "bernstein/basis.hpp"
#include "bernstein/identities.hpp"
#include "bernstein/report.hpp"

namespace bernstein {

/// Deformation parameter, restricted to 0 < q <= 1. q = 1 is the classical
/// case and every q-operation collapses to its classical counterpart there.
class QParam {
 public:
  explicit QParam(double q);

  double value() const { return q_; }
  bool classical() const { return q_ == 1.0; }

 private:
  double q_;
};

/// q^x for real x, always via exp(x log q) so both sides of any identity
/// share one rounding path.
double q_pow(const QParam& q, double x);

/// [x]_q = (1 - q^x)/(1 - q), and x itself at q = 1. Monotone increasing in
/// x, with [0]_q = 0 and [1]_q = 1 exactly.
double q_bracket(double x, const QParam& q);

/// A basis member together with its deformation: B_{v,n}(. | q).
struct QBasisId {
  QBasisId(MultiIndex index, int degree, QParam q_in)
      : id(std::move(index), degree), q(q_in) {}
  QBasisId(BasisId id_in, QParam q_in) : id(std::move(id_in)), q(q_in) {}

  BasisId id;
  QParam q;
};

/// B_{v,n}(x | q) = C(n,v) [x_1]_q^{v_1}...[x_k]_q^{v_k} [1-|x|]_q^{n-|v|}.
/// At q = 1 this calls the classical evaluator, bit for bit.
double q_basis_eval(const QBasisId& b, const SimplexPointF& x);

/// |B_{v,n}(x | q) - B_{v,n}(x)| for each q in `ascending_q` (strictly
/// increasing, each in (0,1]). The gaps shrink toward 0 as q approaches 1.
std::vector<double> q_limit_gaps(const BasisId& id, const SimplexPointF& x,
                                 std::span<const double> ascending_q);

/// Knobs for the q-identity checkers, on top of the classical CheckConfig.
/// Float comparisons are relative; `absolute_floor` (scaled by the basis
/// coefficient) absorbs the ulp-sized phantoms that appear when a transformed
/// point should land exactly on the simplex boundary but float summation
/// misses it by ~1e-16.
struct QCheckConfig {
  CheckConfig base{};
  double relative_tolerance = 1e-11;
  double absolute_floor = 1e-12;
  bool exact_pass = true;
  int exact_scale = 8;  // exact points have coordinates a_i/exact_scale
};

/// Decomposition identity with every basis value deformed by each q in `qs`:
/// float pass at the relative tolerance, plus an exact rational pass at
/// scaled points where q^{x_i} stays rational. Suite name "thm3".
Report check_q_decomposition(int k, int n_max, std::span<const double> qs,
                             const QCheckConfig& cfg = {},
                             DecompositionWeight rule = DecompositionWeight::standard);

/// Axis and permutation symmetry of the deformed basis, same two-pass
/// scheme. Suite name "thm4".
Report check_q_symmetry(int k, int n_max, std::span<const double> qs,
                        const QCheckConfig& cfg = {});

/// [a/s]_{q0^s} = (1 - q0^a)/(1 - q0^s): at arguments a/s with deformation
/// q0^s, the bracket of a rational q0 in (0,1) is itself rational. This is
/// the engine of the exact q pass.
Rational scaled_q_bracket(int numerator, const Rational& q0, int scale);

/// B_{v,n}(x | q0^s) in exact rationals at x = (a_1/s,...,a_k/s).
Rational scaled_q_basis_eval(const MultiIndex& v, int n,
                             const std::vector<int>& numerators,
                             const Rational& q0, int scale);

}  // namespace bernstein
