#pragma once

#include <algorithm>
#include <sstream>
#include <type_traits>
#include <vector>

#include "bernstein/exact.hpp"
#include "bernstein/errors.hpp"

namespace bernstein {

/// Float-flavor slack: coordinates down to -kSimplexSlack are clamped to 0,
/// and sums up to 1 + kSimplexSlack are accepted (the excess is absorbed by
/// clamping 1 - |x| at 0, never by renormalizing the coordinates).
inline constexpr double kSimplexSlack = 1e-12;

/// A point of the simplex Delta_k: coordinates x_i >= 0 with sum <= 1.
/// Scalar is double (tolerant flavor) or Rational (exact flavor, strict).
/// Invariants are established at construction; instances are immutable.
template <class Scalar>
class SimplexPoint {
  static_assert(std::is_same_v<Scalar, double> ||
                std::is_same_v<Scalar, Rational>);

 public:
  explicit SimplexPoint(std::vector<Scalar> coords)
      : coords_(std::move(coords)) {
    if (coords_.empty())
      throw InvalidInput("a simplex point needs at least one coordinate");
    if constexpr (std::is_same_v<Scalar, double>) {
      for (Scalar& c : coords_) {
        if (!(c >= -kSimplexSlack))
          throw OutOfSimplex("coordinate " + describe(c) + " is negative");
        c = std::max(c, 0.0);
      }
    } else {
      for (const Scalar& c : coords_)
        if (c < 0)
          throw OutOfSimplex("coordinate " + describe(c) + " is negative");
    }
    total_ = Scalar(0);
    for (const Scalar& c : coords_) total_ += c;
    if constexpr (std::is_same_v<Scalar, double>) {
      if (!(total_ <= 1.0 + kSimplexSlack))
        throw OutOfSimplex("coordinate sum " + describe(total_) + " exceeds 1");
    } else {
      if (total_ > 1)
        throw OutOfSimplex("coordinate sum " + describe(total_) + " exceeds 1");
    }
  }

  static SimplexPoint origin(int k) {
    return SimplexPoint(std::vector<Scalar>(k, Scalar(0)));
  }

  int dimension() const { return static_cast<int>(coords_.size()); }
  const Scalar& operator[](int i) const { return coords_[i]; }
  const std::vector<Scalar>& coords() const { return coords_; }

  /// |x| = x_1 + ... + x_k.
  const Scalar& total() const { return total_; }

  /// 1 - |x|, clamped at 0 in the float flavor so roundoff from upstream
  /// grids cannot leak a negative base into the basis products.
  Scalar one_minus_total() const {
    if constexpr (std::is_same_v<Scalar, double>)
      return std::max(1.0 - total_, 0.0);
    else
      return Rational(1) - total_;
  }

  bool operator==(const SimplexPoint&) const = default;

 private:
  static std::string describe(const Scalar& c) {
    std::ostringstream os;
    os << c;
    return os.str();
  }

  std::vector<Scalar> coords_;
  Scalar total_;
};

using SimplexPointF = SimplexPoint<double>;
using SimplexPointQ = SimplexPoint<Rational>;

inline SimplexPointF to_float(const SimplexPointQ& x) {
  std::vector<double> c(x.dimension());
  for (int i = 0; i < x.dimension(); ++i) c[i] = to_double(x[i]);
  return SimplexPointF(std::move(c));
}

}  // namespace bernstein
