#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "bernstein/bernstein_operator.hpp"
#include "bernstein/point_sampler.hpp"
#include "bernstein/test_functions.hpp"

using namespace bernstein;

namespace {

// Sum of f(v/n) B_{v,n}(x) in exact rationals, for functions of the node
// that are themselves rational. Independent of apply(): per-member eval,
// no shared evaluation walk.
Rational exact_operator_on_coord(int n, const SimplexPointQ& x) {
  Rational acc(0);
  for (const MultiIndex& v : enumerate_multi_indices(x.dimension(), n))
    acc += Rational(v[0], n) * eval<Rational>(BasisId(v, n), x);
  return acc;
}

}  // namespace

TEST_CASE("lattice nodes are exact coordinate divisions") {
  SimplexPointF node = lattice_node(MultiIndex({1, 2}), 4);
  CHECK(node[0] == 0.25);
  CHECK(node[1] == 0.5);
  SimplexPointF vertex = lattice_node(MultiIndex({4, 0}), 4);
  CHECK(vertex[0] == 1.0);
  CHECK(vertex.one_minus_total() == 0.0);
}

TEST_CASE("bundled registry") {
  CHECK(test_function_labels() ==
        std::vector<std::string>{"const", "coord", "prod", "exp", "cone"});
  CHECK_THROWS_AS(make_test_function("nosuch", 2), InvalidInput);
  CHECK_THROWS_AS(make_test_function("prod", 1), ArityMismatch);
  CHECK_THROWS_AS(make_test_function("const", 0), InvalidInput);

  SampledFunction cone = make_test_function("cone", 2);
  CHECK(cone(SimplexPointF(std::vector<double>{1.0 / 3, 1.0 / 3})) ==
        doctest::Approx(0.0));
  CHECK(cone(SimplexPointF(std::vector<double>{1.0, 0.0})) ==
        doctest::Approx(2.0 / 3));
}

TEST_CASE("constant reproduction") {
  SampledFunction c = make_test_function("const", 2);
  RationalPointSampler sampler(0x5EED);
  for (const SimplexPointQ& xq : sampler.sample_set(2, 5, 64)) {
    SimplexPointF x = to_float(xq);
    for (int n : {1, 5, 17, 64})
      CHECK(std::abs(apply(c, n, x) - 1.0) <= 1e-13);
  }
}

TEST_CASE("coordinate reproduction") {
  SampledFunction coord = make_test_function("coord", 2);
  SimplexPointF pinned(std::vector<double>{0.3, 0.2});
  // Brute-force over all 15 degree-4 members gives x_1 back.
  CHECK(apply(coord, 4, pinned) == doctest::Approx(0.3).epsilon(1e-12));

  // Exact-arithmetic version of the same sum, n <= 10.
  RationalPointSampler sampler(0x5EED + 10);
  for (int k = 1; k <= 3; ++k)
    for (const SimplexPointQ& x : sampler.sample_set(k, 4, 64))
      for (int n : {1, 4, 10})
        CHECK(exact_operator_on_coord(n, x) == x[0]);

  // Float path stays within the affine-reproduction tolerance up to n = 50.
  for (int n : {25, 50})
    CHECK(std::abs(apply(coord, n, pinned) - 0.3) <= 1e-10);
}

TEST_CASE("one-dimensional quadratic pinned value") {
  SampledFunction square{1, [](const SimplexPointF& x) { return x[0] * x[0]; },
                         "square"};
  // Nodes 0, 1/2, 1 carry basis weights 1/4, 1/2, 1/4 at x = 1/2, so the
  // operator value is 0/4 + (1/4)(1/2) + (1)(1/4) = 3/8.
  CHECK(apply(square, 2, SimplexPointF(std::vector<double>{0.5})) ==
        doctest::Approx(0.375).epsilon(1e-15));
}

TEST_CASE("degree and arity validation") {
  SampledFunction c = make_test_function("const", 2);
  SimplexPointF x(std::vector<double>{0.2, 0.3});
  CHECK_THROWS_AS(apply(c, 0, x), InvalidInput);
  CHECK_THROWS_AS(apply(c, 3, SimplexPointF(std::vector<double>{0.2})),
                  ArityMismatch);
}

TEST_CASE("positivity and bound preservation") {
  SampledFunction cone = make_test_function("cone", 2);
  RationalPointSampler sampler(0x5EED + 11);
  for (const SimplexPointQ& xq : sampler.sample_set(2, 5, 64)) {
    SimplexPointF x = to_float(xq);
    for (int n : {2, 7}) {
      double lo = 1e300, hi = -1e300;
      for (const MultiIndex& v : enumerate_multi_indices(2, n)) {
        double fv = cone(lattice_node(v, n));
        lo = std::min(lo, fv);
        hi = std::max(hi, fv);
      }
      double value = apply(cone, n, x);
      CHECK(value >= lo - 1e-13);
      CHECK(value <= hi + 1e-13);
      CHECK(value >= 0.0);
    }
  }
}

TEST_CASE("sup_error") {
  SampledFunction coord = make_test_function("coord", 2);
  std::vector<SimplexPointF> one_point = {SimplexPointF({0.3, 0.2})};
  double direct = std::abs(apply(coord, 3, one_point[0]) - 0.3);
  CHECK(sup_error(coord, 3, one_point) == doctest::Approx(direct).epsilon(1e-15));

  SampledFunction c = make_test_function("const", 2);
  CHECK(sup_error(c, 9, barycentric_grid(2, 10)) <= 1e-13);

  CHECK_THROWS_AS(sup_error(c, 3, std::vector<SimplexPointF>{}), EmptyGrid);
}

TEST_CASE("barycentric grid") {
  auto grid = barycentric_grid(2, 20);
  CHECK(grid.size() == 231);  // C(22, 2)
  auto contains = [&](double a, double b) {
    return std::any_of(grid.begin(), grid.end(), [&](const SimplexPointF& p) {
      return p[0] == a && p[1] == b;
    });
  };
  CHECK(contains(0.0, 0.0));
  CHECK(contains(1.0, 0.0));
  CHECK(contains(0.0, 1.0));
  CHECK(contains(0.5, 0.5));

  auto line = barycentric_grid(1, 4);
  CHECK(line.size() == 5);
  CHECK(line[1][0] == 0.25);

  CHECK_THROWS_AS(barycentric_grid(2, 0), InvalidInput);
}

TEST_CASE("convergence table contracts") {
  SampledFunction prod = make_test_function("prod", 2);
  CHECK_THROWS_AS(convergence_table(prod, {}, Rational(1, 20)), EmptyDegrees);
  CHECK_THROWS_AS(convergence_table(prod, {4, 2}, Rational(1, 20)), InvalidInput);
  CHECK_THROWS_AS(convergence_table(prod, {4, 4}, Rational(1, 20)), InvalidInput);
  CHECK_THROWS_AS(convergence_table(prod, {0, 2}, Rational(1, 20)), InvalidInput);
  CHECK_THROWS_AS(convergence_table(prod, {2, 4}, Rational(2, 5)), InvalidInput);

  auto rows = convergence_table(prod, {4, 8}, Rational(1, 20));
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].function == "prod");
  CHECK(rows[0].k == 2);
  CHECK(rows[0].degree == 4);
  CHECK(rows[0].grid_step == Rational(1, 20));
  // B_n(x_1 x_2) - x_1 x_2 = -x_1 x_2 / n, worst on-grid at (1/2, 1/2).
  CHECK(rows[0].sup_error == doctest::Approx(0.0625).epsilon(1e-10));
  CHECK(rows[1].sup_error == doctest::Approx(0.03125).epsilon(1e-10));
}

TEST_CASE("convergence trend for the non-smooth cone") {
  SampledFunction cone = make_test_function("cone", 2);
  auto rows = convergence_table(cone, {4, 8, 16, 32}, Rational(1, 20));
  REQUIRE(rows.size() == 4);
  for (std::size_t i = 1; i < rows.size(); ++i)
    CHECK(rows[i].sup_error <= rows[i - 1].sup_error);
  CHECK(rows.back().sup_error <= 0.5 * rows.front().sup_error);
}
