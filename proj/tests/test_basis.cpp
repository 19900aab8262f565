#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "bernstein/basis.hpp"
#include "bernstein/point_sampler.hpp"

using namespace bernstein;

namespace {

SimplexPointQ qpoint(std::vector<Rational> coords) {
  return SimplexPointQ(std::move(coords));
}

// |a - b| measured in units in the last place of the larger magnitude.
double ulp_distance(double a, double b) {
  if (a == b) return 0.0;
  double scale = std::ldexp(1.0, std::ilogb(std::max(std::abs(a), std::abs(b))) - 52);
  return std::abs(a - b) / scale;
}

}  // namespace

TEST_CASE("basis id validation") {
  BasisId id(MultiIndex({1, 1}), 2);
  CHECK(id.degree() == 2);
  CHECK(id.index() == MultiIndex({1, 1}));
  CHECK_THROWS_AS(BasisId(MultiIndex({2, 1}), 2), DegreeMismatch);
  CHECK_THROWS_AS(BasisId(MultiIndex({0, 0}), -1), InvalidInput);

  CHECK(basis_coefficient(BasisId(MultiIndex({1, 0}), 2)) == 2);
  CHECK(basis_coefficient(BasisId(MultiIndex({2, 2}), 5)) == 30);
}

TEST_CASE("simplex point validation") {
  SUBCASE("exact flavor is strict") {
    CHECK_THROWS_AS(qpoint({Rational(-1, 100), Rational(0)}), OutOfSimplex);
    CHECK_THROWS_AS(qpoint({Rational(3, 4), Rational(1, 2)}), OutOfSimplex);
    CHECK_THROWS_AS(SimplexPointQ(std::vector<Rational>{}), InvalidInput);
    SimplexPointQ face = qpoint({Rational(1, 2), Rational(1, 2)});
    CHECK(face.one_minus_total() == 0);
  }
  SUBCASE("float flavor clamps slack, rejects beyond it") {
    SimplexPointF nudged(std::vector<double>{-1e-13, 0.5});
    CHECK(nudged[0] == 0.0);
    CHECK_THROWS_AS(SimplexPointF(std::vector<double>{-1e-10, 0.5}), OutOfSimplex);
    SimplexPointF full(std::vector<double>{0.5, 0.5 + 5e-13});
    CHECK(full.one_minus_total() == 0.0);  // clamped, never negative
    CHECK_THROWS_AS(SimplexPointF(std::vector<double>{0.5, 0.5 + 1e-11}),
                    OutOfSimplex);
    double nan = std::nan("");
    CHECK_THROWS_AS(SimplexPointF(std::vector<double>{nan, 0.1}), OutOfSimplex);
  }
}

TEST_CASE("eval pinned values") {
  // 2 * (1/2) * (1/4) with an empty tail factor.
  CHECK(eval<Rational>(BasisId(MultiIndex({1, 0}), 2),
                       qpoint({Rational(1, 2), Rational(1, 4)})) == Rational(1, 4));
  // 2 * (1/16) * (1/2)^0
  CHECK(eval<Rational>(BasisId(MultiIndex({1, 1}), 2),
                       qpoint({Rational(1, 4), Rational(1, 4)})) == Rational(1, 8));
  // Constant member at the origin.
  CHECK(eval<Rational>(BasisId(MultiIndex::zeros(3), 7),
                       SimplexPointQ::origin(3)) == 1);
  // Vertex values: the matching member is 1, every other member 0.
  SimplexPointQ vertex = qpoint({Rational(1), Rational(0)});
  CHECK(eval<Rational>(BasisId(MultiIndex({3, 0}), 3), vertex) == 1);
  CHECK(eval<Rational>(BasisId(MultiIndex({2, 1}), 3), vertex) == 0);
  CHECK(eval<Rational>(BasisId(MultiIndex({0, 0}), 3), vertex) == 0);

  CHECK_THROWS_AS(eval<Rational>(BasisId(MultiIndex({1}), 2),
                                 qpoint({Rational(1, 2), Rational(1, 4)})),
                  DimensionMismatch);
}

TEST_CASE("zero powers follow the 0^0 = 1 convention") {
  // On |x| = 1 the tail base is 0; members with |v| = n must survive.
  SimplexPointQ face = qpoint({Rational(1, 3), Rational(2, 3)});
  CHECK(eval<Rational>(BasisId(MultiIndex({1, 2}), 3), face) ==
        Rational(3) * Rational(1, 3) * Rational(4, 9));
  CHECK(eval<Rational>(BasisId(MultiIndex({1, 1}), 3), face) == 0);
}

TEST_CASE("k=1 reduces to the ordinary one-variable basis") {
  // C(n,v) x^v (1-x)^{n-v}, expanded by hand for n = 3 at x = 1/3.
  SimplexPointQ x = qpoint({Rational(1, 3)});
  CHECK(eval<Rational>(BasisId(MultiIndex({0}), 3), x) == Rational(8, 27));
  CHECK(eval<Rational>(BasisId(MultiIndex({1}), 3), x) == Rational(12, 27));
  CHECK(eval<Rational>(BasisId(MultiIndex({2}), 3), x) == Rational(6, 27));
  CHECK(eval<Rational>(BasisId(MultiIndex({3}), 3), x) == Rational(1, 27));
}

TEST_CASE("nonnegativity and the unit upper bound") {
  RationalPointSampler sampler(0x5EED);
  for (int k = 1; k <= 3; ++k)
    for (const SimplexPointQ& x : sampler.sample_set(k, 5, 32))
      for (const auto& [v, value] : eval_all<Rational>(k, 4, x)) {
        CHECK(value >= 0);
        CHECK(value <= 1);
      }
}

TEST_CASE("eval_all small cases") {
  SimplexPointF x1(std::vector<double>{0.3});
  auto line = eval_all<double>(1, 1, x1);
  CHECK(line.size() == 2);
  CHECK(line.at(MultiIndex({0})) == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(line.at(MultiIndex({1})) == doctest::Approx(0.3).epsilon(1e-15));

  SimplexPointF x2(std::vector<double>{0.2, 0.3});
  auto tri = eval_all<double>(2, 1, x2);
  CHECK(tri.size() == 3);
  CHECK(tri.at(MultiIndex({0, 0})) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(tri.at(MultiIndex({0, 1})) == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(tri.at(MultiIndex({1, 0})) == doctest::Approx(0.2).epsilon(1e-15));

  CHECK_THROWS_AS(eval_all<double>(3, 1, x2), DimensionMismatch);
}

TEST_CASE("eval_all agrees with per-member eval") {
  RationalPointSampler sampler(0x5EED + 1);
  for (int k = 1; k <= 3; ++k)
    for (int n : {0, 1, 3, 5})
      for (const SimplexPointQ& x : sampler.sample_set(k, 4, 64)) {
        auto exact = eval_all<Rational>(k, n, x);
        CHECK(exact.size() == enumerate_multi_indices(k, n).size());
        for (const auto& [v, value] : exact)
          CHECK(value == eval<Rational>(BasisId(v, n), x));

        SimplexPointF xf = to_float(x);
        for (const auto& [v, value] : eval_all<double>(k, n, xf))
          CHECK(ulp_distance(value, eval<double>(BasisId(v, n), xf)) <= 4.0);
      }
}

TEST_CASE("partition of unity, exact") {
  CHECK(partition_check(2, 3, qpoint({Rational(1, 3), Rational(1, 3)})) == 1);
  CHECK(partition_check(1, 5, qpoint({Rational(0)})) == 1);
  CHECK(partition_check(3, 4, qpoint({Rational(1, 5), Rational(1, 5),
                                      Rational(1, 5)})) == 1);

  RationalPointSampler sampler(0x5EED + 2);
  for (int k = 1; k <= 4; ++k)
    for (int n : {1, 2, 6, 10})
      for (const SimplexPointQ& x : sampler.sample_set(k, 4, 64))
        CHECK(partition_check(k, n, x) == 1);
}

TEST_CASE("partition of unity, float") {
  RationalPointSampler sampler(0x5EED + 3);
  for (int k = 1; k <= 4; ++k)
    for (const SimplexPointQ& xq : sampler.sample_set(k, 4, 64)) {
      SimplexPointF x = to_float(xq);
      for (int n : {5, 17, 30}) {
        double sum = 0.0;
        for (const auto& [v, value] : eval_all<double>(k, n, x)) sum += value;
        CHECK(std::abs(sum - 1.0) <= 1e-12);
      }
    }
}

TEST_CASE("generating series matches its closed form") {
  SUBCASE("series collapses to the exponential at the v = 0 fiber") {
    SimplexPointF origin = SimplexPointF::origin(1);
    for (double t : {-2.0, -0.5, 0.3, 1.0, 2.0})
      CHECK(std::abs(generating_partial(MultiIndex({0}), origin, t, 40) -
                     std::exp(t)) <= 1e-10);
  }
  SUBCASE("pinned interior case") {
    SimplexPointF x(std::vector<double>{0.5, 0.25});
    double partial = generating_partial(MultiIndex({1, 0}), x, 1.0, 40);
    CHECK(partial == doctest::Approx(0.5 * std::exp(0.25)).epsilon(1e-12));
    double closed = generating_closed(MultiIndex({1, 0}), x, 2.0);
    CHECK(closed == doctest::Approx(std::exp(0.5)).epsilon(1e-12));
  }
  SUBCASE("vertex case has no exponential tail") {
    SimplexPointF one(std::vector<double>{1.0});
    CHECK(generating_partial(MultiIndex({2}), one, 1.0, 40) ==
          doctest::Approx(0.5).epsilon(1e-12));
    CHECK(generating_closed(MultiIndex({2}), one, 1.0) ==
          doctest::Approx(0.5).epsilon(1e-12));
  }
  SUBCASE("degenerate closed-form values") {
    SimplexPointF x(std::vector<double>{0.2, 0.1});
    CHECK(generating_closed(MultiIndex({0, 0}), x, 0.0) == 1.0);
    CHECK(generating_closed(MultiIndex({1}), SimplexPointF::origin(1), 3.0) == 0.0);
  }
  SUBCASE("sampled agreement at truncation 40") {
    RationalPointSampler sampler(0x5EED + 4);
    for (int k = 1; k <= 3; ++k)
      for (const SimplexPointQ& xq : sampler.sample_set(k, 4, 64)) {
        SimplexPointF x = to_float(xq);
        for (const MultiIndex& v : enumerate_multi_indices(k, 3))
          for (double t : {-2.0, 0.7, 2.0})
            CHECK(std::abs(generating_partial(v, x, t, 40) -
                           generating_closed(v, x, t)) <= 1e-10);
      }
  }
  SUBCASE("truncation below |v| is rejected") {
    CHECK_THROWS_AS(generating_partial(MultiIndex({1, 1}), SimplexPointF::origin(2),
                                       1.0, 0),
                    TruncationTooSmall);
    CHECK_THROWS_AS(generating_partial(MultiIndex({3}), SimplexPointF::origin(1),
                                       1.0, 2),
                    TruncationTooSmall);
  }
}
