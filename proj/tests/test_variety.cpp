#include <doctest.h>

#include <qspec/variety.hpp>

#include "oracle.hpp"

#include <set>

using namespace qspec;

TEST_CASE("construction and validation")
{
  CompleteIntersection ci(4, {3, 2, 2});
  CHECK(ci.degrees() == std::vector<int>{2, 2, 3});
  CHECK(ci.label() == "X_4(2,2,3)");
  CHECK(ci == CompleteIntersection(4, {2, 3, 2}));

  using R = InvalidInstance::Reason;
  auto reason = [](int n, std::vector<int> d) {
    try {
      CompleteIntersection c(n, std::move(d));
    } catch (const InvalidInstance& e) {
      return e.reason();
    }
    FAIL("expected InvalidInstance");
    return R::NoDegrees;
  };
  CHECK(reason(2, {2}) == R::DelPezzo);
  CHECK(reason(1, {2}) == R::DimensionTooSmall);
  CHECK(reason(4, {}) == R::NoDegrees);
  CHECK(reason(4, {1, 3}) == R::DegreeTooSmall);
  CHECK(reason(3, {5}) == R::NotFano);
  CHECK(reason(4, {3, 4}) == R::NotFano);

  try {
    CompleteIntersection c(3, {5});
  } catch (const InvalidInstance& e) {
    CHECK(std::string(e.what()) == "not Fano: rho = 0");
  }
}

TEST_CASE("fano_index")
{
  CHECK(fano_index(CompleteIntersection(4, {3})) == 3);
  CHECK(fano_index(CompleteIntersection(4, {2, 2, 3})) == 1);
  CHECK(fano_index(CompleteIntersection(3, {2})) == 3);
}

TEST_CASE("chern_coefficients")
{
  auto cubic = chern_coefficients(CompleteIntersection(4, {3}));
  REQUIRE(cubic.size() == 5);
  CHECK(cubic[0] == Rational(1));
  CHECK(cubic[4] == Rational(9));
  CHECK(chern_coefficients(CompleteIntersection(4, {2, 2, 3}))[4] == Rational(27));

  for (const auto& ci : enumerate_fano_cis(8, 8)) {
    auto c = chern_coefficients(ci);
    auto ref = oracle::chern(ci.dim(), ci.degrees());
    REQUIRE(c.size() == ref.size());
    for (std::size_t p = 0; p < c.size(); ++p)
      CHECK(c[p] == Rational(ref[p]));
  }
}

TEST_CASE("euler_characteristic")
{
  CHECK(euler_characteristic(CompleteIntersection(4, {3})) == 27);
  CHECK(euler_characteristic(CompleteIntersection(4, {5})) == 825);
  CHECK(euler_characteristic(CompleteIntersection(4, {2, 2, 3})) == 324);
  CHECK(euler_characteristic(CompleteIntersection(4, {3, 3})) == 369);
  // quadric threefold and cubic threefold
  CHECK(euler_characteristic(CompleteIntersection(3, {2})) == 4);
  CHECK(euler_characteristic(CompleteIntersection(3, {3})) == -6);
  CHECK(euler_characteristic(CompleteIntersection(6, {2, 3, 4}))
        == euler_characteristic(CompleteIntersection(6, {4, 2, 3})));
}

TEST_CASE("primitive_dimension")
{
  CHECK(primitive_dimension(CompleteIntersection(4, {5})) == 820);
  CHECK(primitive_dimension(CompleteIntersection(5, {2, 2})) == 0);
  CHECK(primitive_dimension(CompleteIntersection(4, {2, 2, 3})) == 319);

  for (const auto& ci : enumerate_fano_cis(12, 12)) {
    auto inv = invariants(ci);
    CHECK(inv.rho >= 1);
    CHECK(inv.rho <= ci.dim());
    CHECK(inv.euler == inv.degreeProduct * inv.chernCoeffs.back().to_integer());
    for (const auto& c : inv.chernCoeffs)
      CHECK(c.is_integer());
    if (ci.dim() % 2 != 0)
      CHECK(inv.primitiveDim == 0);
    else {
      CHECK(inv.primitiveDim == inv.euler - (ci.dim() + 1));
      if (inv.rho == 1)
        CHECK(inv.primitiveDim > 0);
    }
  }
}

TEST_CASE("D and F")
{
  CompleteIntersection ci(4, {2, 2, 3});
  CHECK(power_product(ci) == 432);
  CHECK(factorial_product(ci) == 24);
  CHECK(degree_product(ci) == 12);
  CHECK(power_product(CompleteIntersection(8, {9})) == Integer("387420489"));
}

TEST_CASE("enumerate_fano_cis")
{
  auto small = enumerate_fano_cis(3, 1);
  CHECK(small == std::vector<CompleteIntersection>{CompleteIntersection(3, {2}),
                                                   CompleteIntersection(3, {3}),
                                                   CompleteIntersection(3, {4})});
  CHECK(enumerate_fano_cis(4, 1).size() == 7);
  CHECK_THROWS_AS(enumerate_fano_cis(2, 1), std::invalid_argument);

  auto all = enumerate_fano_cis(6, 6);
  CHECK(all.size() == oracle::count_fano(6, 6));
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(std::set<CompleteIntersection>(all.begin(), all.end()).size() == all.size());
  for (const auto& ci : all) {
    CHECK(std::is_sorted(ci.degrees().begin(), ci.degrees().end()));
    CHECK(fano_index(ci) >= 1);
  }

  std::size_t visited = 0;
  for_each_fano_ci(6, 6, [&](const CompleteIntersection&) { ++visited; });
  CHECK(visited == all.size());
}
