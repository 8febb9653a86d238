#include <doctest.h>

#include <qspec/gw.hpp>

#include "oracle.hpp"

#include <random>

using namespace qspec;

TEST_CASE("mirror_coefficients")
{
  auto quintic = mirror_coefficients(CompleteIntersection(4, {5}));
  REQUIRE(quintic.values.size() == 5);
  CHECK(quintic[0] == Rational(0));
  CHECK(quintic[1] == Rational(3250));
  CHECK(mirror_coefficients(CompleteIntersection(3, {3}))[1] == Rational(9));

  SUBCASE("agrees with an independent expansion")
  {
    for (const auto& ci : enumerate_fano_cis(8, 8)) {
      auto mc = mirror_coefficients(ci);
      auto ref = oracle::mirror(ci.dim(), ci.degrees());
      REQUIRE(mc.values.size() == ref.size());
      for (std::size_t a = 0; a < ref.size(); ++a)
        CHECK(mc[a] == Rational(ref[a].get_num(), ref[a].get_den()));
      CHECK(mc[0].is_zero());
    }
  }
}

TEST_CASE("one_point_descendant")
{
  CompleteIntersection quintic(4, {5});
  CHECK(one_point_descendant(quintic, 0) == Rational(0));
  CHECK(one_point_descendant(quintic, 1) == Rational(3250));
  auto mc = mirror_coefficients(quintic);
  for (int a = 0; a <= 4; ++a)
    CHECK(one_point_descendant(quintic, a) == mc[static_cast<std::size_t>(a)]);
  CHECK_THROWS_AS(one_point_descendant(quintic, -1), IndexRange);
  CHECK_THROWS_AS(one_point_descendant(quintic, 5), IndexRange);
}

TEST_CASE("two_point_pure")
{
  CompleteIntersection ci(4, {2, 2, 3});
  auto I = mirror_coefficients(ci);
  for (int a = 0; a <= 4; ++a)
    CHECK(two_point_pure(ci, 0, a) == I[static_cast<std::size_t>(a)]);
  CHECK(two_point_pure(ci, 1, 0) == I[1]);
  CHECK(two_point_pure(ci, 2, 0) == I[0] + Rational(2) * I[1] + I[2]);
  // two applications of the divisor recursion
  CHECK(two_point_pure(ci, 2, 0)
        == two_point_pure(ci, 0, 0) + Rational(2) * two_point_pure(ci, 0, 1)
           + two_point_pure(ci, 0, 2));
  CHECK_THROWS_AS(two_point_pure(ci, 3, 2), IndexRange);
  CHECK_THROWS_AS(two_point_pure(ci, -1, 0), IndexRange);
  CHECK_THROWS_AS(two_point_pure(ci, 0, -1), IndexRange);
}

TEST_CASE("divisor recursion and hockey-stick collapse")
{
  auto all = enumerate_fano_cis(10, 10);
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int trial = 0; trial < 10; ++trial) {
    const auto& ci = all[pick(rng)];
    const auto mc = mirror_coefficients(ci);
    const int n = ci.dim();
    for (int i = 1; i <= n; ++i)
      for (int a = 0; i + a <= n; ++a)
        CHECK(two_point_pure(ci, mc, i, a)
              == two_point_pure(ci, mc, i - 1, a) + two_point_pure(ci, mc, i - 1, a + 1));
    Rational lhs, rhs;
    for (int i = 0; i <= n; ++i)
      lhs += two_point_pure(ci, mc, i, 0);
    for (int p = 0; p <= n; ++p)
      rhs += Rational(binomial(n + 1, p + 1)) * mc[static_cast<std::size_t>(p)];
    CHECK(lhs == rhs);
  }
}

TEST_CASE("chern_descendant_combination")
{
  CompleteIntersection cubic(4, {3});
  auto c = chern_coefficients(cubic);
  auto I = mirror_coefficients(cubic);
  CHECK(chern_descendant_combination(cubic, 2) == -I[4]);
  CHECK(chern_descendant_combination(cubic, 0) == -(c[2] * I[2]));
  CHECK(chern_descendant_combination(cubic, 0) == Rational(324));
  for (int p = 0; p <= 2; ++p)
    CHECK(chern_descendant_combination(cubic, p)
          == -(c[static_cast<std::size_t>(2 - p)] * I[static_cast<std::size_t>(p + 2)]));
  CHECK_THROWS_AS(chern_descendant_combination(cubic, 3), IndexRange);
  CHECK_THROWS_AS(chern_descendant_combination(cubic, -1), IndexRange);
}

TEST_CASE("genus_one_one_point_H")
{
  CHECK(genus_one_one_point_H(CompleteIntersection(4, {3})) == Rational(Integer(-1), Integer(4)));
  for (const auto& ci : enumerate_fano_cis(8, 4)) {
    Rational v = genus_one_one_point_H(ci);
    CHECK((Integer(24) % v.denominator()) == 0);
    auto c = chern_coefficients(ci);
    CHECK(v * Rational(-24) == Rational(degree_product(ci)) * c[static_cast<std::size_t>(ci.dim() - 1)]);
  }
}

TEST_CASE("genus-one topological recursion closes with lambda = -F")
{
  // <tau_1(H)>_{1,1} = (1/deg) <H^{N-1}>_{0,1} <H>_{1,0}
  //                  + (1/(24 deg)) sum_i <H^i, H^{N-i}>_{0,1} + N' lambda / 24
  for (const auto& ci : enumerate_fano_cis(10, 10)) {
    if (ci.dim() % 2 != 0 || fano_index(ci) != 1)
      continue;
    const auto mc = mirror_coefficients(ci);
    const Rational deg(degree_product(ci));
    Rational pure;
    for (int i = 0; i <= ci.dim(); ++i)
      pure += two_point_pure(ci, mc, i, 0);
    const Rational lambda(Integer(-factorial_product(ci)));
    const Rational rhs = mc[1] * genus_one_one_point_H(ci) / deg
                       + pure / (Rational(24) * deg)
                       + Rational(primitive_dimension(ci)) * lambda / Rational(24);
    CHECK(genus_one_descendant_H(ci) == rhs);
  }
}
