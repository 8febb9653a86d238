#include <doctest.h>

#include <qspec/exactmath.hpp>

#include "oracle.hpp"

#include <random>

using namespace qspec;

namespace {

  std::vector<Rational> ints(std::initializer_list<long> v)
  {
    return std::vector<Rational>(v.begin(), v.end());
  }

  TruncatedSeries random_series(std::mt19937_64& rng, std::size_t order, bool unitConstant)
  {
    std::uniform_int_distribution<long> num(-30, 30), den(1, 9);
    std::vector<Rational> c(order + 1);
    for (auto& x : c)
      x = Rational(Integer(num(rng)), Integer(den(rng)));
    if (unitConstant && c[0].is_zero())
      c[0] = Rational(1);
    return TruncatedSeries(std::move(c));
  }

} // namespace

TEST_CASE("factorial")
{
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == Integer("2432902008176640000"));
  for (unsigned n = 0; n <= 40; ++n)
    CHECK(factorial(n) == oracle::factorial(n));
}

TEST_CASE("binomial")
{
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(7, -1) == 0);
  CHECK(binomial(7, 8) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);

  SUBCASE("hockey stick for N=6, p=2")
  {
    Integer sum = 0;
    for (long i = 2; i <= 6; ++i)
      sum += binomial(i, 2);
    CHECK(sum == 35);
    CHECK(binomial(7, 3) == 35);
  }

  SUBCASE("Pascal recurrence up to 40")
  {
    for (long n = 1; n <= 40; ++n)
      for (long k = 1; k <= n; ++k)
        CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
  }

  SUBCASE("matches Pascal table oracle")
  {
    for (unsigned n = 0; n <= 30; ++n) {
      auto row = oracle::pascal_row(n);
      for (unsigned k = 0; k <= n; ++k)
        CHECK(binomial(n, k) == row[k]);
    }
  }
}

TEST_CASE("rational normal form")
{
  Rational a(Integer(6), Integer(-4));
  CHECK(a.numerator() == -3);
  CHECK(a.denominator() == 2);
  CHECK(a.is_normalized());
  CHECK(Rational(Integer(0), Integer(-7)) == Rational(0));
  CHECK(Rational(Integer(0), Integer(-7)).denominator() == 1);
  CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), DivisionByZero);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
  CHECK(Rational::parse("-10/4") == Rational(Integer(-5), Integer(2)));
  CHECK(Rational::parse("17").to_string() == "17");
  CHECK_THROWS_AS(Rational::parse("1/x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(Integer(1), Integer(2)).to_integer(), std::domain_error);

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(-1000, 1000);
  for (int i = 0; i < 200; ++i) {
    long n1 = dist(rng), d1 = dist(rng), n2 = dist(rng), d2 = dist(rng);
    if (d1 == 0 || d2 == 0)
      continue;
    Rational x{Integer(n1), Integer(d1)}, y{Integer(n2), Integer(d2)};
    for (const Rational& z : {x + y, x - y, x * y, -x})
      CHECK(z.is_normalized());
    if (!y.is_zero())
      CHECK((x / y).is_normalized());
  }
}

TEST_CASE("series_mul")
{
  CHECK(TruncatedSeries(ints({1, 1, 0})) * TruncatedSeries(ints({1, -1, 0}))
        == TruncatedSeries(ints({1, 0, -1})));

  auto onePlusX = TruncatedSeries::linear(1, 1, 5);
  CHECK(series_pow(onePlusX, 2) * series_pow(onePlusX, 3) == series_pow(onePlusX, 5));

  CHECK(series_mul(TruncatedSeries(ints({1, 2, 3})), TruncatedSeries(ints({4, 5, 0})))
        == TruncatedSeries(ints({4, 13, 22})));

  SUBCASE("order is the minimum of the operand orders")
  {
    auto a = TruncatedSeries::linear(1, 1, 6);
    auto b = TruncatedSeries::linear(2, 1, 3);
    CHECK((a * b).order() == 3);
    CHECK((a + b).order() == 3);
    CHECK((a - b).order() == 3);
  }
}

TEST_CASE("series_inverse")
{
  CHECK(series_inverse(TruncatedSeries::linear(1, 1, 3)) == TruncatedSeries(ints({1, -1, 1, -1})));
  CHECK(series_inverse(TruncatedSeries::linear(1, 5, 4))
        == TruncatedSeries(ints({1, -5, 25, -125, 625})));
  // 1 + 7x + 16x^2 + 12x^3 = (1+2x)^2 (1+3x)
  CHECK(series_inverse(TruncatedSeries(ints({1, 7, 16, 12, 0})))
        == TruncatedSeries(ints({1, -7, 33, -131, 473})));
  CHECK_THROWS_AS(series_inverse(TruncatedSeries(ints({0, 1, 2}))), ZeroConstantTerm);

  // non-unit constant term
  auto a = TruncatedSeries(ints({2, 1, 0, 0}));
  CHECK(a * series_inverse(a) == TruncatedSeries::constant(1, 3));
}

TEST_CASE("series_pow")
{
  CHECK(series_pow(TruncatedSeries::linear(1, 1, 4), 0) == TruncatedSeries::constant(1, 4));
  CHECK(series_pow(TruncatedSeries::linear(1, 1, 6), 6)
        == TruncatedSeries(ints({1, 6, 15, 20, 15, 6, 1})));
  CHECK(series_pow(TruncatedSeries::linear(1, 2, 3), 3) == TruncatedSeries(ints({1, 6, 12, 8})));
}

TEST_CASE("coeff")
{
  CHECK(coeff(TruncatedSeries(ints({1, 3})), 1) == Rational(3));
  auto s = series_pow(TruncatedSeries::linear(1, 1, 2), 4)
         * series_inverse(TruncatedSeries::linear(1, 2, 2));
  CHECK(coeff(s, 2) == Rational(2));
  CHECK_THROWS_AS(coeff(s, 3), OrderExceeded);
  CHECK_THROWS_AS(s.truncated(5), OrderExceeded);
  CHECK(s.truncated(1).order() == 1);
}

TEST_CASE("from_polynomial pads and truncates")
{
  auto c = ints({1, 2, 3, 4});
  auto s = TruncatedSeries::from_polynomial(c, 2);
  CHECK(s == TruncatedSeries(ints({1, 2, 3})));
  auto t = TruncatedSeries::from_polynomial(c, 5);
  CHECK(t == TruncatedSeries(ints({1, 2, 3, 4, 0, 0})));
  CHECK_THROWS_AS(TruncatedSeries(std::vector<Rational>{}), std::invalid_argument);
}

TEST_CASE("series properties on random inputs")
{
  std::mt19937_64 rng(20261017);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t order = static_cast<std::size_t>(trial % 8);
    auto a = random_series(rng, order, false);
    auto b = random_series(rng, order, false);
    auto c = random_series(rng, order, false);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    for (std::size_t k = 0; k <= order; ++k)
      CHECK(coeff(a + b, k) == coeff(a, k) + coeff(b, k));

    auto u = random_series(rng, order, true);
    CHECK(u * series_inverse(u) == TruncatedSeries::constant(1, order));
    CHECK(series_pow(u, 3) == u * u * u);
  }
}
