#include <qspec/gw.hpp>

#include <string>

namespace qspec {

  namespace {
    void check_range(const char* what, int value, int lo, int hi)
    {
      if (value < lo || value > hi)
        throw IndexRange(std::string(what) + " = " + std::to_string(value) + " outside ["
                         + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
  }

  MirrorCoefficients mirror_coefficients(const CompleteIntersection& ci)
  {
    const auto order = static_cast<std::size_t>(ci.dim());
    auto numer = TruncatedSeries::constant(1, order);
    for (int d : ci.degrees())
      for (int m = 1; m <= d; ++m)
        numer = numer * TruncatedSeries::linear(1, Rational(d, m), order);
    auto denom = series_pow(TruncatedSeries::linear(1, 1, order),
                            static_cast<unsigned long>(ci.dim() + ci.codim() + 1));
    auto bracket = numer * series_inverse(denom) - TruncatedSeries::constant(1, order);
    auto scaled = bracket * Rational(Integer(degree_product(ci) * factorial_product(ci)));

    MirrorCoefficients mc;
    mc.values.assign(scaled.coefficients().begin(), scaled.coefficients().end());
    if (!mc.values[0].is_zero())
      throw MirrorNormalization("I_0 = " + mc.values[0].to_string() + " for " + ci.label());
    return mc;
  }

  Rational one_point_descendant(const CompleteIntersection& ci, int a)
  {
    check_range("a", a, 0, ci.dim());
    return mirror_coefficients(ci)[static_cast<std::size_t>(a)];
  }

  Rational two_point_pure(const CompleteIntersection& ci, const MirrorCoefficients& mc,
                          int i, int a)
  {
    check_range("i", i, 0, ci.dim());
    check_range("a", a, 0, ci.dim() - i);
    Rational acc;
    for (int p = 0; p <= i; ++p)
      acc += Rational(binomial(i, p)) * mc[static_cast<std::size_t>(a + p)];
    return acc;
  }

  Rational two_point_pure(const CompleteIntersection& ci, int i, int a)
  {
    return two_point_pure(ci, mirror_coefficients(ci), i, a);
  }

  Rational chern_descendant_combination(const std::vector<Rational>& chern,
                                        const MirrorCoefficients& mc, int dim, int p)
  {
    check_range("p", p, 0, dim - 2);
    return -(chern.at(static_cast<std::size_t>(dim - 2 - p))
             * mc[static_cast<std::size_t>(p + 2)]);
  }

  Rational chern_descendant_combination(const CompleteIntersection& ci, int p)
  {
    return chern_descendant_combination(chern_coefficients(ci), mirror_coefficients(ci),
                                        ci.dim(), p);
  }

  Rational genus_one_one_point_H(const CompleteIntersection& ci)
  {
    auto c = chern_coefficients(ci);
    return Rational(-1, 24) * Rational(degree_product(ci))
         * c.at(static_cast<std::size_t>(ci.dim() - 1));
  }

  Rational genus_one_descendant_H(const CompleteIntersection& ci)
  {
    auto c = chern_coefficients(ci);
    auto mc = mirror_coefficients(ci);
    Rational sum;
    for (int p = 0; p <= ci.dim() - 2; ++p)
      sum += chern_descendant_combination(c, mc, ci.dim(), p);
    return Rational(-1, 24) * sum;
  }

} // namespace qspec
