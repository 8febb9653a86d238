#include <qspec/spectrum.hpp>

#include <qspec/gw.hpp>

#include <sstream>
#include <stdexcept>

namespace qspec {

  std::optional<Integer> Modulus::exact_integer() const
  {
    if (root == 1)
      return power;
    Integer r;
    if (mpz_root(r.get_mpz_t(), power.get_mpz_t(), root) != 0)
      return r;
    return std::nullopt;
  }

  int compare(const Modulus& a, const Modulus& b)
  {
    Integer lhs = ipow(a.power, b.root);
    Integer rhs = ipow(b.power, a.root);
    return cmp(lhs, rhs) < 0 ? -1 : (cmp(lhs, rhs) > 0 ? 1 : 0);
  }


  Eigenvalue Eigenvalue::integer(Integer value)
  {
    return Eigenvalue(ExactInteger{std::move(value)});
  }

  Eigenvalue Eigenvalue::root_scaled(int rootOrder, Integer radicand, int phase)
  {
    if (rootOrder < 2)
      throw std::invalid_argument("root-scaled eigenvalue needs rootOrder >= 2");
    if (radicand <= 0)
      throw std::invalid_argument("root-scaled eigenvalue needs a positive radicand");
    phase %= rootOrder;
    if (phase < 0)
      phase += rootOrder;
    return Eigenvalue(RootScaled{rootOrder, std::move(radicand), phase});
  }

  Modulus Eigenvalue::modulus() const
  {
    if (is_integer())
      return {abs(as_integer().value), 1};
    const auto& rs = as_root_scaled();
    auto rho = static_cast<unsigned long>(rs.rootOrder);
    return {ipow(Integer(rs.rootOrder), rho) * rs.radicand, rho};
  }

  std::optional<Rational> Eigenvalue::turn() const
  {
    if (is_integer()) {
      int s = sgn(as_integer().value);
      if (s == 0)
        return std::nullopt;
      return s > 0 ? Rational(0) : Rational(1, 2);
    }
    const auto& rs = as_root_scaled();
    return Rational(rs.phase, rs.rootOrder);
  }

  std::string Eigenvalue::to_string() const
  {
    if (is_integer())
      return qspec::to_string(as_integer().value);
    const auto& rs = as_root_scaled();
    std::ostringstream os;
    os << rs.rootOrder << '*' << rs.radicand.get_str() << "^(1/" << rs.rootOrder << ')';
    if (rs.phase != 0) {
      os << "*zeta" << rs.rootOrder;
      if (rs.phase != 1)
        os << '^' << rs.phase;
    }
    return os.str();
  }

  bool same_value(const Eigenvalue& a, const Eigenvalue& b)
  {
    if (compare(a.modulus(), b.modulus()) != 0)
      return false;
    return a.turn() == b.turn();
  }


  Modulus SpectralRadius::modulus() const
  {
    if (is_integer_form())
      return {abs(integer_form()), 1};
    const auto& rp = root_pair();
    auto rho = static_cast<unsigned long>(rp.rho);
    return {ipow(Integer(rp.rho), rho) * rp.radicand, rho};
  }

  bool SpectralRadius::exceeds(const Rational& q) const
  {
    Modulus m = modulus();
    // T^e > (a/b)^e  <=>  T^e b^e > a^e
    return m.power * ipow(q.denominator(), m.root) > ipow(q.numerator(), m.root);
  }

  std::string SpectralRadius::to_string() const
  {
    if (auto n = exact_integer())
      return qspec::to_string(*n);
    const auto& rp = root_pair();
    return std::to_string(rp.rho) + "*" + rp.radicand.get_str() + "^(1/"
         + std::to_string(rp.rho) + ")";
  }


  Integer SpectrumReport::total_multiplicity() const
  {
    Integer total = 0;
    for (const auto& e : ambient)
      total += e.multiplicity;
    if (primitive)
      total += primitive->multiplicity;
    return total;
  }


  IntPolynomial ambient_relation(const CompleteIntersection& ci)
  {
    const int n = ci.dim();
    const int rho = fano_index(ci);
    const Integer bigD = power_product(ci);
    if (rho > 1)
      return IntPolynomial::monomial(1, static_cast<std::size_t>(n + 1))
           - IntPolynomial::monomial(bigD, static_cast<std::size_t>(n + 1 - rho));
    // K = H + F
    const IntPolynomial k({factorial_product(ci), Integer(1)});
    return pow(k, static_cast<unsigned long>(n + 1))
         - bigD * pow(k, static_cast<unsigned long>(n));
  }

  IntMatrix companion_matrix(const CompleteIntersection& ci)
  {
    return Integer(fano_index(ci)) * companion_matrix(ambient_relation(ci));
  }

  IntPolynomial expected_characteristic_polynomial(const CompleteIntersection& ci)
  {
    const int n = ci.dim();
    const int rho = fano_index(ci);
    const Integer bigD = power_product(ci);
    if (rho > 1) {
      const Integer top = ipow(Integer(rho), static_cast<unsigned long>(rho)) * bigD;
      return IntPolynomial::monomial(1, static_cast<std::size_t>(n + 1 - rho))
           * (IntPolynomial::monomial(1, static_cast<std::size_t>(rho))
              - IntPolynomial({top}));
    }
    const Integer bigF = factorial_product(ci);
    return pow(IntPolynomial::linear_factor(-bigF), static_cast<unsigned long>(n))
         * IntPolynomial::linear_factor(bigD - bigF);
  }

  std::vector<SpectrumEntry> ambient_spectrum(const CompleteIntersection& ci)
  {
    const int rho = fano_index(ci);
    const Integer bigD = power_product(ci);
    const IntPolynomial chi = characteristic_polynomial(companion_matrix(ci));

    std::vector<SpectrumEntry> out;
    if (rho > 1) {
      // chi = mu^m * q with q = mu^rho - rho^rho D; the roots of q are
      // rho D^(1/rho) zeta^k, all simple since D > 0.
      const std::size_t m = chi.root_multiplicity(0);
      const IntPolynomial q(std::vector<Integer>(chi.coefficients().begin() + static_cast<long>(m),
                                                 chi.coefficients().end()));
      const IntPolynomial expected_q =
        IntPolynomial::monomial(1, static_cast<std::size_t>(rho))
        - IntPolynomial({ipow(Integer(rho), static_cast<unsigned long>(rho)) * bigD});
      if (q != expected_q)
        throw CharPolyMismatch("characteristic polynomial " + chi.to_string("mu") + " of "
                               + ci.label() + " is not mu^m (mu^rho - rho^rho D)");
      out.push_back({Eigenvalue::integer(0), Integer(static_cast<unsigned long>(m))});
      for (int k = 0; k < rho; ++k)
        out.push_back({Eigenvalue::root_scaled(rho, bigD, k), Integer(1)});
      return out;
    }

    const Integer bigF = factorial_product(ci);
    const Integer minusF = -bigF;
    const std::size_t m = chi.root_multiplicity(minusF);
    IntPolynomial rest = chi;
    for (std::size_t i = 0; i < m; ++i)
      rest = rest.divide_linear(minusF).first;
    if (rest.degree() != 1 || rest.coeff(1) != 1)
      throw CharPolyMismatch("characteristic polynomial " + chi.to_string("mu") + " of "
                             + ci.label() + " does not split as (mu+F)^m (mu-e)");
    out.push_back({Eigenvalue::integer(minusF), Integer(static_cast<unsigned long>(m))});
    out.push_back({Eigenvalue::integer(-rest.coeff(0)), Integer(1)});
    return out;
  }


  namespace {
    struct CaseThreeData {
      int dim;
      Integer degreeProduct;
      Integer bigF;
      Integer primitiveDim;
      std::vector<Rational> chern;
      MirrorCoefficients mirror;
    };

    void require_case_three(const CompleteIntersection& ci)
    {
      if (ci.dim() % 2 != 0 || fano_index(ci) != 1)
        throw NotCaseThree(ci.label() + " is not even-dimensional of index one (N = "
                           + std::to_string(ci.dim()) + ", rho = "
                           + std::to_string(fano_index(ci)) + ")");
    }

    CaseThreeData case_three_data(const CompleteIntersection& ci)
    {
      require_case_three(ci);
      CaseThreeData data{ci.dim(), degree_product(ci), factorial_product(ci),
                         primitive_dimension(ci), chern_coefficients(ci),
                         mirror_coefficients(ci)};
      if (data.primitiveDim == 0)
        throw ZeroPrimitiveDim("primitive dimension is zero for " + ci.label());
      return data;
    }

    Rational trace_via_sum(const CaseThreeData& d)
    {
      const auto n = static_cast<std::size_t>(d.dim);
      Rational acc;
      for (std::size_t p = 0; p <= n; ++p) {
        Rational weight = d.chern[n - p]
                        - Rational(binomial(d.dim + 1, static_cast<long>(p) + 1), d.degreeProduct);
        acc += weight * d.mirror[p];
      }
      return acc;
    }

    Rational trace_via_twopoint(const CompleteIntersection& ci, const CaseThreeData& d)
    {
      const auto n = static_cast<std::size_t>(d.dim);
      const Rational invDeg(Integer(1), d.degreeProduct);

      // genus-one descendant side, collapsed by the divisor relation
      Rational chernTerms;
      for (int p = 0; p <= d.dim - 2; ++p)
        chernTerms -= chern_descendant_combination(d.chern, d.mirror, d.dim, p);

      // <H^{N-1}>_{0,1} * int_X H c_{N-1}
      const Rational linePairing = d.mirror[1] * Rational(d.degreeProduct) * d.chern[n - 1];

      Rational pure;
      for (int i = 0; i <= d.dim; ++i)
        pure += two_point_pure(ci, d.mirror, i, 0);

      return chernTerms + invDeg * linePairing - invDeg * pure;
    }
  }

  Integer lambda_closed_form(const CompleteIntersection& ci)
  {
    require_case_three(ci);
    return -factorial_product(ci);
  }

  Rational lambda_via_sum(const CompleteIntersection& ci)
  {
    auto d = case_three_data(ci);
    return trace_via_sum(d) / Rational(d.primitiveDim);
  }

  TruncatedSeries g_series(const CompleteIntersection& ci)
  {
    const auto order = static_cast<std::size_t>(ci.dim());
    const auto n = static_cast<unsigned long>(ci.dim());
    const auto r = static_cast<unsigned long>(ci.codim());
    const Integer deg = degree_product(ci);
    const auto onePlusX = TruncatedSeries::linear(1, 1, order);

    auto linearProduct = TruncatedSeries::constant(1, order);
    auto mirrorProduct = TruncatedSeries::constant(1, order);
    for (int d : ci.degrees()) {
      linearProduct = linearProduct * TruncatedSeries::linear(1, d, order);
      for (int m = 1; m <= d; ++m)
        mirrorProduct = mirrorProduct * TruncatedSeries::linear(1, Rational(d, m), order);
    }
    const auto ambientPower = series_pow(onePlusX, n + r + 1);

    auto chernBracket = ambientPower * series_inverse(linearProduct)
                      - series_pow(onePlusX, n + 1) * Rational(Integer(1), deg);
    auto mirrorBracket = (mirrorProduct * series_inverse(ambientPower)
                          - TruncatedSeries::constant(1, order))
                       * Rational(Integer(deg * factorial_product(ci)));
    return chernBracket * mirrorBracket;
  }

  TruncatedSeries g_series_simplified(const CompleteIntersection& ci)
  {
    const auto order = static_cast<std::size_t>(ci.dim());
    const auto n = static_cast<unsigned long>(ci.dim());
    const auto r = static_cast<unsigned long>(ci.codim());
    const Integer deg = degree_product(ci);
    const auto onePlusX = TruncatedSeries::linear(1, 1, order);

    auto upper = TruncatedSeries::constant(1, order);   // m = 2..d
    auto lower = TruncatedSeries::constant(1, order);   // m = 1..d-1
    auto linearProduct = TruncatedSeries::constant(1, order);
    for (int d : ci.degrees()) {
      linearProduct = linearProduct * TruncatedSeries::linear(1, d, order);
      for (int m = 2; m <= d; ++m)
        upper = upper * TruncatedSeries::linear(1, Rational(d, m), order);
      for (int m = 1; m <= d - 1; ++m)
        lower = lower * TruncatedSeries::linear(1, Rational(d, m), order);
    }
    const Rational invDeg(Integer(1), deg);
    auto bracket = upper
                 - series_pow(onePlusX, n + r + 1) * series_inverse(linearProduct)
                 - lower * invDeg
                 + series_pow(onePlusX, n + 1) * invDeg;
    return bracket * Rational(Integer(deg * factorial_product(ci)));
  }

  Rational lambda_via_g(const CompleteIntersection& ci)
  {
    auto d = case_three_data(ci);
    return coeff(g_series(ci), static_cast<std::size_t>(ci.dim())) / Rational(d.primitiveDim);
  }

  Rational lambda_via_twopoint(const CompleteIntersection& ci)
  {
    auto d = case_three_data(ci);
    return trace_via_twopoint(ci, d) / Rational(d.primitiveDim);
  }

  PrimitiveTraceRoutes primitive_trace_routes(const CompleteIntersection& ci)
  {
    auto d = case_three_data(ci);
    return {trace_via_sum(d),
            coeff(g_series(ci), static_cast<std::size_t>(ci.dim())),
            trace_via_twopoint(ci, d)};
  }


  SpectrumReport full_spectrum(const CompleteIntersection& ci)
  {
    const VarietyInvariants inv = invariants(ci);
    SpectrumReport report{ci, inv.rho, inv.bigD, inv.bigF, inv.euler, inv.primitiveDim,
                          ambient_spectrum(ci), std::nullopt, SpectralRadius(), std::nullopt, {}};

    if (ci.dim() % 2 == 0 && inv.primitiveDim > 0) {
      report.assumptions.emplace_back(kHuAssumption);
      if (inv.rho > 1) {
        report.primitive = SpectrumEntry{Eigenvalue::integer(0), inv.primitiveDim};
      } else {
        const Integer closed = lambda_closed_form(ci);
        const Rational routes[] = {lambda_via_sum(ci), lambda_via_g(ci), lambda_via_twopoint(ci)};
        for (const auto& value : routes)
          if (value != Rational(closed)) {
            std::ostringstream msg;
            msg << "lambda routes disagree for " << ci.label() << ": closed form " << closed.get_str()
                << ", via sum " << routes[0] << ", via g " << routes[1]
                << ", via two-point " << routes[2];
            throw LambdaMismatch(msg.str());
          }
        report.lambda = closed;
        report.primitive = SpectrumEntry{Eigenvalue::integer(closed), inv.primitiveDim};
      }
    }
    report.radius = spectral_radius(report);
    return report;
  }

  SpectralRadius spectral_radius(const SpectrumReport& report)
  {
    std::optional<Eigenvalue> best;
    auto consider = [&](const SpectrumEntry& e) {
      if (e.multiplicity <= 0)
        return;
      if (!best || compare(best->modulus(), e.value.modulus()) < 0)
        best = e.value;
    };
    for (const auto& e : report.ambient)
      consider(e);
    if (report.primitive)
      consider(*report.primitive);

    if (!best)
      return SpectralRadius();
    if (best->is_integer())
      return SpectralRadius(Integer(abs(best->as_integer().value)));
    const auto& rs = best->as_root_scaled();
    return SpectralRadius(SpectralRadius::RootPair{rs.rootOrder, rs.radicand});
  }

} // namespace qspec
