#ifndef QSPEC_SPECTRUM_HPP
#define QSPEC_SPECTRUM_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <qspec/exactmath.hpp>
#include <qspec/polynomial.hpp>
#include <qspec/variety.hpp>

namespace qspec {

  // The non-negative real number power^(1/root). Two moduli are compared by
  // raising both sides to the common power, so comparisons are exact.
  struct Modulus {
    Integer power;
    unsigned long root = 1;

    // Reduces to root 1 when power is a perfect root-th power.
    std::optional<Integer> exact_integer() const;
  };

  int compare(const Modulus& a, const Modulus& b);
  inline bool operator==(const Modulus& a, const Modulus& b) { return compare(a, b) == 0; }
  inline bool operator<(const Modulus& a, const Modulus& b) { return compare(a, b) < 0; }


  // An eigenvalue of (c_1 *_0), carried symbolically.
  //   ExactInteger:  the integer value
  //   RootScaled:    rootOrder * radicand^(1/rootOrder) * exp(2 pi i phase / rootOrder)
  class Eigenvalue {
  public:
    struct ExactInteger {
      Integer value;
      bool operator==(const ExactInteger&) const = default;
    };
    struct RootScaled {
      int rootOrder;
      Integer radicand;
      int phase;
      bool operator==(const RootScaled&) const = default;
    };

    static Eigenvalue integer(Integer value);
    // Requires rootOrder >= 2 and radicand > 0; phase is reduced mod rootOrder.
    static Eigenvalue root_scaled(int rootOrder, Integer radicand, int phase);

    bool is_integer() const { return std::holds_alternative<ExactInteger>(v_); }
    const ExactInteger& as_integer() const { return std::get<ExactInteger>(v_); }
    const RootScaled& as_root_scaled() const { return std::get<RootScaled>(v_); }

    Modulus modulus() const;

    // Argument divided by 2 pi, in [0, 1). Nullopt for the eigenvalue 0.
    std::optional<Rational> turn() const;

    // "408", "-24", "3*4^(1/3)*zeta3^2"
    std::string to_string() const;

    // Structural equality of the representation.
    bool operator==(const Eigenvalue&) const = default;

  private:
    explicit Eigenvalue(std::variant<ExactInteger, RootScaled> v) : v_(std::move(v)) {}

    std::variant<ExactInteger, RootScaled> v_;
  };

  // Equality as complex numbers (e.g. 9 == 3*27^(1/3)).
  bool same_value(const Eigenvalue& a, const Eigenvalue& b);


  struct SpectrumEntry {
    Eigenvalue value;
    Integer multiplicity;

    bool operator==(const SpectrumEntry&) const = default;
  };

  // T(X), either an integer or rho * D^(1/rho).
  class SpectralRadius {
  public:
    struct RootPair {
      int rho;
      Integer radicand;
      bool operator==(const RootPair&) const = default;
    };

    SpectralRadius() : form_(Integer(0)) {}
    explicit SpectralRadius(Integer value) : form_(std::move(value)) {}
    explicit SpectralRadius(RootPair pair) : form_(std::move(pair)) {}

    bool is_integer_form() const { return std::holds_alternative<Integer>(form_); }
    const Integer& integer_form() const { return std::get<Integer>(form_); }
    const RootPair& root_pair() const { return std::get<RootPair>(form_); }

    // (T^e, e) with e = 1 for the integer form and e = rho otherwise.
    Modulus modulus() const;
    // The integer value of T when T is an integer (perfect-power check).
    std::optional<Integer> exact_integer() const { return modulus().exact_integer(); }

    // T > q for rational q > 0, decided as rho^rho D vs q^rho.
    bool exceeds(const Rational& q) const;

    // "408", "9", "3*4^(1/3)"
    std::string to_string() const;

    bool operator==(const SpectralRadius&) const = default;

  private:
    std::variant<Integer, RootPair> form_;
  };


  inline constexpr const char* kHuAssumption =
    "primitive block of (H*_0) assumed scalar (off-diagonal vanishing and equal diagonal "
    "entries of <H,xi_i,xi_j>_{0,1} are not verified)";

  struct SpectrumReport {
    CompleteIntersection instance;
    int rho = 0;
    Integer bigD;
    Integer bigF;
    Integer euler;
    Integer primitiveDim;
    std::vector<SpectrumEntry> ambient;
    std::optional<SpectrumEntry> primitive;
    SpectralRadius radius;
    std::optional<Integer> lambda;
    std::vector<std::string> assumptions;

    Integer total_multiplicity() const;
  };


  // Monic relation satisfied by H in the ambient quantum ring:
  //   rho > 1:  H^(N+1) - D H^(N+1-rho)
  //   rho = 1:  (H+F)^(N+1) - D (H+F)^N, expanded in powers of H
  IntPolynomial ambient_relation(const CompleteIntersection& ci);

  // Matrix of c_1 *_0 = rho H *_0 on the basis H^0..H^N of the ambient part.
  IntMatrix companion_matrix(const CompleteIntersection& ci);

  // mu^(N+1-rho) (mu^rho - rho^rho D)  or  (mu+F)^N (mu-(D-F)), built as a product.
  IntPolynomial expected_characteristic_polynomial(const CompleteIntersection& ci);

  // Eigenvalues and multiplicities of c_1 *_0 on the ambient part, read off by
  // factoring the characteristic polynomial of companion_matrix(). Throws
  // CharPolyMismatch if the polynomial does not have the predicted shape.
  std::vector<SpectrumEntry> ambient_spectrum(const CompleteIntersection& ci);

  // Primitive eigenvalue lambda of H *_0 for N even, rho = 1. Each route throws
  // NotCaseThree outside that case.
  Integer lambda_closed_form(const CompleteIntersection& ci);
  Rational lambda_via_sum(const CompleteIntersection& ci);
  Rational lambda_via_g(const CompleteIntersection& ci);
  Rational lambda_via_twopoint(const CompleteIntersection& ci);

  // g(x) expanded to order N from its defining two-bracket product.
  TruncatedSeries g_series(const CompleteIntersection& ci);
  // The same g(x) from the simplified four-term closed form.
  TruncatedSeries g_series_simplified(const CompleteIntersection& ci);

  // The three route values N'lambda before division, for diagnostics.
  struct PrimitiveTraceRoutes {
    Rational viaSum;
    Rational viaG;
    Rational viaTwoPoint;
  };
  PrimitiveTraceRoutes primitive_trace_routes(const CompleteIntersection& ci);

  // Throws LambdaMismatch if the lambda routes disagree with each other or with -F.
  SpectrumReport full_spectrum(const CompleteIntersection& ci);

  SpectralRadius spectral_radius(const SpectrumReport& report);

} // namespace qspec

#endif // QSPEC_SPECTRUM_HPP
