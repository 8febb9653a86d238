#ifndef QSPEC_VARIETY_HPP
#define QSPEC_VARIETY_HPP

#include <functional>
#include <string>
#include <vector>

#include <qspec/errors.hpp>
#include <qspec/exactmath.hpp>

namespace qspec {

  class InvalidInstance : public Error {
  public:
    enum class Reason {
      DimensionTooSmall,  // N < 2
      DelPezzo,           // N == 2, outside the supported range
      NoDegrees,          // r == 0
      DegreeTooSmall,     // some d_i < 2
      NotFano             // rho < 1
    };

    InvalidInstance(Reason reason, const std::string& what)
      : Error(what), reason_(reason) {}

    Reason reason() const { return reason_; }

  private:
    Reason reason_;
  };

  // A smooth complete intersection of multidegree (d_1,...,d_r) and
  // dimension N in P^(N+r). Degrees are kept sorted ascending, so two
  // instances compare equal iff their degree multisets agree.
  //
  // Construction enforces N >= 3, r >= 1, d_i >= 2 and the Fano condition
  // rho = N + r + 1 - sum d_i >= 1 (rho <= N then follows from d_i >= 2).
  class CompleteIntersection {
  public:
    CompleteIntersection(int dim, std::vector<int> degrees);

    int dim() const { return dim_; }
    int codim() const { return static_cast<int>(degrees_.size()); }
    const std::vector<int>& degrees() const { return degrees_; }

    // "X_4(2,2,3)"
    std::string label() const;

    friend bool operator==(const CompleteIntersection&, const CompleteIntersection&) = default;
    friend auto operator<=>(const CompleteIntersection& a, const CompleteIntersection& b)
    {
      if (auto c = a.dim_ <=> b.dim_; c != 0)
        return c;
      if (auto c = a.codim() <=> b.codim(); c != 0)
        return c;
      return a.degrees_ <=> b.degrees_;
    }

  private:
    int dim_;
    std::vector<int> degrees_;
  };

  struct VarietyInvariants {
    int rho = 0;
    Integer bigD;                       // prod d_i^d_i
    Integer bigF;                       // prod d_i!
    Integer degreeProduct;              // prod d_i = int_X H^N
    std::vector<Rational> chernCoeffs;  // c_0 .. c_N
    Integer euler;
    Integer primitiveDim;               // even-degree primitive dimension
  };

  int fano_index(const CompleteIntersection& ci);

  Integer degree_product(const CompleteIntersection& ci);
  // D = prod d_i^d_i
  Integer power_product(const CompleteIntersection& ci);
  // F = prod d_i!
  Integer factorial_product(const CompleteIntersection& ci);

  // (c_0, ..., c_N) with sum c_p x^p = (1+x)^(N+r+1) / prod (1 + d_i x) mod x^(N+1).
  std::vector<Rational> chern_coefficients(const CompleteIntersection& ci);

  // chi_top = (prod d_i) c_N
  Integer euler_characteristic(const CompleteIntersection& ci);

  // N even: chi - (N+1). N odd: 0.
  Integer primitive_dimension(const CompleteIntersection& ci);

  VarietyInvariants invariants(const CompleteIntersection& ci);

  // Every Fano complete intersection with 3 <= N <= max_dim and
  // 1 <= r <= max_r, ordered lexicographically by (N, r, degrees).
  std::vector<CompleteIntersection> enumerate_fano_cis(int max_dim, int max_r);

  // Same enumeration, delivered one instance at a time.
  void for_each_fano_ci(int max_dim, int max_r,
                        const std::function<void(const CompleteIntersection&)>& visit);

} // namespace qspec

#endif // QSPEC_VARIETY_HPP
