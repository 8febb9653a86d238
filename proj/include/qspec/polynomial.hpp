#ifndef QSPEC_POLYNOMIAL_HPP
#define QSPEC_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <qspec/exactmath.hpp>

namespace qspec {

  // Dense univariate polynomial with Integer coefficients, lowest degree
  // first. Trailing zeros are trimmed, so the zero polynomial has no
  // coefficients and degree() == -1.
  class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coeffs);
    IntPolynomial(std::initializer_list<Integer> coeffs);

    static IntPolynomial monomial(const Integer& c, std::size_t degree);
    // (x - root)
    static IntPolynomial linear_factor(const Integer& root);

    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Integer coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }
    const std::vector<Integer>& coefficients() const { return coeffs_; }

    Integer evaluate(const Integer& x) const;

    // Synthetic division by (x - root): returns (quotient, remainder).
    std::pair<IntPolynomial, Integer> divide_linear(const Integer& root) const;

    // Largest m with (x - root)^m dividing this (zero polynomial: throws).
    std::size_t root_multiplicity(const Integer& root) const;

    std::string to_string(const std::string& var = "x") const;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const Integer& c, const IntPolynomial& a);

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b)
    {
      return a.coeffs_ == b.coeffs_;
    }

    friend std::ostream& operator<<(std::ostream& os, const IntPolynomial& p)
    {
      return os << p.to_string();
    }

  private:
    void trim();

    std::vector<Integer> coeffs_;
  };

  IntPolynomial pow(const IntPolynomial& p, unsigned long e);


  // Dense square Integer matrix, row-major.
  class IntMatrix {
  public:
    explicit IntMatrix(std::size_t n = 0) : n_(n), a_(n * n) {}

    static IntMatrix identity(std::size_t n);

    std::size_t size() const { return n_; }
    Integer& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    Integer trace() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator*(const Integer& c, IntMatrix a);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b)
    {
      return a.n_ == b.n_ && a.a_ == b.a_;
    }

  private:
    std::size_t n_;
    std::vector<Integer> a_;
  };

  // det(x I - M), monic of degree n, by the Faddeev-LeVerrier recurrence.
  // All divisions in the recurrence are exact over the integers.
  IntPolynomial characteristic_polynomial(const IntMatrix& m);

  // Companion matrix of a monic polynomial p of degree n: the matrix of
  // multiplication by x on Z[x]/(p) in the basis 1, x, ..., x^(n-1), with
  // column j holding the image of x^j.
  IntMatrix companion_matrix(const IntPolynomial& monic);

} // namespace qspec

#endif // QSPEC_POLYNOMIAL_HPP
