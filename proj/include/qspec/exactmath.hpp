#ifndef QSPEC_EXACTMATH_HPP
#define QSPEC_EXACTMATH_HPP

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include <qspec/errors.hpp>

namespace qspec {

  using Integer = mpz_class;

  Integer factorial(unsigned long n);

  // C(n,k) for n >= 0; zero outside 0 <= k <= n.
  Integer binomial(long n, long k);

  // Integer power with a machine exponent.
  Integer ipow(const Integer& base, unsigned long e);

  // Parses a decimal integer (optional leading '-'); throws std::invalid_argument.
  Integer parse_integer(const std::string& text);

  std::string to_string(const Integer& z);


  /////////////////////
  // Exact rationals //
  /////////////////////

  // Arbitrary precision rational, always in lowest terms with a positive
  // denominator. Zero is 0/1.
  class Rational {
  public:
    Rational() = default;
    Rational(long v) : q_(v) {}
    Rational(const Integer& v) : q_(v) {}
    Rational(const Integer& num, const Integer& den);

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    // Throws std::domain_error when the value is not an integer.
    Integer to_integer() const;

    // gcd(num, den) == 1 and den > 0.
    bool is_normalized() const;

    // "p" or "p/q".
    std::string to_string() const;
    static Rational parse(const std::string& text);

    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r)
    {
      return os << r.to_string();
    }

  private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}

    mpq_class q_;
  };


  ///////////////////////////////
  // Truncated power series    //
  ///////////////////////////////

  // Dense power series in x known modulo x^(order+1). Binary operations
  // produce a result of order min(order(a), order(b)); reading a coefficient
  // past the order throws OrderExceeded.
  class TruncatedSeries {
  public:
    // The zero series of the given order.
    explicit TruncatedSeries(std::size_t order);

    // Order is coeffs.size()-1; coeffs must be non-empty.
    explicit TruncatedSeries(std::vector<Rational> coeffs);
    TruncatedSeries(std::initializer_list<Rational> coeffs);

    // The exact polynomial sum_k coeffs[k] x^k seen modulo x^(order+1).
    static TruncatedSeries from_polynomial(std::span<const Rational> coeffs,
                                           std::size_t order);
    static TruncatedSeries constant(const Rational& c, std::size_t order);
    // c0 + c1 x
    static TruncatedSeries linear(const Rational& c0, const Rational& c1,
                                  std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const Rational& coeff(std::size_t k) const;
    std::span<const Rational> coefficients() const { return coeffs_; }

    // Drops terms above new_order; new_order must not exceed order().
    TruncatedSeries truncated(std::size_t new_order) const;

    TruncatedSeries operator-() const;
    TruncatedSeries& operator*=(const Rational& c);

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }
    friend TruncatedSeries operator*(const Rational& c, TruncatedSeries a) { return a *= c; }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b)
    {
      return a.coeffs_ == b.coeffs_;
    }

    friend std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s);

  private:
    std::vector<Rational> coeffs_;
  };

  TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
  TruncatedSeries series_inverse(const TruncatedSeries& a);
  TruncatedSeries series_pow(const TruncatedSeries& a, unsigned long e);
  const Rational& coeff(const TruncatedSeries& a, std::size_t k);

} // namespace qspec

#endif // QSPEC_EXACTMATH_HPP
