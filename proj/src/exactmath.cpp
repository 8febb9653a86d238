#include <qspec/exactmath.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qspec {

  Integer factorial(unsigned long n)
  {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
  }

  Integer binomial(long n, long k)
  {
    if (n < 0)
      throw std::invalid_argument("binomial: n must be non-negative");
    if (k < 0 || k > n)
      return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return out;
  }

  Integer ipow(const Integer& base, unsigned long e)
  {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
  }

  Integer parse_integer(const std::string& text)
  {
    std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
    if (start == text.size()
        || !std::all_of(text.begin() + start, text.end(),
                        [](char c) { return c >= '0' && c <= '9'; }))
      throw std::invalid_argument("not a decimal integer: '" + text + "'");
    return Integer(text, 10);
  }

  std::string to_string(const Integer& z)
  {
    return z.get_str(10);
  }


  Rational::Rational(const Integer& num, const Integer& den)
  {
    if (den == 0)
      throw DivisionByZero("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  Rational& Rational::operator/=(const Rational& o)
  {
    if (o.is_zero())
      throw DivisionByZero("rational division by zero");
    q_ /= o.q_;
    return *this;
  }

  Integer Rational::to_integer() const
  {
    if (!is_integer())
      throw std::domain_error("not an integer: " + to_string());
    return q_.get_num();
  }

  bool Rational::is_normalized() const
  {
    if (q_.get_den() <= 0)
      return false;
    Integer g;
    mpz_gcd(g.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return g == 1;
  }

  std::string Rational::to_string() const
  {
    return q_.get_str(10);
  }

  Rational Rational::parse(const std::string& text)
  {
    auto slash = text.find('/');
    if (slash == std::string::npos)
      return Rational(parse_integer(text));
    return Rational(parse_integer(text.substr(0, slash)),
                    parse_integer(text.substr(slash + 1)));
  }


  TruncatedSeries::TruncatedSeries(std::size_t order)
    : coeffs_(order + 1)
  {}

  TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs))
  {
    if (coeffs_.empty())
      throw std::invalid_argument("series needs at least one coefficient");
  }

  TruncatedSeries::TruncatedSeries(std::initializer_list<Rational> coeffs)
    : TruncatedSeries(std::vector<Rational>(coeffs))
  {}

  TruncatedSeries TruncatedSeries::from_polynomial(std::span<const Rational> coeffs,
                                                   std::size_t order)
  {
    TruncatedSeries out(order);
    for (std::size_t k = 0; k < coeffs.size() && k <= order; ++k)
      out.coeffs_[k] = coeffs[k];
    return out;
  }

  TruncatedSeries TruncatedSeries::constant(const Rational& c, std::size_t order)
  {
    TruncatedSeries out(order);
    out.coeffs_[0] = c;
    return out;
  }

  TruncatedSeries TruncatedSeries::linear(const Rational& c0, const Rational& c1,
                                          std::size_t order)
  {
    TruncatedSeries out(order);
    out.coeffs_[0] = c0;
    if (order >= 1)
      out.coeffs_[1] = c1;
    return out;
  }

  const Rational& TruncatedSeries::coeff(std::size_t k) const
  {
    if (k > order()) {
      std::ostringstream msg;
      msg << "coefficient x^" << k << " requested from a series of order " << order();
      throw OrderExceeded(msg.str());
    }
    return coeffs_[k];
  }

  TruncatedSeries TruncatedSeries::truncated(std::size_t new_order) const
  {
    if (new_order > order())
      throw OrderExceeded("cannot raise the order of a truncated series");
    return TruncatedSeries(std::vector<Rational>(coeffs_.begin(),
                                                 coeffs_.begin() + new_order + 1));
  }

  TruncatedSeries TruncatedSeries::operator-() const
  {
    TruncatedSeries out(*this);
    for (auto& c : out.coeffs_)
      c = -c;
    return out;
  }

  TruncatedSeries& TruncatedSeries::operator*=(const Rational& c)
  {
    for (auto& x : coeffs_)
      x *= c;
    return *this;
  }

  TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b)
  {
    TruncatedSeries out(std::min(a.order(), b.order()));
    for (std::size_t k = 0; k <= out.order(); ++k)
      out.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
    return out;
  }

  TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b)
  {
    TruncatedSeries out(std::min(a.order(), b.order()));
    for (std::size_t k = 0; k <= out.order(); ++k)
      out.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
    return out;
  }

  TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
  {
    TruncatedSeries out(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= out.order(); ++i) {
      if (a.coeffs_[i].is_zero())
        continue;
      for (std::size_t j = 0; i + j <= out.order(); ++j)
        out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
  }

  std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s)
  {
    os << '[';
    for (std::size_t k = 0; k < s.coeffs_.size(); ++k)
      os << (k ? ", " : "") << s.coeffs_[k];
    return os << "] + O(x^" << s.order() + 1 << ')';
  }

  TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b)
  {
    return a * b;
  }

  TruncatedSeries series_inverse(const TruncatedSeries& a)
  {
    const Rational& a0 = a.coeff(0);
    if (a0.is_zero())
      throw ZeroConstantTerm("series inverse needs a nonzero constant term");
    // b_0 = 1/a_0, b_k = -(sum_{j=1}^k a_j b_{k-j}) / a_0
    std::vector<Rational> b(a.order() + 1);
    b[0] = Rational(1) / a0;
    for (std::size_t k = 1; k <= a.order(); ++k) {
      Rational acc;
      for (std::size_t j = 1; j <= k; ++j)
        acc += a.coeff(j) * b[k - j];
      b[k] = -acc / a0;
    }
    return TruncatedSeries(std::move(b));
  }

  TruncatedSeries series_pow(const TruncatedSeries& a, unsigned long e)
  {
    TruncatedSeries out = TruncatedSeries::constant(1, a.order());
    TruncatedSeries base = a;
    while (e > 0) {
      if (e & 1)
        out = out * base;
      e >>= 1;
      if (e > 0)
        base = base * base;
    }
    return out;
  }

  const Rational& coeff(const TruncatedSeries& a, std::size_t k)
  {
    return a.coeff(k);
  }

} // namespace qspec
