#include <qspec/polynomial.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qspec {

  IntPolynomial::IntPolynomial(std::vector<Integer> coeffs)
    : coeffs_(std::move(coeffs))
  {
    trim();
  }

  IntPolynomial::IntPolynomial(std::initializer_list<Integer> coeffs)
    : IntPolynomial(std::vector<Integer>(coeffs))
  {}

  IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t degree)
  {
    std::vector<Integer> v(degree + 1);
    v[degree] = c;
    return IntPolynomial(std::move(v));
  }

  IntPolynomial IntPolynomial::linear_factor(const Integer& root)
  {
    return IntPolynomial({Integer(-root), Integer(1)});
  }

  void IntPolynomial::trim()
  {
    while (!coeffs_.empty() && coeffs_.back() == 0)
      coeffs_.pop_back();
  }

  Integer IntPolynomial::evaluate(const Integer& x) const
  {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * x + *it;
    return acc;
  }

  std::pair<IntPolynomial, Integer> IntPolynomial::divide_linear(const Integer& root) const
  {
    if (coeffs_.empty())
      return {IntPolynomial(), Integer(0)};
    std::vector<Integer> q(coeffs_.size() - 1);
    Integer carry = 0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      carry = carry * root + coeffs_[k];
      if (k > 0)
        q[k - 1] = carry;
    }
    return {IntPolynomial(std::move(q)), carry};
  }

  std::size_t IntPolynomial::root_multiplicity(const Integer& root) const
  {
    if (is_zero())
      throw std::domain_error("root multiplicity of the zero polynomial");
    std::size_t m = 0;
    IntPolynomial cur = *this;
    for (;;) {
      auto [q, rem] = cur.divide_linear(root);
      if (rem != 0)
        return m;
      ++m;
      cur = std::move(q);
    }
  }

  std::string IntPolynomial::to_string(const std::string& var) const
  {
    if (coeffs_.empty())
      return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      const Integer& c = coeffs_[k];
      if (c == 0)
        continue;
      Integer mag = abs(c);
      if (first)
        os << (c < 0 ? "-" : "");
      else
        os << (c < 0 ? " - " : " + ");
      first = false;
      if (k == 0 || mag != 1)
        os << mag.get_str();
      if (k > 0) {
        if (mag != 1)
          os << '*';
        os << var;
        if (k > 1)
          os << '^' << k;
      }
    }
    return os.str();
  }

  IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b)
  {
    std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < v.size(); ++k)
      v[k] = a.coeff(k) + b.coeff(k);
    return IntPolynomial(std::move(v));
  }

  IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b)
  {
    std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < v.size(); ++k)
      v[k] = a.coeff(k) - b.coeff(k);
    return IntPolynomial(std::move(v));
  }

  IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
  {
    if (a.is_zero() || b.is_zero())
      return IntPolynomial();
    std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(v));
  }

  IntPolynomial operator*(const Integer& c, const IntPolynomial& a)
  {
    std::vector<Integer> v = a.coeffs_;
    for (auto& x : v)
      x *= c;
    return IntPolynomial(std::move(v));
  }

  IntPolynomial pow(const IntPolynomial& p, unsigned long e)
  {
    IntPolynomial out({Integer(1)});
    for (unsigned long i = 0; i < e; ++i)
      out = out * p;
    return out;
  }


  IntMatrix IntMatrix::identity(std::size_t n)
  {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = 1;
    return m;
  }

  Integer IntMatrix::trace() const
  {
    Integer t = 0;
    for (std::size_t i = 0; i < n_; ++i)
      t += (*this)(i, i);
    return t;
  }

  IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
  {
    if (a.n_ != b.n_)
      throw std::invalid_argument("matrix size mismatch");
    IntMatrix c(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k) {
        if (a(i, k) == 0)
          continue;
        for (std::size_t j = 0; j < a.n_; ++j)
          c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  IntMatrix operator*(const Integer& c, IntMatrix a)
  {
    for (auto& x : a.a_)
      x *= c;
    return a;
  }

  IntPolynomial characteristic_polynomial(const IntMatrix& m)
  {
    // M_0 = 0, c_n = 1;  M_k = M M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(M M_k)/k
    const std::size_t n = m.size();
    std::vector<Integer> c(n + 1);
    c[n] = 1;
    IntMatrix mk(n);
    for (std::size_t k = 1; k <= n; ++k) {
      IntMatrix next = m * mk;
      for (std::size_t i = 0; i < n; ++i)
        next(i, i) += c[n - k + 1];
      mk = std::move(next);
      Integer t = (m * mk).trace();
      Integer q;
      mpz_divexact_ui(q.get_mpz_t(), t.get_mpz_t(), k);
      c[n - k] = -q;
    }
    return IntPolynomial(std::move(c));
  }

  IntMatrix companion_matrix(const IntPolynomial& monic)
  {
    if (monic.degree() < 1 || monic.coeff(monic.degree()) != 1)
      throw std::invalid_argument("companion matrix needs a monic polynomial of degree >= 1");
    const auto n = static_cast<std::size_t>(monic.degree());
    IntMatrix c(n);
    for (std::size_t j = 0; j + 1 < n; ++j)
      c(j + 1, j) = 1;
    for (std::size_t i = 0; i < n; ++i)
      c(i, n - 1) = -monic.coeff(i);
    return c;
  }

} // namespace qspec
