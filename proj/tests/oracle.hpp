#ifndef QSPEC_TESTS_ORACLE_HPP
#define QSPEC_TESTS_ORACLE_HPP

// Naive reference computations used only by the tests. Nothing here calls
// into the library's series or polynomial code.

#include <algorithm>
#include <numeric>
#include <vector>

#include <gmpxx.h>

namespace oracle {

  inline mpz_class factorial(unsigned n)
  {
    mpz_class f = 1;
    for (unsigned i = 2; i <= n; ++i)
      f *= i;
    return f;
  }

  // Pascal's triangle row n.
  inline std::vector<mpz_class> pascal_row(unsigned n)
  {
    std::vector<mpz_class> row = {1};
    for (unsigned i = 1; i <= n; ++i) {
      std::vector<mpz_class> next(i + 1);
      next[0] = next[i] = 1;
      for (unsigned k = 1; k < i; ++k)
        next[k] = row[k - 1] + row[k];
      row = std::move(next);
    }
    return row;
  }

  inline mpz_class binom(unsigned n, unsigned k)
  {
    return k > n ? mpz_class(0) : pascal_row(n)[k];
  }

  inline std::vector<mpq_class> poly_mul(const std::vector<mpq_class>& a,
                                         const std::vector<mpq_class>& b)
  {
    std::vector<mpq_class> c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        c[i + j] += a[i] * b[j];
    return c;
  }

  // Chern coefficients c_0..c_N of (1+x)^(N+r+1) / prod(1 + d x): binomial
  // coefficients times geometric series, integer arithmetic only.
  inline std::vector<mpz_class> chern(int n, const std::vector<int>& degrees)
  {
    const int r = static_cast<int>(degrees.size());
    std::vector<mpz_class> inv(n + 1, 0);
    inv[0] = 1;
    for (int d : degrees) {
      // multiply by sum_k (-d)^k x^k
      std::vector<mpz_class> next(n + 1, 0);
      for (int i = 0; i <= n; ++i) {
        mpz_class pw = 1;
        for (int k = 0; i + k <= n; ++k) {
          next[i + k] += inv[i] * pw;
          pw *= -d;
        }
      }
      inv = std::move(next);
    }
    std::vector<mpz_class> c(n + 1, 0);
    for (int p = 0; p <= n; ++p)
      for (int j = 0; j <= p; ++j)
        c[p] += binom(static_cast<unsigned>(n + r + 1), static_cast<unsigned>(j)) * inv[p - j];
    return c;
  }

  inline mpz_class euler(int n, const std::vector<int>& degrees)
  {
    mpz_class prod = 1;
    for (int d : degrees)
      prod *= d;
    return prod * chern(n, degrees)[n];
  }

  // I_0..I_N: the numerator product expanded as an exact polynomial, times
  // (1+x)^(-m) = sum_k (-1)^k C(m+k-1, k) x^k.
  inline std::vector<mpq_class> mirror(int n, const std::vector<int>& degrees)
  {
    const unsigned m = static_cast<unsigned>(n + static_cast<int>(degrees.size()) + 1);
    std::vector<mpq_class> num = {1};
    mpz_class scale = 1;
    for (int d : degrees) {
      scale *= d * factorial(static_cast<unsigned>(d));
      for (int j = 1; j <= d; ++j)
        num = poly_mul(num, {mpq_class(1), mpq_class(d, j)});
    }
    std::vector<mpq_class> out(n + 1);
    for (int a = 0; a <= n; ++a) {
      mpq_class acc = 0;
      for (int j = 0; j <= a && j < static_cast<int>(num.size()); ++j) {
        unsigned k = static_cast<unsigned>(a - j);
        mpz_class neg = binom(m + k - 1, k);
        acc += num[j] * ((k % 2) ? mpq_class(-neg) : mpq_class(neg));
      }
      if (a == 0)
        acc -= 1;
      out[a] = acc * scale;
      out[a].canonicalize();
    }
    return out;
  }

  // Fraction-free Gaussian elimination (Bareiss).
  inline mpz_class det(std::vector<std::vector<mpz_class>> a)
  {
    const std::size_t n = a.size();
    if (n == 0)
      return 1;
    mpz_class sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (a[k][k] == 0) {
        std::size_t p = k + 1;
        while (p < n && a[p][k] == 0)
          ++p;
        if (p == n)
          return 0;
        std::swap(a[k], a[p]);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i)
        for (std::size_t j = k + 1; j < n; ++j) {
          mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
          mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
          a[i][j] = t;
        }
      prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
  }

  // Every non-decreasing tuple with entries in [2, N+r] and sum <= N+r,
  // found by scanning the full cube [2, N+r]^r.
  inline std::size_t count_fano(int max_dim, int max_r)
  {
    std::size_t count = 0;
    for (int n = 3; n <= max_dim; ++n)
      for (int r = 1; r <= max_r; ++r) {
        if (2 * r > n + r)
          continue;
        const int hi = n + r;
        std::vector<int> d(static_cast<std::size_t>(r), 2);
        for (;;) {
          bool sorted = std::is_sorted(d.begin(), d.end());
          int sum = std::accumulate(d.begin(), d.end(), 0);
          if (sorted && sum <= n + r)
            ++count;
          std::size_t i = 0;
          while (i < d.size() && d[i] == hi)
            d[i++] = 2;
          if (i == d.size())
            break;
          ++d[i];
        }
      }
    return count;
  }

} // namespace oracle

#endif // QSPEC_TESTS_ORACLE_HPP
