#include <qspec/variety.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qspec {

  CompleteIntersection::CompleteIntersection(int dim, std::vector<int> degrees)
    : dim_(dim), degrees_(std::move(degrees))
  {
    using R = InvalidInstance::Reason;
    if (dim_ == 2)
      throw InvalidInstance(R::DelPezzo, "del Pezzo surfaces (N = 2) are not supported: need N >= 3");
    if (dim_ < 3)
      throw InvalidInstance(R::DimensionTooSmall,
                            "dimension too small: N = " + std::to_string(dim_) + ", need N >= 3");
    if (degrees_.empty())
      throw InvalidInstance(R::NoDegrees, "no degrees given: need r >= 1");
    for (int d : degrees_)
      if (d < 2)
        throw InvalidInstance(R::DegreeTooSmall,
                              "degree too small: d = " + std::to_string(d) + ", need every d >= 2");
    std::sort(degrees_.begin(), degrees_.end());
    long rho = static_cast<long>(dim_) + codim() + 1
             - std::accumulate(degrees_.begin(), degrees_.end(), 0L);
    if (rho < 1)
      throw InvalidInstance(R::NotFano, "not Fano: rho = " + std::to_string(rho));
  }

  std::string CompleteIntersection::label() const
  {
    std::ostringstream os;
    os << "X_" << dim_ << '(';
    for (std::size_t i = 0; i < degrees_.size(); ++i)
      os << (i ? "," : "") << degrees_[i];
    os << ')';
    return os.str();
  }

  int fano_index(const CompleteIntersection& ci)
  {
    const auto& d = ci.degrees();
    return ci.dim() + ci.codim() + 1 - std::accumulate(d.begin(), d.end(), 0);
  }

  Integer degree_product(const CompleteIntersection& ci)
  {
    Integer p = 1;
    for (int d : ci.degrees())
      p *= d;
    return p;
  }

  Integer power_product(const CompleteIntersection& ci)
  {
    Integer p = 1;
    for (int d : ci.degrees())
      p *= ipow(Integer(d), static_cast<unsigned long>(d));
    return p;
  }

  Integer factorial_product(const CompleteIntersection& ci)
  {
    Integer p = 1;
    for (int d : ci.degrees())
      p *= factorial(static_cast<unsigned long>(d));
    return p;
  }

  std::vector<Rational> chern_coefficients(const CompleteIntersection& ci)
  {
    const auto order = static_cast<std::size_t>(ci.dim());
    auto numer = series_pow(TruncatedSeries::linear(1, 1, order),
                            static_cast<unsigned long>(ci.dim() + ci.codim() + 1));
    auto denom = TruncatedSeries::constant(1, order);
    for (int d : ci.degrees())
      denom = denom * TruncatedSeries::linear(1, d, order);
    auto c = numer * series_inverse(denom);
    std::vector<Rational> out(c.coefficients().begin(), c.coefficients().end());
    for (const auto& cp : out)
      if (!cp.is_integer())
        throw NonIntegerEuler("non-integral Chern coefficient " + cp.to_string()
                              + " for " + ci.label());
    return out;
  }

  namespace {
    Integer euler_from(const CompleteIntersection& ci, const std::vector<Rational>& c)
    {
      Rational chi = Rational(degree_product(ci)) * c.at(static_cast<std::size_t>(ci.dim()));
      if (!chi.is_integer())
        throw NonIntegerEuler("Euler characteristic " + chi.to_string() + " for " + ci.label());
      return chi.to_integer();
    }

    Integer primitive_from(const CompleteIntersection& ci, const Integer& euler)
    {
      if (ci.dim() % 2 != 0)
        return 0;
      Integer np = euler - (ci.dim() + 1);
      if (np < 0)
        throw NegativePrimitiveDim("primitive dimension " + to_string(np) + " for " + ci.label());
      return np;
    }
  }

  Integer euler_characteristic(const CompleteIntersection& ci)
  {
    return euler_from(ci, chern_coefficients(ci));
  }

  Integer primitive_dimension(const CompleteIntersection& ci)
  {
    return primitive_from(ci, euler_characteristic(ci));
  }

  VarietyInvariants invariants(const CompleteIntersection& ci)
  {
    VarietyInvariants inv;
    inv.rho = fano_index(ci);
    inv.bigD = power_product(ci);
    inv.bigF = factorial_product(ci);
    inv.degreeProduct = degree_product(ci);
    inv.chernCoeffs = chern_coefficients(ci);
    inv.euler = euler_from(ci, inv.chernCoeffs);
    inv.primitiveDim = primitive_from(ci, inv.euler);
    return inv;
  }

  namespace {
    // Non-decreasing degree lists of length slots, entries >= lo, sum <= budget.
    void fill_degrees(std::vector<int>& cur, std::size_t slots, int lo, int budget,
                      const std::function<void(const std::vector<int>&)>& emit)
    {
      if (cur.size() == slots) {
        emit(cur);
        return;
      }
      const auto remaining = static_cast<int>(slots - cur.size());
      for (int d = lo; d * remaining <= budget; ++d) {
        cur.push_back(d);
        fill_degrees(cur, slots, d, budget - d, emit);
        cur.pop_back();
      }
    }
  }

  void for_each_fano_ci(int max_dim, int max_r,
                        const std::function<void(const CompleteIntersection&)>& visit)
  {
    if (max_dim < 3)
      throw std::invalid_argument("enumerate_fano_cis: max_dim must be >= 3");
    for (int n = 3; n <= max_dim; ++n)
      for (int r = 1; r <= max_r; ++r) {
        // rho >= 1  <=>  sum d_i <= N + r
        std::vector<int> cur;
        fill_degrees(cur, static_cast<std::size_t>(r), 2, n + r,
                     [&](const std::vector<int>& degs) { visit(CompleteIntersection(n, degs)); });
      }
  }

  std::vector<CompleteIntersection> enumerate_fano_cis(int max_dim, int max_r)
  {
    std::vector<CompleteIntersection> out;
    for_each_fano_ci(max_dim, max_r, [&](const CompleteIntersection& ci) { out.push_back(ci); });
    return out;
  }

} // namespace qspec
