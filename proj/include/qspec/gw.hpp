#ifndef QSPEC_GW_HPP
#define QSPEC_GW_HPP

#include <vector>

#include <qspec/exactmath.hpp>
#include <qspec/variety.hpp>

namespace qspec {

  // Coefficients I_0..I_N of
  //   (prod d_i)(prod d_i!) [ prod_i prod_{m=1}^{d_i} (1 + (d_i/m) x) / (1+x)^(N+r+1) - 1 ].
  // By the mirror formula I_a is the one-point degree-one descendant
  // <tau_{a-1}(H^{N-a})>_{0,1} for 0 <= a <= N.
  struct MirrorCoefficients {
    std::vector<Rational> values;

    const Rational& operator[](std::size_t a) const { return values.at(a); }
  };

  // Throws MirrorNormalization if the expansion has I_0 != 0.
  MirrorCoefficients mirror_coefficients(const CompleteIntersection& ci);

  // I_a; throws IndexRange outside 0 <= a <= N.
  Rational one_point_descendant(const CompleteIntersection& ci, int a);

  // <tau_0(H^i) tau_a(H^{N-i-a})>_{0,1} = sum_{p=0}^{i} C(i,p) I_{a+p},
  // obtained by applying the divisor relation i times.
  Rational two_point_pure(const CompleteIntersection& ci, int i, int a);
  Rational two_point_pure(const CompleteIntersection& ci, const MirrorCoefficients& mc, int i, int a);

  // <tau_p(c_{N-2-p}(X)) tau_1(H)>_{0,1} + <tau_p(c_{N-2-p}(X) H)>_{0,1}
  //   = -<tau_{p+1}(c_{N-2-p}(X))>_{0,1} = -c_{N-2-p} I_{p+2},   0 <= p <= N-2.
  Rational chern_descendant_combination(const CompleteIntersection& ci, int p);
  Rational chern_descendant_combination(const std::vector<Rational>& chern,
                                        const MirrorCoefficients& mc, int dim, int p);

  // <H>_{1,0} = -(1/24) int_X H c_{N-1}(X) = -(1/24) (prod d_i) c_{N-1}.
  Rational genus_one_one_point_H(const CompleteIntersection& ci);

  // <tau_1(H)>_{1,1} = -(1/24) sum_{p=0}^{N-2} chern_descendant_combination(p).
  // This is the standard-versus-reduced formula's conclusion with the
  // two-point terms already collapsed; it is not a public spectrum route.
  Rational genus_one_descendant_H(const CompleteIntersection& ci);

} // namespace qspec

#endif // QSPEC_GW_HPP
