#ifndef QSPEC_CONJECTURES_HPP
#define QSPEC_CONJECTURES_HPP

#include <optional>
#include <string>
#include <vector>

#include <qspec/spectrum.hpp>

namespace qspec {

  // An eigenvalue u with |u| = T, together with u/T written as exp(2 pi i turn).
  struct CircleMember {
    Eigenvalue value;
    Integer multiplicity;
    Rational turn;
    bool rootOfUnity;   // turn * rho is an integer
  };

  struct ConjectureOVerdict {
    // Clause (1): the eigenvalue T itself has multiplicity one.
    bool multiplicityOne = false;
    Integer tMultiplicity;     // multiplicity of the eigenvalue T
    Integer circleCount;       // multiplicity-weighted count of |u| = T
    // Clause (2): every u with |u| = T has u/T a rho-th root of unity.
    bool rootsOfUnity = false;
    std::vector<CircleMember> circle;
  };

  // rho > 1:  rho^rho D  >  (N+1)^rho,   exponent rho
  // rho = 1:  D - F      >  N+1,         exponent 1
  struct GalkinVerdict {
    bool strict = false;
    Integer lhs;
    Integer rhs;
    unsigned long exponent = 1;
  };

  struct ConjectureReport {
    CompleteIntersection instance;
    std::optional<SpectrumReport> spectrum;
    ConjectureOVerdict conjO;
    GalkinVerdict galkin;
    bool lambdaApplicable = false;
    bool lambdaConsistent = false;
    std::string diagnostic;   // empty unless the pipeline raised an error

    bool passed() const
    {
      return conjO.multiplicityOne && conjO.rootsOfUnity && galkin.strict && lambdaConsistent;
    }
  };

  ConjectureOVerdict check_conjecture_o(const SpectrumReport& report);
  GalkinVerdict check_galkin(const SpectrumReport& report);

  // Never throws for a valid instance: pipeline errors become a failed report
  // with the error text in diagnostic.
  ConjectureReport verify_instance(const CompleteIntersection& ci);

} // namespace qspec

#endif // QSPEC_CONJECTURES_HPP
