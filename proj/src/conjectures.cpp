#include <qspec/conjectures.hpp>

namespace qspec {

  ConjectureOVerdict check_conjecture_o(const SpectrumReport& report)
  {
    ConjectureOVerdict v;
    v.tMultiplicity = 0;
    v.circleCount = 0;
    const Modulus t = report.radius.modulus();
    v.rootsOfUnity = true;

    auto visit = [&](const SpectrumEntry& e) {
      if (e.multiplicity <= 0 || compare(e.value.modulus(), t) != 0)
        return;
      v.circleCount += e.multiplicity;
      // T > 0 for every genuine instance; a zero radius has no phase to test.
      auto turn = e.value.turn();
      if (!turn) {
        v.rootsOfUnity = false;
        v.circle.push_back({e.value, e.multiplicity, Rational(0), false});
        return;
      }
      if (turn->is_zero())
        v.tMultiplicity += e.multiplicity;
      bool unity = (*turn * Rational(report.rho)).is_integer();
      v.rootsOfUnity = v.rootsOfUnity && unity;
      v.circle.push_back({e.value, e.multiplicity, *turn, unity});
    };
    for (const auto& e : report.ambient)
      visit(e);
    if (report.primitive)
      visit(*report.primitive);

    v.multiplicityOne = (v.tMultiplicity == 1);
    return v;
  }

  GalkinVerdict check_galkin(const SpectrumReport& report)
  {
    GalkinVerdict g;
    const Integer bound = report.instance.dim() + 1;
    if (report.rho > 1) {
      g.exponent = static_cast<unsigned long>(report.rho);
      g.lhs = ipow(Integer(report.rho), g.exponent) * report.bigD;
      g.rhs = ipow(bound, g.exponent);
    } else {
      g.exponent = 1;
      g.lhs = report.bigD - report.bigF;
      g.rhs = bound;
    }
    g.strict = g.lhs > g.rhs;
    return g;
  }

  ConjectureReport verify_instance(const CompleteIntersection& ci)
  {
    ConjectureReport out{ci, std::nullopt, {}, {}, false, false, {}};
    out.lambdaApplicable = (ci.dim() % 2 == 0 && fano_index(ci) == 1);
    try {
      SpectrumReport spectrum = full_spectrum(ci);
      out.conjO = check_conjecture_o(spectrum);
      out.galkin = check_galkin(spectrum);
      // full_spectrum throws LambdaMismatch on any disagreement
      out.lambdaConsistent = true;
      out.spectrum = std::move(spectrum);
    } catch (const std::exception& e) {
      out.diagnostic = e.what();
    }
    return out;
  }

} // namespace qspec
