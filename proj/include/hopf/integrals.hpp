#pragma once

#include <optional>
#include <string>

#include "hopf/modules.hpp"

namespace hopf {

class NoCounitalization : public Error {
 public:
  using Error::Error;
};

/// f: H -> A with its verification record. Asserted checks: unital,
/// comodule_map. Flags: multiplicative, algebra_map, anti_algebra_map,
/// convolution_invertible.
struct IntegralCandidate {
  LinMap map;
  VerificationReport record;
  std::optional<LinMap> inverse;

  bool is_total_integral() const { return record.passed("unital") && record.passed("comodule_map"); }
  bool is_algebra_map() const { return record.passed("algebra_map"); }
  bool is_invertible() const { return inverse.has_value(); }
};

/// f: C -> H with its verification record. Asserted checks: counital,
/// module_map. Flags: comultiplicative, coalgebra_map, anti_coalgebra_map,
/// convolution_invertible.
struct CointegralCandidate {
  LinMap map;
  VerificationReport record;
  std::optional<LinMap> inverse;

  bool is_total_cointegral() const { return record.passed("counital") && record.passed("module_map"); }
  bool is_coalgebra_map() const { return record.passed("coalgebra_map"); }
  bool is_invertible() const { return inverse.has_value(); }
};

/// When f is an algebra map the inverse is f∘S, checked against the
/// solver's inverse.
IntegralCandidate check_total_integral(const LinMap& f, const ComoduleAlgebra& a, const HopfStructure& h);
/// When f is a coalgebra map the inverse is S∘f, checked against the
/// solver's inverse.
CointegralCandidate check_total_cointegral(const LinMap& f, const ModuleCoalgebra& c, const HopfStructure& h);

struct Counitalization {
  CointegralCandidate result;
  /// The parenthesization that was kept.
  std::string reading;
  /// Outcome of every candidate reading.
  VerificationReport report;
};

/// Repairs counitality of an invertible H-module map f: C -> H. Candidate
/// readings of the repaired map:
///   "eps(finv(c1)) f(c2)", "eps(finv(c1) f(c2)) 1", "f(c1) eps(finv(c2))".
/// A candidate is kept when it is a module map, counital and convolution
/// invertible; the first passing reading in this order wins. Throws
/// NotInvertible when f is not convolution invertible or not a module map,
/// NoCounitalization when no reading passes.
Counitalization counitalize(const LinMap& f, const ModuleCoalgebra& c, const HopfStructure& h);

/// finv(ch) = S(h) finv(c) over all basis pairs.
VerificationReport check_twisted_inverse_identities(const LinMap& finv, const ModuleCoalgebra& c,
                                                    const HopfStructure& h);
/// finv(h)<0> ⊗ finv(h)<1> = finv(h(2)) ⊗ S(h(1)) over all basis elements.
VerificationReport check_twisted_inverse_identities(const LinMap& finv, const ComoduleAlgebra& a,
                                                    const HopfStructure& h);

}  // namespace hopf
