#pragma once

#include <optional>

#include "hopf/integrals.hpp"

namespace hopf {

/// Raised when a construction needs a bijective canonical map.
class NotGalois : public Error {
 public:
  using Error::Error;
};

/// Canonical map with its exact verdict. is_galois ⇔ can bijective; when
/// bijective, can_inverse is the solver's inverse.
struct GaloisVerdict {
  LinMap can;
  std::optional<LinMap> can_inverse;
  bool injective = false;
  bool surjective = false;
  bool is_galois = false;
  /// Galois and a convolution invertible total (co)integral was verified.
  bool is_cleft = false;
  std::optional<LinMap> kappa;
  VerificationReport report;
};

/// A⊗_B A = (A⊗A)/span{ab⊗a' − a⊗ba'} and its B-centralizing part
/// (A⊗_B A)^B = {x : bx = xb}, an algebra under
/// (a1⊗a1')(a2⊗a2') = a1a2⊗a2'a1' with unit 1⊗1.
struct RelativeTensor {
  Subspace base;           ///< B inside A
  QuotientSpace tensor;    ///< A⊗_B A, ambient A⊗A
  Subspace invariant;      ///< (A⊗_B A)^B inside tensor.carrier()
  AlgebraStructure algebra;  ///< on invariant.carrier()
  /// Closure, well-definedness and algebra axioms of the product, plus flags
  /// for the alternative product a1a2⊗a2'a2 evaluated on basis tensors.
  VerificationReport report;
};

RelativeTensor relative_tensor(const ComoduleAlgebra& a, const HopfStructure& h);

struct ExtensionGalois {
  RelativeTensor rt;
  GaloisVerdict verdict;
  std::optional<LinMap> integral;
  std::optional<LinMap> integral_inverse;
};

/// can: A⊗_B A -> A⊗H, a⊗a' ↦ aa'<0>⊗a'<1>. With a convolution invertible
/// integral f the closed form can⁻¹(a⊗h) = af⁻¹(h(1))⊗f(h(2)) is checked.
ExtensionGalois can_extension(const ComoduleAlgebra& a, const HopfStructure& h,
                              const std::optional<LinMap>& f = std::nullopt);

struct KappaExtension {
  /// κ: H -> (A⊗_B A)^B, in coordinates of rt.invariant.
  LinMap kappa;
  /// κ as a map into A⊗_B A.
  LinMap kappa_tensor;
  VerificationReport report;
  /// Present when H is commutative: (A⊗_B A)^B with a⊗a' ↦ a⊗a'<0>⊗a'<1>.
  std::optional<ComoduleAlgebra> invariant_comodule;
  std::optional<IntegralCandidate> integral;
};

/// κ(h) = can⁻¹(1⊗h). Throws NotGalois unless can is bijective.
KappaExtension kappa_extension(const ExtensionGalois& g, const ComoduleAlgebra& a, const HopfStructure& h);

/// C□_D C = ker((id⊗π)Δ⊗id − id⊗(π⊗id)Δ) inside C⊗C.
Subspace cotensor(const CoalgebraStructure& c, const LinMap& pi);

struct CoextensionGalois {
  CoidealQuotient d;
  Subspace cotensor;
  GaloisVerdict verdict;
  std::optional<LinMap> cointegral;
  std::optional<LinMap> cointegral_inverse;
};

/// can: C⊗H -> C□_D C, c⊗h ↦ c(1)⊗c(2)h. With a convolution invertible
/// cointegral f the closed form can⁻¹(c⊗c') = c(1)⊗f⁻¹(c(2))f(c') is
/// checked.
CoextensionGalois can_coextension(const ModuleCoalgebra& c, const HopfStructure& h,
                                  const std::optional<LinMap>& f = std::nullopt);

/// (C□_D C)_D = C□_D C / W with
/// W = span{c⊗c'(1)φ(π(c'(2))) − c(2)⊗c'φ(π(c(1)))}.
struct BalancedQuotient {
  QuotientSpace space;  ///< over the cotensor carrier
  /// Δ = c(1)□c'(2) ⊗ c(2)□c'(1), ε = ε⊗ε, (c⊗c')h = c⊗c'h.
  ModuleCoalgebra coalgebra;
  VerificationReport report;
};

BalancedQuotient balanced_quotient_coalgebra(const CoextensionGalois& g, const ModuleCoalgebra& c,
                                             const HopfStructure& h);

struct KappaCoextension {
  /// κ = (ε⊗id)∘can⁻¹ on (C□_D C)_D.
  LinMap kappa;
  VerificationReport report;
  /// Present when H is cocommutative.
  std::optional<CointegralCandidate> cointegral;
};

/// Uses the solver's can⁻¹ when can is bijective, otherwise the closed form.
/// Throws NotGalois when neither is available.
KappaCoextension kappa_coextension(const CoextensionGalois& g, const BalancedQuotient& q, const ModuleCoalgebra& c,
                                   const HopfStructure& h);

/// Extension side, H commutative: the map
/// (A⊗_B A)^B ⊗ (A⊗_B A)^B -> (A⊗_B A)^B ⊗ H under two readings,
/// "x x'<0> ⊗ x'<1>" and "x<0> x' ⊗ x<1>"; injectivity and surjectivity of
/// each are flags.
VerificationReport auxiliary_galois_maps(const KappaExtension& k, const HopfStructure& h);
/// Coextension side, H cocommutative: the canonical map of (C□_D C)_D.
VerificationReport auxiliary_galois_maps(const BalancedQuotient& q, const HopfStructure& h);

}  // namespace hopf
