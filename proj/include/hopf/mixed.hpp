#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopf/integrals.hpp"

namespace hopf {

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};
class VariantMismatch : public Error {
 public:
  using Error::Error;
};
class CoactionNotDescending : public Error {
 public:
  using Error::Error;
};
class CoactionNotRestricting : public Error {
 public:
  using Error::Error;
};

/// Sides of the action and the coaction: left-right (left module, right
/// comodule), right-left and right-right.
enum class Variant { LeftRight, RightLeft, RightRight };
std::string to_string(Variant v);

/// A module and comodule over one Hopf algebra on the same carrier.
struct MixedModule {
  BasedSpace carrier;
  ActionMap action;
  CoactionMap coaction;
  Variant variant = Variant::RightRight;
  /// Construction checks and verification outcomes ("yd", "ayd", "stable").
  VerificationReport report;
};

/// Module and comodule axioms plus the Yetter-Drinfeld compatibility:
///   left-right:   ρ(hm) = h(2)m<0> ⊗ h(3)m<1>S⁻¹(h(1))
///   right-left:   ρ(mh) = S⁻¹(h(3))m<-1>h(1) ⊗ m<0>h(2)
///   right-right:  ρ(mh) = m<0>h(2) ⊗ S(h(1))m<1>h(3)
/// Throws VariantMismatch when the sides disagree with the variant.
VerificationReport verify_yd(const MixedModule& m, const HopfStructure& h);
/// Same with S and S⁻¹ exchanged (anti-Yetter-Drinfeld).
VerificationReport verify_ayd(const MixedModule& m, const HopfStructure& h);
/// m<1>m<0> = m, m<0>m<-1> = m, m<0>m<1> = m for the three variants.
CheckResult verify_stability(const MixedModule& m, const HopfStructure& h);

/// Character δ and grouplike σ with δ(σ) = 1 and S̃²(h) = σhσ⁻¹, where
/// S̃(h) = δ(h(1))S(h(2)).
struct ModularPair {
  LinMap delta;  ///< H -> k
  Vector sigma;
  VerificationReport report;
  bool verified() const { return report.ok(); }
};

ModularPair mpi_verify(const HopfStructure& h, const LinMap& delta, const Vector& sigma);
/// Every verified pair built from find_characters × find_grouplikes.
std::vector<ModularPair> mpi_find(const HopfStructure& h);
/// (ε, 1).
ModularPair trivial_pair(const HopfStructure& h);

/// Right-right module on A with ah = f⁻¹(h(1))af(h(2)) and the original
/// coaction, verified Yetter-Drinfeld. Requires f to be a total integral that
/// is an algebra map, or a cleft extension (cleft = true).
struct IntegralYD {
  MixedModule module;
  /// The same action restricted to A^B.
  Subspace centralizer;
  std::optional<ActionMap> centralizer_action;
};
IntegralYD build_yd_from_integral(const ComoduleAlgebra& a, const HopfStructure& h, const LinMap& f, bool cleft);

/// Left-right module on A_B = A/[A,B] with ha = f(h(2))af⁻¹(h(1)) and the
/// induced coaction, verified anti-Yetter-Drinfeld. Stability is asserted
/// only when cleft; the predicate a<0>f⁻¹(a<1>(1))f(a<1>(2)) = a is
/// reported alongside. Throws CoactionNotDescending when ρ([A,B]) is not in
/// [A,B]⊗H.
MixedModule build_ayd_on_AB(const ComoduleAlgebra& a, const HopfStructure& h, const LinMap& f, bool cleft);

/// Right-right module on C with the original action and coaction
/// c ↦ c(2) ⊗ f⁻¹(c(1))f(c(3)), verified Yetter-Drinfeld. Requires f to be a
/// total cointegral that is a coalgebra map, or a cleft coextension.
struct CointegralYD {
  MixedModule module;
  Subspace invariant;  ///< C^D
  std::optional<CoactionMap> invariant_coaction;
};
CointegralYD build_yd_from_cointegral(const ModuleCoalgebra& c, const HopfStructure& h, const LinMap& f, bool cleft);

/// Right-left module on C^D with the original action and coaction
/// c ↦ f⁻¹(c(3))f(c(1)) ⊗ c(2), verified anti-Yetter-Drinfeld. Stability is
/// asserted only when cleft. Throws CoactionNotRestricting when C^D is not
/// preserved.
MixedModule build_ayd_on_CD(const ModuleCoalgebra& c, const HopfStructure& h, const LinMap& f, bool cleft);

/// M ⊗ ᵟk_σ for a right-right Yetter-Drinfeld module M over k: action
/// (m⊗1)h = m h(1) ⊗ δ(h(2)), coaction m⊗1 ↦ m<0> ⊗ 1 ⊗ m<1>σ. The pair
/// is checked against twist(k, cop) (asserted) and against k (flag).
MixedModule tensor_with_delta_k_sigma(const MixedModule& m, const HopfStructure& k, const ModularPair& mpi);

/// Stability predicate for A⊗ᵟk_σ built from an integral:
/// f⁻¹(σ)f⁻¹(a<1>(1)) a<0> f(a<1>(2))f(σ)δ(a<1>(3)) = a.
CheckResult integral_twisted_stability(const ComoduleAlgebra& a, const HopfStructure& k, const LinMap& f,
                                       const LinMap& finv, const ModularPair& mpi);
/// Stability predicate for C⊗ᵟk_σ built from a cointegral:
/// c(3)f⁻¹(c(2))f(c(4))σ ⊗ δ(f⁻¹(c(1))f(c(5))) = c⊗1.
CheckResult cointegral_twisted_stability(const ModuleCoalgebra& c, const HopfStructure& k, const LinMap& f,
                                         const LinMap& finv, const ModularPair& mpi);

/// A left-right module over H as a right-left module over H^{op,cop}.
MixedModule to_op_cop(const MixedModule& m, const HopfStructure& h);

/// Twists a right-left anti-Yetter-Drinfeld module over k into a right-left
/// Yetter-Drinfeld module: action m·h(1)δ(S(h(2))) (or the mirrored
/// ordering when only that one verifies), coaction m ↦ σ⁻¹m<-1> ⊗ m<0>.
MixedModule staic_twist(const MixedModule& m, const HopfStructure& k, const ModularPair& mpi);
/// Inverse of staic_twist for the same pair and ordering.
MixedModule staic_untwist(const MixedModule& m, const HopfStructure& k, const ModularPair& mpi);

}  // namespace hopf
