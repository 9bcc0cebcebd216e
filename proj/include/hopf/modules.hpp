#pragma once

#include "hopf/structures.hpp"

namespace hopf {

class NotSubalgebra : public Error {
 public:
  using Error::Error;
};

enum class Side { Left, Right };

/// Right action γ: M⊗H -> M, or left action γ: H⊗M -> M.
struct ActionMap {
  BasedSpace module;
  LinMap gamma;
  Side side = Side::Right;

  /// m·h for a right action, h·m for a left one.
  Vector act(const Vector& m, const Vector& h) const;
};

/// Right coaction ρ: M -> M⊗H, or left coaction ρ: M -> H⊗M.
struct CoactionMap {
  BasedSpace comodule;
  LinMap rho;
  Side side = Side::Right;
};

VerificationReport check_action(const ActionMap& a, const HopfStructure& h);
VerificationReport check_coaction(const CoactionMap& c, const HopfStructure& h);

/// Right H-comodule algebra.
struct ComoduleAlgebra {
  AlgebraStructure algebra;
  CoactionMap coaction;
};

/// Right H-module coalgebra.
struct ModuleCoalgebra {
  CoalgebraStructure coalgebra;
  ActionMap action;
};

/// Algebra axioms, comodule axioms, ρ(aa') = ρ(a)ρ(a') and ρ(1) = 1⊗1.
VerificationReport check_comodule_algebra(const ComoduleAlgebra& a, const HopfStructure& h);
/// Coalgebra axioms, module axioms, Δ(ch) = c(1)h(1)⊗c(2)h(2) and ε(ch) = ε(c)ε(h).
VerificationReport check_module_coalgebra(const ModuleCoalgebra& c, const HopfStructure& h);

/// The trivial coaction a ↦ a⊗1 and the trivial action c·h = ε(h)c.
CoactionMap trivial_coaction(const BasedSpace& m, const HopfStructure& h);
ActionMap trivial_action(const BasedSpace& m, const HopfStructure& h);

/// B = {a : ρ(a) = a⊗1}. Throws NotSubalgebra when B is not a unital
/// subalgebra.
Subspace coinvariants(const ComoduleAlgebra& a, const HopfStructure& h);

/// Multiplication of A restricted to a subalgebra, expressed on the
/// subspace carrier.
AlgebraStructure restrict_algebra(const AlgebraStructure& a, const Subspace& b);

/// D = C/I with I = span{ch − ε(h)c}, its induced coalgebra and π: C -> D.
struct CoidealQuotient {
  QuotientSpace space;
  CoalgebraStructure coalgebra;
  LinMap pi;
  /// Coalgebra axioms of D, Δ_D∘π = (π⊗π)∘Δ_C, ε_D∘π = ε_C and
  /// π(ch) = ε(h)π(c).
  VerificationReport report;
};

CoidealQuotient coideal_quotient(const ModuleCoalgebra& c, const HopfStructure& h);

/// A^B and A_B = A/[A,B] for a subalgebra B of A.
struct CentralizerCommutator {
  Subspace centralizer;
  QuotientSpace commutator_quotient;
};

CentralizerCommutator centralizer_and_commutator(const AlgebraStructure& a, const Subspace& b);

/// C^D = {c : c(1)φ(π(c(2))) = c(2)φ(π(c(1))) for all φ ∈ D*}.
Subspace invariant_subspace_CD(const ModuleCoalgebra& c, const CoidealQuotient& d);

/// C_D = C/W. with_pi uses W = {c(1)φ(π(c(2))) − c(2)φ(π(c(1)))}, φ ∈ D*;
/// without_pi uses the literal W = {c(1)φ(c(2)) − c(2)φ(c(1))} with φ
/// ranging over C*.
struct QuotientCD {
  QuotientSpace with_pi;
  QuotientSpace without_pi;
};

QuotientCD quotient_CD(const ModuleCoalgebra& c, const CoidealQuotient& d);

/// The difference map C -> C⊗D, c ↦ c(1)⊗π(c(2)) − c(2)⊗π(c(1)).
LinMap balancing_difference(const CoalgebraStructure& c, const LinMap& pi);

}  // namespace hopf
