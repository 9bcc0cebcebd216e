#pragma once

#include <string>
#include <vector>

#include "hopf/linalg.hpp"
#include "hopf/report.hpp"

namespace hopf {

class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// Unital associative algebra given by structure constants.
struct AlgebraStructure {
  BasedSpace carrier;
  LinMap mult;  ///< A⊗A -> A
  Vector unit;  ///< 1_A

  Field field() const { return mult.field(); }
  std::size_t dim() const { return carrier.dim(); }
  /// e_i e_j
  const Vector& product(std::size_t i, std::size_t j) const { return mult.column(i * dim() + j); }
  Vector multiply(const Vector& a, const Vector& b) const;
  /// η: k -> A
  LinMap unit_map() const { return LinMap::from_vector(unit, carrier); }
};

/// Counital coassociative coalgebra given by structure constants.
struct CoalgebraStructure {
  BasedSpace carrier;
  LinMap comult;  ///< C -> C⊗C
  LinMap counit;  ///< C -> k

  Field field() const { return comult.field(); }
  std::size_t dim() const { return carrier.dim(); }
  /// Iterated coproduct C -> C^{⊗(n+1)}, built as (Δ⊗id...)∘...∘Δ.
  LinMap iterated(std::size_t n) const;
  Scalar counit_of(std::size_t i) const { return counit.column(i).coeff(0); }
};

/// Hopf algebra with invertible antipode on one carrier.
struct HopfStructure {
  AlgebraStructure algebra;
  CoalgebraStructure coalgebra;
  LinMap antipode;
  LinMap antipode_inv;

  Field field() const { return algebra.field(); }
  const BasedSpace& carrier() const { return algebra.carrier; }
  std::size_t dim() const { return algebra.dim(); }
  const LinMap& mult() const { return algebra.mult; }
  const LinMap& comult() const { return coalgebra.comult; }
  const LinMap& counit() const { return coalgebra.counit; }
  const Vector& unit() const { return algebra.unit; }
};

AlgebraStructure make_algebra(const BasedSpace& carrier, LinMap mult, Vector unit);
CoalgebraStructure make_coalgebra(const BasedSpace& carrier, LinMap comult, LinMap counit);

/// Associativity and both unit laws, on every basis tuple.
VerificationReport check_algebra(const AlgebraStructure& a);
/// Coassociativity and both counit laws.
VerificationReport check_coalgebra(const CoalgebraStructure& c);
/// Algebra and coalgebra axioms plus multiplicativity of Δ and ε on basis pairs
/// and Δ(1) = 1⊗1, ε(1) = 1.
VerificationReport check_bialgebra(const AlgebraStructure& a, const CoalgebraStructure& c);
/// Bialgebra axioms plus both antipode laws and S∘S⁻¹ = S⁻¹∘S = id.
VerificationReport check_hopf(const HopfStructure& h);

/// f ∗ g = m_A ∘ (f⊗g) ∘ Δ_C for f, g: C -> A.
LinMap convolution(const LinMap& f, const LinMap& g, const CoalgebraStructure& c, const AlgebraStructure& a);
/// η_A ∘ ε_C, the unit of the convolution algebra Hom(C, A).
LinMap convolution_unit(const CoalgebraStructure& c, const AlgebraStructure& a);
/// Solves f ∗ g = η∘ε exactly and checks g ∗ f = η∘ε; throws NotInvertible
/// when either fails.
LinMap convolution_inverse(const LinMap& f, const CoalgebraStructure& c, const AlgebraStructure& a);

struct Antipode {
  LinMap antipode;
  LinMap antipode_inv;
};

/// Convolution inverse of id in End(H) and of id in End(H^cop). Throws
/// NotInvertible when the bialgebra is not Hopf or S is not invertible.
Antipode derive_antipode(const AlgebraStructure& a, const CoalgebraStructure& c);
/// Bialgebra with derived antipode.
HopfStructure make_hopf(AlgebraStructure a, CoalgebraStructure c);

enum class TwistMode { Op, Cop, OpCop };
std::string to_string(TwistMode m);
/// H^op, H^cop or H^{op,cop}; antipode S⁻¹ for op and cop, S for op-cop.
HopfStructure twist(const HopfStructure& h, TwistMode mode);

/// Dual basis label: "x" <-> "x^*".
std::string dual_label(const std::string& label);
BasedSpace dual_space(const BasedSpace& v);
/// C* with mult = Δᵀ and unit = εᵀ.
AlgebraStructure dualize(const CoalgebraStructure& c);
/// A* with comult = multᵀ and counit = unitᵀ.
CoalgebraStructure dualize(const AlgebraStructure& a);
/// H* with S ↦ Sᵀ.
HopfStructure dualize(const HopfStructure& h);
/// fᵀ: W* -> V* for f: V -> W.
LinMap dual_map(const LinMap& f, const BasedSpace& dual_source, const BasedSpace& dual_target);

/// Every unital algebra map A -> k, as functionals, in a deterministic order.
std::vector<LinMap> find_characters(const AlgebraStructure& a);
/// Every grouplike element of C (Δσ = σ⊗σ, ε(σ) = 1).
std::vector<Vector> find_grouplikes(const CoalgebraStructure& c);

bool is_commutative(const AlgebraStructure& a);
bool is_cocommutative(const CoalgebraStructure& c);

/// Structural equality of all coefficient tables.
bool same_tables(const HopfStructure& a, const HopfStructure& b);

}  // namespace hopf
