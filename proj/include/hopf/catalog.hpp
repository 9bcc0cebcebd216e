#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopf/modules.hpp"

namespace hopf {

/// A check that is known to fail on a fixture, with the reason.
struct ExpectedDiscrepancy {
  std::string check;
  std::string note;
};

/// Right H-module coalgebra C with an optional total cointegral candidate
/// f: C -> H.
struct CoextensionFixture {
  std::string name;
  HopfStructure hopf;
  ModuleCoalgebra coalgebra;
  std::optional<LinMap> cointegral;
  std::vector<ExpectedDiscrepancy> expected;
};

/// Right H-comodule algebra A with an optional total integral candidate
/// f: H -> A.
struct ExtensionFixture {
  std::string name;
  HopfStructure hopf;
  ComoduleAlgebra algebra;
  std::optional<LinMap> integral;
  std::vector<ExpectedDiscrepancy> expected;
};

/// Binomial coefficient as a field element (Lucas' theorem over F_p).
Scalar binomial(Field k, std::uint64_t n, std::uint64_t r);

/// k[Z/n] with basis 1, g, ..., g^{n-1}.
HopfStructure group_algebra(std::size_t n, Field k);
/// Span of x^{step·i} for step·i < top inside k[x]/(x^top), with the
/// binomial coproduct. Requires the coproduct to stay inside the span,
/// which holds for k[x]/(x^{p^m}) and step a power of p.
HopfStructure truncated_polynomial(Field k, std::size_t top, std::size_t step, const std::string& var = "x");
/// F_p[x]/(x^p).
HopfStructure binomial_hopf(std::uint64_t p);

/// p×p matrix coalgebra over k[Z/p] with A_ij·g^n = A_{i+n, j+n} and
/// f(A_ij) = δ_ij g^i. The field defaults to F_p.
CoextensionFixture matrix_coalgebra(std::uint64_t p, std::optional<Field> k = std::nullopt);
/// C = F_p[x]/(x^{p^m}) over H = F_p[x^p]/(x^{p^m}) acting by multiplication,
/// f(x^n) = x^n when p | n and 0 otherwise.
CoextensionFixture truncated_binomial(std::uint64_t p, std::size_t m);
/// C = F_p[t]/(t^p) ⊗ k[Z/q] over H = F_p[x]/(x^p),
/// t^n s^m · x^k = δ_{m,0} t^{n+k} for k > 0, f(t^n s^m) = δ_{m,0} x^n.
CoextensionFixture two_variable(std::uint64_t p, std::size_t q);

/// C = H acting on itself by multiplication, f = id.
CoextensionFixture self_coextension(const HopfStructure& h, const std::string& name = "self");
/// A = H coacting on itself by Δ, f = id.
ExtensionFixture self_extension(const HopfStructure& h, const std::string& name = "self");

/// Linear dual: C* is a right H*-comodule algebra by γᵀ and fᵀ: H* -> C*.
ExtensionFixture dual_fixture(const CoextensionFixture& c);
/// Linear dual: A* is a right H*-module coalgebra by ρᵀ and fᵀ: A* -> H*.
CoextensionFixture dual_fixture(const ExtensionFixture& a);

/// All declared checks of a fixture: Hopf axioms of H, module-coalgebra or
/// comodule-algebra axioms, and the total (co)integral conditions of f.
VerificationReport check_fixture(const CoextensionFixture& c);
VerificationReport check_fixture(const ExtensionFixture& a);

}  // namespace hopf
