#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopf/galois.hpp"
#include "hopf/io.hpp"
#include "hopf/mixed.hpp"

namespace hopf {

/// Checks of one declaration or construction.
struct ReportSection {
  std::string name;
  std::string kind;
  VerificationReport checks;
  std::vector<std::string> notes;
};

/// Everything a command found. Rendering and the exit code derive from this
/// value alone.
struct Report {
  std::string command;
  std::vector<ReportSection> sections;
  std::vector<ExpectedDiscrepancy> expected;
  std::vector<std::string> notes;

  /// "section.check" names of asserted failures not listed as expected.
  std::vector<std::string> unexpected_failures() const;
  bool ok() const { return unexpected_failures().empty(); }
  int exit_code() const { return ok() ? 0 : 1; }
};

std::string render_text(const Report& r, bool color);
/// JSON with a top-level "schema_version": 1.
std::string render_json(const Report& r);

/// Loading declarations into structures. Throw ReferenceError on a name of
/// the wrong type.
HopfStructure load_hopf(const StructureFile& sf, const std::string& name);
ComoduleAlgebra load_comodule_algebra(const StructureFile& sf, const std::string& name);
ModuleCoalgebra load_module_coalgebra(const StructureFile& sf, const std::string& name);
MixedModule load_mixed(const StructureFile& sf, const std::string& name);
ModularPair load_mpi(const StructureFile& sf, const std::string& name);

/// Verifies every declaration in name order.
Report check_file(const StructureFile& sf);

/// Writes the structures of a fixture under the names H, C or A, f.
StructureFile fixture_file(const CoextensionFixture& fx);
StructureFile fixture_file(const ExtensionFixture& fx);
StructureFile hopf_file(const HopfStructure& h, const std::string& family);

/// Emits a catalog family: group_algebra n [p], binomial_hopf p,
/// matrix_coalgebra p, truncated_binomial p m, two_variable p q,
/// self_coextension n, self_extension n. dual replaces a fixture by its
/// linear dual. Throws Error on unknown families or bad parameters.
StructureFile catalog_file(const std::string& family, const std::vector<std::uint64_t>& params, bool dual,
                           std::optional<std::uint64_t> prime);

/// Derives the antipode of a hopf declaration and stores it in the file.
Report derive_antipode_into(StructureFile& sf, const std::string& name);

/// Galois verdict and κ for the first (or the named) comodule algebra
/// ("extension") or module coalgebra ("coextension").
Report galois_report(const StructureFile& sf, const std::string& side, const std::optional<std::string>& decl);

/// Named constructions and their numeric aliases:
///   yd-integral (3.2), ayd-quotient (3.3), ayd-integral-twisted (3.4),
///   yd-quotient-twisted (3.6), yd-cointegral (3.19), ayd-invariant (3.20),
///   ayd-cointegral-twisted (3.21).
/// Returns the canonical name; throws Error on unknown names.
std::string construction_name(const std::string& id);
std::vector<std::string> construction_names();

struct BuildResult {
  Report report;
  /// False when the construction was skipped because its precondition fails
  /// on a check listed as an expected discrepancy.
  bool built = false;
};

/// Constructs, verifies, and appends the module to sf as a mixed
/// declaration.
BuildResult build_construction(StructureFile& sf, const std::string& id, const std::optional<std::string>& mpi);

}  // namespace hopf
