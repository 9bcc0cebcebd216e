#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hopf/space.hpp"

namespace hopf {

/// First failing basis tuple of an identity check.
struct Witness {
  std::string basis;
  std::string lhs;
  std::string rhs;
};

/// Outcome of one axiom or identity, evaluated on every basis tuple.
struct CheckResult {
  std::string name;
  bool passed = true;
  /// Informational results (flags such as "algebra_map") never fail a run.
  bool asserted = true;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::optional<Witness> witness;
  std::string note;
};

/// Ordered list of check outcomes. Failures carry the minimal witness: the
/// first failing basis tuple in index order.
class VerificationReport {
 public:
  void add(CheckResult r) { checks_.push_back(std::move(r)); }
  void add_flag(std::string name, bool value, std::string note = {});
  void add_note(std::string name, std::string note);
  /// Appends every check of other, prefixing names with "prefix.".
  void merge(const VerificationReport& other, const std::string& prefix = {});

  const std::vector<CheckResult>& checks() const { return checks_; }
  const CheckResult* find(const std::string& name) const;
  /// True when the named check exists and passed.
  bool passed(const std::string& name) const;
  /// True when every asserted check passed.
  bool ok() const;
  /// Names of asserted checks that failed.
  std::vector<std::string> failures() const;

 private:
  std::vector<CheckResult> checks_;
};

/// Accumulates per-basis-tuple comparisons for one identity.
class CheckBuilder {
 public:
  CheckBuilder(std::string name, BasedSpace render_space);

  void record(const std::function<std::string()>& where, const Vector& lhs, const Vector& rhs);
  void record(const std::function<std::string()>& where, bool ok, const std::function<std::string()>& lhs,
              const std::function<std::string()>& rhs);
  bool ok() const { return failures_ == 0; }
  CheckResult done(bool asserted = true, std::string note = {}) const;

 private:
  std::string name_;
  BasedSpace space_;
  std::size_t cases_ = 0;
  std::size_t failures_ = 0;
  std::optional<Witness> witness_;
};

/// Compares two maps column by column; witnesses name the source basis
/// element of the first differing column.
CheckResult compare_maps(const std::string& name, const LinMap& lhs, const LinMap& rhs, bool asserted = true);

}  // namespace hopf
