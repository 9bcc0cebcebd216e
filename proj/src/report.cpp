#include "hopf/report.hpp"

namespace hopf {

void VerificationReport::add_flag(std::string name, bool value, std::string note) {
  CheckResult r;
  r.name = std::move(name);
  r.passed = value;
  r.asserted = false;
  r.note = std::move(note);
  checks_.push_back(std::move(r));
}

void VerificationReport::add_note(std::string name, std::string note) { add_flag(std::move(name), true, std::move(note)); }

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
  for (CheckResult r : other.checks_) {
    if (!prefix.empty()) r.name = prefix + "." + r.name;
    checks_.push_back(std::move(r));
  }
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

bool VerificationReport::passed(const std::string& name) const {
  const CheckResult* c = find(name);
  return c && c->passed;
}

bool VerificationReport::ok() const {
  for (const auto& c : checks_)
    if (c.asserted && !c.passed) return false;
  return true;
}

std::vector<std::string> VerificationReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks_)
    if (c.asserted && !c.passed) out.push_back(c.name);
  return out;
}

CheckBuilder::CheckBuilder(std::string name, BasedSpace render_space)
    : name_(std::move(name)), space_(std::move(render_space)) {}

void CheckBuilder::record(const std::function<std::string()>& where, const Vector& lhs, const Vector& rhs) {
  ++cases_;
  if (lhs == rhs) return;
  if (failures_++ == 0) witness_ = Witness{where(), render(lhs, space_), render(rhs, space_)};
}

void CheckBuilder::record(const std::function<std::string()>& where, bool ok, const std::function<std::string()>& lhs,
                          const std::function<std::string()>& rhs) {
  ++cases_;
  if (ok) return;
  if (failures_++ == 0) witness_ = Witness{where(), lhs(), rhs()};
}

CheckResult CheckBuilder::done(bool asserted, std::string note) const {
  CheckResult r;
  r.name = name_;
  r.passed = failures_ == 0;
  r.asserted = asserted;
  r.cases = cases_;
  r.failures = failures_;
  r.witness = witness_;
  r.note = std::move(note);
  return r;
}

CheckResult compare_maps(const std::string& name, const LinMap& lhs, const LinMap& rhs, bool asserted) {
  if (lhs.source().dim() != rhs.source().dim() || lhs.target().dim() != rhs.target().dim())
    throw SpaceMismatch(name + ": compared maps have different shapes");
  CheckBuilder b(name, lhs.target());
  for (std::size_t j = 0; j < lhs.source().dim(); ++j)
    b.record([&] { return lhs.source().label(j); }, lhs.column(j), rhs.column(j));
  return b.done(asserted);
}

}  // namespace hopf
