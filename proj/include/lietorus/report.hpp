#ifndef LIETORUS_REPORT_HPP
#define LIETORUS_REPORT_HPP

#include <string>
#include <vector>

namespace lt {

struct CheckEntry {
  std::string name;
  bool pass = false;
  std::string witness;  // empty on pass; atom tuple + both sides on failure
};

/// Verification report: never aborts on first failure, entries are appended in
/// a deterministic order.
struct Report {
  std::vector<CheckEntry> checks;
  int window = 0;
  long atoms_checked = 0;

  void add(const std::string& name, bool pass, const std::string& witness = "") {
    checks.push_back({name, pass, pass ? std::string() : witness});
  }
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  std::string summary() const {
    std::string s;
    for (const auto& c : checks) {
      s += (c.pass ? "[pass] " : "[FAIL] ") + c.name;
      if (!c.pass && !c.witness.empty()) s += "  :: " + c.witness;
      s += "\n";
    }
    return s;
  }
};

}  // namespace lt

#endif
