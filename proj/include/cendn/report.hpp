#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace cendn {

/// One evaluated identity instance.
struct IdentityCheck {
  std::string tag;    // which identity, e.g. "assoc-left"
  std::string label;  // instance parameters, e.g. "n=2,m=1"
  bool passed = false;
};

struct CheckReport {
  std::vector<IdentityCheck> checks;

  void add(std::string tag, std::string label, bool passed) {
    checks.push_back({std::move(tag), std::move(label), passed});
  }
  void merge(const CheckReport& o) {
    checks.insert(checks.end(), o.checks.begin(), o.checks.end());
  }
  std::size_t failures() const {
    std::size_t f = 0;
    for (const auto& c : checks)
      if (!c.passed) ++f;
    return f;
  }
  bool all_passed() const { return failures() == 0; }
  bool any_failed(const std::string& tag) const {
    for (const auto& c : checks)
      if (c.tag == tag && !c.passed) return true;
    return false;
  }
};

}  // namespace cendn
