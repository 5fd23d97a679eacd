#pragma once

#include <string>
#include <vector>

namespace nehari {

enum class CheckStatus { Pass, Fail, NotApplicable };

inline const char* toString(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotApplicable: return "not-applicable";
  }
  return "unknown";
}

struct AuditCheck {
  std::string name;
  CheckStatus status = CheckStatus::NotApplicable;
  std::string details;

  bool passed() const { return status == CheckStatus::Pass; }
};

inline CheckStatus statusOf(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }

inline const AuditCheck* findCheck(const std::vector<AuditCheck>& checks, const std::string& name) {
  for (const AuditCheck& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace nehari
