#ifndef SCF_REPORT_HPP
#define SCF_REPORT_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace scf {

/// erratum: the statement as printed in the source is false, but the
/// corrected statement recorded in `detail` was verified.
enum class CheckStatus { passed, failed, erratum };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::passed: return "pass";
    case CheckStatus::failed: return "fail";
    case CheckStatus::erratum: return "erratum";
  }
  return "?";
}

struct Check {
  std::string name;
  std::string statement;
  CheckStatus status = CheckStatus::failed;
  std::string detail;
};

/// Ordered list of named pass/fail checks.
struct Report {
  std::string title;
  std::vector<Check> checks;

  void add(std::string name, std::string statement, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), std::move(statement), ok ? CheckStatus::passed : CheckStatus::failed,
                      std::move(detail)});
  }

  std::size_t count(CheckStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [s](const Check& c) { return c.status == s; }));
  }

  /// No check failed (errata are known misprints whose correction held).
  bool all_passed() const { return count(CheckStatus::failed) == 0; }

  const Check* find(const std::string& name) const {
    auto it = std::find_if(checks.begin(), checks.end(), [&](const Check& c) { return c.name == name; });
    return it == checks.end() ? nullptr : &*it;
  }

  void append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
};

using IdentityReport = Report;
using CaseReport = Report;
using TableReport = Report;
using BracketReport = Report;

}  // namespace scf

#endif  // SCF_REPORT_HPP
