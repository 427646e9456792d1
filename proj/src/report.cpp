#include "pascal/report.hpp"

namespace pascal {

bool IdentityReport::all_passed() const { return failure_count() == 0; }

std::size_t IdentityReport::failure_count() const {
  std::size_t failures = 0;
  for (const auto& c : checks) {
    if (!c.passed && !c.informational) ++failures;
  }
  return failures;
}

void IdentityReport::append(const IdentityReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

void print_report(std::ostream& out, const IdentityReport& report) {
  for (const auto& c : report.checks) {
    const char* status = c.passed ? "PASS" : (c.informational ? "NOTE" : "FAIL");
    out << status << "  " << c.name << "  N=" << c.dimension
        << "  max_defect=" << c.max_abs_defect.to_string();
    if (c.witness) {
      out << "  witness=(" << c.witness->row << "," << c.witness->col
          << ")=" << c.witness->value.to_string();
    }
    if (!c.detail.empty()) out << "  " << c.detail;
    out << '\n';
  }
}

}  // namespace pascal
