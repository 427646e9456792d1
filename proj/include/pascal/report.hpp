#pragma once

#include "pascal/big_rational.hpp"

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace pascal {

/// Location and value of the largest defect found by a failing check.
struct DefectWitness {
  std::size_t row = 0;
  std::size_t col = 0;
  BigRational value;
};

struct IdentityCheck {
  std::string name;
  std::size_t dimension = 0;
  bool passed = false;
  BigRational max_abs_defect;
  std::optional<DefectWitness> witness;
  std::string detail;
  // Informational checks record findings (e.g. a printed formula that is off by
  // a sign) and never make a report fail.
  bool informational = false;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;

  bool all_passed() const;
  std::size_t failure_count() const;
  void append(const IdentityReport& other);
  void add(IdentityCheck check) { checks.push_back(std::move(check)); }
};

/// One line per check: "PASS|FAIL|NOTE  name  N=..  defect=..  [witness]".
void print_report(std::ostream& out, const IdentityReport& report);

}  // namespace pascal
