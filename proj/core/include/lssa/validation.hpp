#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace lssa {

enum class CheckKind {
  Near,    // |computed - expected| <= tolerance
  AtMost,  // computed <= tolerance
  Flag,    // boolean condition, computed is 1 or 0
  Report,  // known model-experiment gap, printed but never fails
};

struct ValidationCheck {
  std::string label;
  CheckKind kind = CheckKind::Near;
  double expected = 0.0;
  double computed = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string note;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<ValidationCheck> checks;

  bool passed() const;
};

/// Runs the end-to-end checks against the embedded reference data. Pure
/// and deterministic.
std::vector<CriterionResult> run_validation();

/// Fixed-format report, one block per criterion and a PASS/FAIL line each.
void write_validation_report(std::ostream& out, std::span<const CriterionResult> results);

bool all_passed(std::span<const CriterionResult> results);

} // namespace lssa
