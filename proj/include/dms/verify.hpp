#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dms/model.hpp"

namespace dms::verify {

// One named comparison: |observed - expected| <= tolerance. Exact checks use
// tolerance 0 (the comparison already ran in rational arithmetic); checks
// flagged statistical have their tolerance multiplied by the runner's
// tolerance scale. `provenance` names the closed-form result being checked.
struct Check {
  int criterion = 0;
  std::string name;
  std::string provenance;
  double expected = 0.0;
  double observed = 0.0;
  double tolerance = 0.0;
  bool statistical = false;
  bool pass = false;
};

// Wall-clock budget for one criterion group; never scaled.
struct CriterionTiming {
  int criterion = 0;
  double seconds = 0.0;
  double budget_seconds = 0.0;
  bool pass = false;
};

struct VerifyReport {
  std::vector<Check> checks;
  std::vector<CriterionTiming> timings;

  bool all_pass() const;
  int failed_count() const;
};

// Runs the acceptance suite. Statistical checks use the fixed seeds declared
// in the implementation; `only` restricts to the criteria touching one model.
VerifyReport run_acceptance(double tolerance_scale = 1.0,
                            std::optional<Model> only = std::nullopt);

// One line per criterion, with per-check detail lines when `per_check`.
void print_report(const VerifyReport& report, std::ostream& out, bool per_check = true);

}  // namespace dms::verify
