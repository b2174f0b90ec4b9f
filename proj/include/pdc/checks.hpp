#pragma once

#include <functional>
#include <string>
#include <vector>

namespace pdc {

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::vector<std::string> failures;
};

struct Check {
  int id;
  std::string name;
  std::function<CheckResult()> run;
};

/// The nine acceptance criteria, in id order.
std::vector<Check> acceptance_checks();

/// Runs every check, optionally on separate threads; results sorted by id.
std::vector<CheckResult> run_checks(const std::vector<Check>& checks, bool parallel);

}  // namespace pdc
