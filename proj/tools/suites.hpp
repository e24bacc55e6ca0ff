#pragma once

// Named groups of checks for `rbell verify`. A suite expands into
// independent tasks; run_suites executes them on up to `jobs` threads and
// returns the reports in task order, so output does not depend on timing.

#include "rbell/report.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace rbell::cli {

struct VerifyOptions {
  std::optional<int> nm_max;
  std::optional<int> n_max;
  std::optional<int> m;
  unsigned jobs = 1;
};

using Task = std::function<IdentityReport()>;

struct Suite {
  std::string name;
  std::string summary;
  /// conjecture scans never affect the exit code
  bool conjecture = false;
  std::function<std::vector<Task>(const VerifyOptions&)> expand;
};

const std::vector<Suite>& suites();

/// Resolves a comma-separated selector; "all" selects every suite.
/// Throws std::invalid_argument on an unknown name.
std::vector<const Suite*> select_suites(const std::string& selector);

std::vector<IdentityReport> run_suites(const std::vector<const Suite*>& selected, const VerifyOptions& opt);

}  // namespace rbell::cli
