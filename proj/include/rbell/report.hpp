#pragma once

#include "rbell/exact.hpp"

#include <chrono>
#include <cstddef>
#include <string>
#include <vector>

namespace rbell {

struct Failure {
  std::string inputs;
  Int lhs;
  Int rhs;
};

/// Evidence from evaluating one identity (or one pattern) over a range.
/// Failures are recorded in sweep order, so the first one is the smallest
/// counterexample in that order. Only the first kMaxStoredFailures are
/// kept; failure_count is exact.
struct IdentityReport {
  static constexpr std::size_t kMaxStoredFailures = 64;

  std::string id;
  std::string range;
  std::size_t cases = 0;
  std::size_t failure_count = 0;
  std::vector<Failure> failures;
  /// Free-form findings: summaries of unasserted classes, scan rows.
  std::vector<std::string> notes;
  /// Conjecture scans: failures are findings and never fail a run.
  bool report_only = false;
  std::chrono::nanoseconds elapsed{0};

  IdentityReport() = default;
  IdentityReport(std::string id_, std::string range_)
      : id(std::move(id_)), range(std::move(range_)) {}

  bool pass() const { return failure_count == 0; }

  /// Counts one case; records a failure when lhs != rhs.
  bool expect_equal(const std::string& inputs, const Int& lhs, const Int& rhs) {
    ++cases;
    if (lhs == rhs) return true;
    fail(inputs, lhs, rhs);
    return false;
  }

  void fail(const std::string& inputs, const Int& lhs, const Int& rhs) {
    ++failure_count;
    if (failures.size() < kMaxStoredFailures) failures.push_back({inputs, lhs, rhs});
  }

  /// Folds another report's cases, failures and notes into this one.
  void absorb(const IdentityReport& other) {
    cases += other.cases;
    failure_count += other.failure_count;
    for (const auto& f : other.failures)
      if (failures.size() < kMaxStoredFailures) failures.push_back(f);
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
    elapsed += other.elapsed;
  }
};

/// Sets report.elapsed on destruction.
class ReportTimer {
 public:
  explicit ReportTimer(IdentityReport& report)
      : report_(report), start_(std::chrono::steady_clock::now()) {}
  ~ReportTimer() {
    report_.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
        std::chrono::steady_clock::now() - start_);
  }
  ReportTimer(const ReportTimer&) = delete;
  ReportTimer& operator=(const ReportTimer&) = delete;

 private:
  IdentityReport& report_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace rbell
