// Verification reports: per-k ledgers of the two sides of an identity,
// plus the summary shape used by exhaustive sweeps.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "chromix/rational.hpp"

namespace chromix {

struct ReportRow {
  long k;
  Rational lhs;
  Rational rhs;
  bool pass;
};

/// One verified identity on one subject. The verdict is the conjunction of
/// the row passes; rows are never empty.
struct VerificationReport {
  std::string subject;
  std::string theorem;
  std::vector<ReportRow> rows;
  bool verdict = true;

  void add_row(long k, Rational lhs, Rational rhs) {
    bool pass = lhs == rhs;
    verdict = verdict && pass;
    rows.push_back({k, std::move(lhs), std::move(rhs), pass});
  }
};

/// Outcome of a sweep over a generated universe: how many subjects were
/// generated, how many individual checks ran, how many passed, and the
/// failing reports verbatim.
struct SweepSummary {
  std::string theorem;
  int n = 0;
  int kmax = 0;
  std::size_t universe = 0;
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::vector<VerificationReport> failures;

  bool all_passed() const { return failures.empty(); }

  void record(const VerificationReport& report) {
    ++checked;
    if (report.verdict)
      ++passed;
    else
      failures.push_back(report);
  }
};

}  // namespace chromix
