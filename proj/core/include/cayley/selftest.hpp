#pragma once

// The acceptance suite: every headline number and property of the library,
// checked exactly against known values. Shared by the test binary and the
// command-line `selftest`.

#include <cstdint>
#include <string>
#include <vector>

namespace cayley {

struct SelftestOptions {
  std::uint64_t seed = 1;
  int samples = 1000;         // random draws for the octonion checks
  std::size_t word_cap = 100;  // reduced words compared per node
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;  // what was compared, or the first mismatch
  double seconds = 0;
};

/// Runs all criteria in order; an exception inside a criterion fails only
/// that criterion.
std::vector<CriterionResult> run_selftest(const SelftestOptions& options = {});

/// "PASS  3  title: detail" / "FAIL ...".
std::string format_result(const CriterionResult& r);

}  // namespace cayley
