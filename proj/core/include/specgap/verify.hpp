#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace specgap::verify {

enum class Status { Pass, Fail, Skip };

struct CheckResult {
  std::string name;
  Status status = Status::Fail;
  std::string detail;
  double seconds = 0.0;
};

struct Options {
  std::vector<int> hadamard_ks = {1, 2, 4, 8};
  int threads = 8;  // thread count compared against 1 in the determinism check
};

/// Known suites: p4, hadamard, uniqueness, blowup, interlacing, tables,
/// families, loops-vs-simple, upper-bounds, codec, parallel, all.
/// Every check is deterministic: random samples use fixed seeds.
std::vector<CheckResult> run_suite(std::string_view suite, const Options& opts = {});

std::vector<std::string> suite_names();

/// True iff no result failed (skips are fine).
bool all_passed(const std::vector<CheckResult>& results);

std::string format_result(const CheckResult& r);

}  // namespace specgap::verify
