#pragma once

// Property suites over fixed-seed samples. Output is deterministic JSON with no
// timings, so two runs can be compared byte for byte.

#include <optional>
#include <string>
#include <vector>

#include "tbs/json_io.hpp"

namespace tbs {

struct SelftestOptions {
  std::optional<std::string> suite;  // all suites when empty
  std::optional<std::int64_t> q;     // malleability: only this q (default 3 and 5)
  std::uint64_t seed = 20240917;
};

const std::vector<std::string>& selftest_suites();
// {"ok": bool, "suites": [{"name", "ok", "checks": [{"name", "ok", "cases", "counterexamples"}]}]}
Json run_selftest(const SelftestOptions& options);
// Flow checks on one triplet; throws Unsupported unless |H| is a perfect square.
Json malleability_report(const Triplet& t, std::uint64_t seed = 20240917);

}  // namespace tbs
