#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace strata {

struct AcceptanceOptions {
  std::uint64_t seed = 20240809;
  std::string config_dir;  // directory holding the shipped configs/fixtures
};

struct AcceptanceResult {
  struct Criterion {
    int number = 0;
    std::string title;
    bool pass = false;
    std::string detail;
  };
  std::vector<Criterion> criteria;
  bool all_pass = true;
};

// Runs the full verification suite at desk scale; every tolerance is exact
// rational equality.  Deterministic for a fixed (seed, config_dir).
AcceptanceResult run_acceptance(const AcceptanceOptions& options);

// One pass/fail line per criterion plus a summary line.
std::string acceptance_report(const AcceptanceResult& result);

}  // namespace strata
