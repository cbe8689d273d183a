// Copyright 2026 The af2 Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Runs every registered suite at its acceptance configuration and prints one
// PASS or FAIL line per criterion. The exit status is 0 only when all pass.

#include <cstddef>
#include <iomanip>
#include <iostream>

#include "af2/suites.hpp"

namespace {

constexpr double kSticksSeconds = 10.0;
constexpr std::size_t kShownFailures = 5;

}  // namespace

int main() {
  af2::RunConfig cfg;
  cfg.level_cap = af2::LevelCap();
  int failed = 0;
  for (const af2::SuiteInfo& s : af2::Suites()) {
    const af2::SuiteResult r = af2::RunSuite(s.name, cfg);
    bool ok = r.passed();
    std::string extra;
    if (s.criterion == 1 && r.wall_seconds >= kSticksSeconds) {
      ok = false;
      extra = ", over the time limit";
    }
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << s.criterion << " [" << s.name
              << "] " << s.summary << ": " << r.trials << " checks, " << r.failures.size()
              << " failures, " << std::fixed << std::setprecision(2) << r.wall_seconds << " s"
              << extra << "\n";
    for (std::size_t i = 0; i < r.failures.size() && i < kShownFailures; ++i) {
      const af2::Failure& f = r.failures[i];
      std::cout << "    seed " << f.seed << " " << f.inputs << ": expected " << f.expected
                << ", got " << f.actual << "\n";
    }
    if (r.failures.size() > kShownFailures)
      std::cout << "    ... " << r.failures.size() - kShownFailures << " more\n";
    for (const auto& [k, n] : r.tallies) std::cout << "    " << k << " = " << n << "\n";
    std::cout.flush();
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail")
            << "\n";
  return failed == 0 ? 0 : 1;
}
