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


#include <cstdint>
#include <string>

#include <gtest/gtest.h>

#include "af2/suites.hpp"

namespace af2 {
namespace {

RunConfig Small(int trials) {
  RunConfig cfg;
  cfg.seed = 7;
  cfg.trials = trials;
  return cfg;
}

TEST(SuitesTest, UnknownSuite) {
  try {
    RunSuite("no-such-suite", RunConfig{});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnknownSuite);
  }
}

TEST(SuitesTest, RegistryIsInCriterionOrder) {
  int expected = 1;
  for (const SuiteInfo& s : Suites()) EXPECT_EQ(s.criterion, expected++) << s.name;
  EXPECT_EQ(expected, 13);
}

TEST(SuitesTest, TrialSeedsAreStable) {
  EXPECT_EQ(TrialSeed(1, 0), TrialSeed(1, 0));
  EXPECT_NE(TrialSeed(1, 0), TrialSeed(1, 1));
  EXPECT_NE(TrialSeed(1, 0), TrialSeed(2, 0));
}

TEST(SuitesTest, RandomPrimitive) {
  EXPECT_EQ(RandomPrimitive(3, 0).ToString(), "a");
  for (std::uint64_t s = 0; s < 50; ++s) {
    const Word w = RandomPrimitive(s, 12);
    EXPECT_TRUE(IsPrimitive(w).primitive) << w.ToString();
    EXPECT_EQ(w, RandomPrimitive(s, 12));
  }
}

TEST(SuitesTest, RunsAreDeterministic) {
  RunConfig one = Small(20);
  one.threads = 1;
  RunConfig three = one;
  three.threads = 3;
  const SuiteResult a = RunSuite("triple-conjugate", one);
  const SuiteResult b = RunSuite("triple-conjugate", three);
  EXPECT_EQ(a.trials, b.trials);
  EXPECT_EQ(a.tallies, b.tallies);
  EXPECT_EQ(a.failures.size(), b.failures.size());
}

TEST(SuitesTest, FastSuitesPassOnFewTrials) {
  for (const char* name : {"sticks", "basis-cross", "triple-conjugate", "common-neighbours",
                           "four-neighbours", "farey-labels", "amalgamation"}) {
    const SuiteResult r = RunSuite(name, Small(5));
    EXPECT_TRUE(r.passed()) << name << ": " << ToJson(r).dump();
    EXPECT_GT(r.trials, 0) << name;
  }
}

TEST(SuitesTest, ReportJson) {
  const SuiteResult r = RunSuite("sticks", Small(3));
  const Json j = ToJson(r);
  EXPECT_EQ(j["suite"], "sticks");
  EXPECT_EQ(j["passed"], true);
  EXPECT_EQ(j["trials"], r.trials);
  EXPECT_TRUE(j["failures"].is_array());
}

TEST(SuitesTest, Ext2GoldenReportsTheListingDifference) {
  const SuiteResult r = RunSuite("ext2-golden", RunConfig{});
  ASSERT_EQ(r.failures.size(), 2u);
  EXPECT_EQ(r.failures[0].inputs, "e_edges");
  EXPECT_EQ(r.failures[0].expected, "listed only {abb-Aba, AAB-Bab, ABB-baB}");
  EXPECT_EQ(r.failures[0].actual, "built only {abA-abb, AAB-baB, Aba-ABB}");
  EXPECT_EQ(r.failures[1].inputs, "canonical JSON bytes");
  EXPECT_EQ(r.tallies.at("vertices"), 22);
}

TEST(SuitesTest, PlantedDefectsAreRejected) {
  const auto defects = PlantedDefects();
  EXPECT_EQ(defects.size(), 7u);
  for (const PlantedDefect& d : defects)
    EXPECT_TRUE(CheckAxioms(d.structure, 4).Failed().count(d.axiom)) << d.description;
}

}  // namespace
}  // namespace af2
