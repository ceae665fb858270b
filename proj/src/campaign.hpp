// Copyright 2026 The ltltest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Campaign orchestration: build the automaton once, run the configured
// algorithm against every SUT with a shared wall-clock budget, collect
// plot-ready records.

#pragma once

#include <array>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "generator.hpp"

namespace ltltest {

enum class Algorithm : std::uint8_t { Gdfs, RandomWalk, GuidedWalk };

const char* algorithm_name(Algorithm a);

struct CampaignConfig {
  Algorithm algorithm = Algorithm::Gdfs;
  std::uint32_t kmin = 1;
  std::uint32_t kmax = 100;
  double budget_secs = 600.0;  // per run, automaton processing included
  bool early_stop = true;      // stop a SUT's campaign at the first failure
  std::uint64_t seed = 0;
  std::uint32_t workers = 1;
  std::uint32_t repeats = 1;  // runs r use seed + r
  bool keep_traces = false;
  TranslateOptions translate;
  MonitorOptions monitor;
};

struct SutFactory {
  std::string id;
  std::function<std::unique_ptr<SutSession>()> make;
};

struct TestSummary {
  std::uint32_t steps = 0;
  TestOutcome outcome = TestOutcome::Error;
  VerdictKind kind = VerdictKind::KmaxFltlFail;
  bool disagreement = false;
  std::string trace;  // rendered only when keep_traces is set
};

struct SutRecord {
  std::string sut_id;
  bool killed = false;
  std::uint32_t tests_run = 0;
  std::uint64_t total_steps = 0;
  std::int64_t first_failing_test = -1;
  // Counts per verdict kind, indexed like VerdictKind.
  std::array<std::uint32_t, 4> kind_counts{};
  std::uint32_t errors = 0;
  std::uint32_t disagreements = 0;
  bool timeout = false;
  double wall_secs = 0;  // console diagnostics only, never serialized
  std::vector<TestSummary> tests;
};

struct Aggregates {
  std::uint32_t kills = 0;
  double avg_steps = 0;  // mean over SUTs of per-SUT total steps
  std::uint32_t timeouts = 0;
  std::uint32_t suts = 0;
  std::uint64_t total_tests = 0;
};

struct RunResult {
  std::uint64_t seed = 0;
  std::vector<SutRecord> records;
  Aggregates aggregates;
};

struct CampaignReport {
  std::vector<RunResult> runs;
  double median_kills = 0;
  double median_avg_steps = 0;
};

/// Builds the automaton (and monitor, for the baselines) once, then runs
/// the configured algorithm against every SUT. SUTs still pending when the
/// budget expires are recorded as timeouts, not kills. With one worker and
/// a budget that is not hit, the report is deterministic given the seed.
CampaignReport run_campaign(const Spec& spec,
                            const std::vector<SutFactory>& suts,
                            const CampaignConfig& config);

}  // namespace ltltest
