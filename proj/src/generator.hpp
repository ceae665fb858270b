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
// Test-input generation by walking the specification automaton: a guided
// depth-first search steered by per-edge visit counts, plus random-walk and
// guided-walk baselines driven by proposition coverage on the monitor.

#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "expand.hpp"
#include "monitor.hpp"
#include "nba.hpp"
#include "oracle.hpp"
#include "parse.hpp"
#include "rng.hpp"
#include "sut.hpp"
#include "translate.hpp"

namespace ltltest {

struct GdfsConfig {
  std::uint32_t kmin = 1;   // minimum trace length before an acceptance stop
  std::uint32_t kmax = 100; // maximum trace length
  std::uint64_t seed = 0;   // randomized tie-breaks in the baselines

  void validate() const;  // requires 1 <= kmin < kmax
};

/// Wall-clock budget; campaigns check it between steps and tests.
class Deadline {
 public:
  static Deadline never() { return Deadline{}; }
  static Deadline in_seconds(double secs) {
    Deadline d;
    d.at_ = std::chrono::steady_clock::now() +
            std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                std::chrono::duration<double>(secs));
    return d;
  }

  bool expired() const {
    return at_ && std::chrono::steady_clock::now() >= *at_;
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> at_;
};

/// Everything derived from a spec that campaigns share read-only: the
/// pruned automaton, its expanded input menus and the acceptance distances.
struct SpecAutomaton {
  Spec spec;
  Nba nba;  // pruned
  Expansion expansion;
  std::vector<std::uint32_t> distance;  // to acceptance, on the pruned NBA
  std::vector<Assignment> all_inputs;   // every assignment over the inputs
};

SpecAutomaton build_spec_automaton(const Spec& spec,
                                   const TranslateOptions& options = {});

/// Monitor side, needed by the baselines only.
struct MonitorContext {
  Monitor monitor;
  std::vector<CoverageTarget> targets;
  // Coverage targets of one monitor entry occupy a contiguous target range.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> entry_targets;
};

MonitorContext build_monitor_context(const Nba& pruned_nba,
                                     const MonitorOptions& options = {});

enum class TestOutcome : std::uint8_t { Pass, Fail, Error };

struct TestRecord {
  Trace trace;
  TestOutcome outcome = TestOutcome::Error;
  std::optional<Verdict> verdict;     // absent for Error outcomes
  std::vector<std::uint32_t> chosen;  // expanded-edge or monitor-entry ids
  std::string error;
};

struct SuiteRun {
  std::vector<TestRecord> tests;
  bool killed = false;
  bool budget_expired = false;
  bool aborted = false;  // SUT failure or unrealizable frontier
  std::uint64_t total_steps = 0;
  std::uint32_t disagreements = 0;
  // Final per-expanded-edge visit counters (GDFS only; -1 = undiscovered).
  std::vector<std::int64_t> visit_counts;
};

/// Guided depth-first search. Runs tests until every discovered expanded
/// edge has been visited at least once, a failure stops the campaign (when
/// `stop_on_fail`), or the budget expires.
SuiteRun gdfs(const SpecAutomaton& sa, const GdfsConfig& cfg, SutSession& env,
              const Deadline& deadline, bool stop_on_fail);

/// Minimal visit count wins; ties prefer the smaller distance from the
/// target state to acceptance, then the larger target out-degree, then the
/// smallest edge id. `frontier` must be nonempty.
std::uint32_t select_next_edge(const std::vector<std::uint32_t>& frontier,
                               const std::vector<std::int64_t>& visit_count,
                               const SpecAutomaton& sa);

enum class BaselineKind : std::uint8_t { RandomWalk, GuidedWalk };

/// Coverage-driven monitor walk. A test ends when it covers a new target,
/// dies on the monitor, or reaches kmax; the campaign ends when all targets
/// are covered, coverage saturates, a failure stops it, or the budget
/// expires.
SuiteRun run_baseline(BaselineKind kind, const SpecAutomaton& sa,
                      const MonitorContext& mc, const GdfsConfig& cfg,
                      SutSession& env, const Deadline& deadline,
                      bool stop_on_fail);

}  // namespace ltltest
