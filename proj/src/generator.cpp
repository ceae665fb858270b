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

#include "generator.hpp"

#include <algorithm>

#include "error.hpp"

namespace ltltest {

namespace {

// Baseline campaigns stop after this many consecutive tests without new
// coverage; remaining targets are treated as unreachable for this SUT.
constexpr std::uint32_t kSaturationStreak = 50;

}  // namespace

void GdfsConfig::validate() const {
  if (kmin < 1 || kmin >= kmax)
    throw Error("invalid trace length bounds: need 1 <= kmin < kmax");
}

SpecAutomaton build_spec_automaton(const Spec& spec,
                                   const TranslateOptions& options) {
  SpecAutomaton sa{spec,
                   prune_empty(ltl_to_nba(spec.factory, spec.conjunction,
                                          spec.ap, options)),
                   {},
                   {},
                   {}};
  sa.expansion = expand_edges(sa.nba, spec.num_inputs);
  sa.distance = distance_to_acceptance(sa.nba);
  if (spec.num_inputs > 16)
    throw LimitError("input alphabet enumeration beyond 16 variables");
  for (std::size_t w = 0; w < (1ull << spec.num_inputs); ++w) {
    Assignment input(spec.num_inputs, false);
    for (std::size_t j = 0; j < spec.num_inputs; ++j)
      input.set(static_cast<VarId>(j), (w >> j) & 1);
    sa.all_inputs.push_back(std::move(input));
  }
  return sa;
}

MonitorContext build_monitor_context(const Nba& pruned_nba,
                                     const MonitorOptions& options) {
  MonitorContext mc{build_monitor(pruned_nba, options), {}, {}};
  mc.targets = apc_targets(mc.monitor);
  mc.entry_targets.assign(mc.monitor.num_entries(), {0, 0});
  for (std::uint32_t t = 0; t < mc.targets.size(); ++t) {
    auto& range = mc.entry_targets[mc.targets[t].entry_id];
    if (range.second == 0) range.first = t;
    ++range.second;
  }
  return mc;
}

std::uint32_t select_next_edge(const std::vector<std::uint32_t>& frontier,
                               const std::vector<std::int64_t>& visit_count,
                               const SpecAutomaton& sa) {
  if (frontier.empty()) throw Error("no edge to select: empty frontier");
  auto rank = [&](std::uint32_t e) {
    const ExpandedEdge& edge = sa.expansion.edges[e];
    return std::make_tuple(visit_count[e], sa.distance[edge.dst],
                           -static_cast<std::int64_t>(
                               sa.expansion.out[edge.dst].size()),
                           e);
  };
  std::uint32_t best = frontier[0];
  for (std::size_t i = 1; i < frontier.size(); ++i)
    if (rank(frontier[i]) < rank(best)) best = frontier[i];
  return best;
}

SuiteRun gdfs(const SpecAutomaton& sa, const GdfsConfig& cfg, SutSession& env,
              const Deadline& deadline, bool stop_on_fail) {
  cfg.validate();
  SuiteRun run;

  // visit_count[e] < 0 means the edge has not been discovered yet;
  // discovery happens when its source state first becomes possible.
  std::vector<std::int64_t> visit_count(sa.expansion.edges.size(), -1);
  std::size_t zero_pending = 0;
  auto discover = [&](StateId q) {
    for (std::uint32_t e : sa.expansion.out[q]) {
      if (visit_count[e] < 0) {
        visit_count[e] = 0;
        ++zero_pending;
      }
    }
  };
  discover(sa.nba.init());

  while (zero_pending > 0) {
    if (deadline.expired()) {
      run.budget_expired = true;
      break;
    }

    TestRecord record;
    StateSet current{sa.nba.init()};
    bool reached_acceptance = false;

    try {
      env.reset();
    } catch (const SutError& e) {
      record.outcome = TestOutcome::Error;
      record.error = e.what();
      run.tests.push_back(std::move(record));
      run.aborted = true;
      break;
    }

    bool abort_campaign = false;
    while (valid_prefix(current) && record.trace.size() < cfg.kmax) {
      if (deadline.expired()) {
        // The partial trace is dropped: a test cut off by the budget was
        // not evaluated and must not count as executed.
        run.budget_expired = true;
        break;
      }
      for (StateId q : current) discover(q);

      std::vector<std::uint32_t> frontier;
      for (StateId q : current)
        frontier.insert(frontier.end(), sa.expansion.out[q].begin(),
                        sa.expansion.out[q].end());
      if (frontier.empty()) {
        // No outgoing edge: unrealizable from here. Cannot happen on a
        // pruned automaton of a satisfiable formula.
        record.outcome = TestOutcome::Error;
        record.error = "state with no outgoing edges";
        abort_campaign = true;
        break;
      }

      std::uint32_t choice = select_next_edge(frontier, visit_count, sa);
      const Assignment& input = sa.expansion.edges[choice].input;

      // All discovered edges out of the current states that would feed the
      // same input count as visited: they differ only in expected outputs.
      for (StateId q : current)
        for (std::uint32_t e : sa.expansion.out[q])
          if (sa.expansion.edges[e].input == input)
            if (visit_count[e]++ == 0) --zero_pending;

      Assignment output;
      try {
        output = env.step(input);
      } catch (const SutError& e) {
        record.outcome = TestOutcome::Error;
        record.error = e.what();
        abort_campaign = true;
        break;
      }
      if (output.size() != sa.spec.num_outputs()) {
        record.outcome = TestOutcome::Error;
        record.error = "SUT produced an output of wrong arity";
        abort_campaign = true;
        break;
      }

      record.chosen.push_back(choice);
      record.trace.steps.push_back(concat(input, output));
      current = step_states(sa.nba, current, record.trace.steps.back());

      if (record.trace.size() >= cfg.kmin && sa.nba.any_accepting(current)) {
        reached_acceptance = true;
        break;
      }
    }

    if (record.outcome == TestOutcome::Error && abort_campaign) {
      run.total_steps += record.trace.size();
      run.tests.push_back(std::move(record));
      run.aborted = true;
      break;
    }
    if (run.budget_expired) break;

    Verdict verdict =
        evaluate(sa.spec, record.trace, sa.nba, current, reached_acceptance);
    record.outcome = verdict.pass ? TestOutcome::Pass : TestOutcome::Fail;
    if (verdict.disagreement) ++run.disagreements;
    record.verdict = verdict;
    run.total_steps += record.trace.size();
    bool fail = record.outcome == TestOutcome::Fail;
    run.tests.push_back(std::move(record));
    if (fail) {
      run.killed = true;
      if (stop_on_fail) break;
    }
  }
  run.visit_counts = std::move(visit_count);
  return run;
}

namespace {

// Inputs for which some monitor transition of `state` is enabled, i.e. some
// output completion keeps the monitor alive.
std::vector<std::uint32_t> enabled_inputs(const SpecAutomaton& sa,
                                          const Monitor& monitor,
                                          StateId state) {
  const Monitor::State& ms = monitor.state(state);
  std::vector<std::uint32_t> enabled;
  for (std::uint32_t w = 0; w < sa.all_inputs.size(); ++w) {
    const Assignment& input = sa.all_inputs[w];
    bool ok = false;
    for (const Monitor::Entry& entry : ms.entries) {
      bool consistent = true;
      for (std::size_t j = 0; j < ms.support.size() && consistent; ++j) {
        VarId v = ms.support[j];
        if (v < sa.spec.num_inputs &&
            input.get(v) != (((entry.bits >> j) & 1) != 0))
          consistent = false;
      }
      if (consistent) {
        ok = true;
        break;
      }
    }
    if (ok) enabled.push_back(w);
  }
  return enabled;
}

// Inputs that could traverse an entry with an uncovered target.
std::vector<std::uint32_t> guiding_inputs(const SpecAutomaton& sa,
                                          const MonitorContext& mc,
                                          const std::vector<bool>& covered,
                                          StateId state) {
  const Monitor::State& ms = mc.monitor.state(state);
  std::vector<std::uint32_t> guiding;
  for (std::uint32_t w = 0; w < sa.all_inputs.size(); ++w) {
    const Assignment& input = sa.all_inputs[w];
    bool found = false;
    for (std::size_t i = 0; i < ms.entries.size() && !found; ++i) {
      const Monitor::Entry& entry = ms.entries[i];
      bool consistent = true;
      for (std::size_t j = 0; j < ms.support.size() && consistent; ++j) {
        VarId v = ms.support[j];
        if (v < sa.spec.num_inputs &&
            input.get(v) != (((entry.bits >> j) & 1) != 0))
          consistent = false;
      }
      if (!consistent) continue;
      auto [first, count] = mc.entry_targets[ms.first_entry + i];
      for (std::uint32_t t = first; t < first + count; ++t)
        if (!covered[t]) {
          found = true;
          break;
        }
    }
    if (found) guiding.push_back(w);
  }
  return guiding;
}

}  // namespace

SuiteRun run_baseline(BaselineKind kind, const SpecAutomaton& sa,
                      const MonitorContext& mc, const GdfsConfig& cfg,
                      SutSession& env, const Deadline& deadline,
                      bool stop_on_fail) {
  cfg.validate();
  SuiteRun run;
  Rng rng(cfg.seed);

  std::vector<bool> covered(mc.targets.size(), false);
  std::size_t uncovered = mc.targets.size();
  std::uint32_t stale_tests = 0;

  while (uncovered > 0 && stale_tests < kSaturationStreak) {
    if (deadline.expired()) {
      run.budget_expired = true;
      break;
    }

    TestRecord record;
    StateSet current{sa.nba.init()};
    StateId monitor_state = mc.monitor.init();
    bool monitor_died = false;
    std::size_t new_covered = 0;

    try {
      env.reset();
    } catch (const SutError& e) {
      record.outcome = TestOutcome::Error;
      record.error = e.what();
      run.tests.push_back(std::move(record));
      run.aborted = true;
      break;
    }

    bool abort_campaign = false;
    while (record.trace.size() < cfg.kmax) {
      if (deadline.expired()) {
        run.budget_expired = true;
        break;
      }
      std::vector<std::uint32_t> enabled =
          enabled_inputs(sa, mc.monitor, monitor_state);

      std::vector<std::uint32_t> guiding;
      if (kind == BaselineKind::GuidedWalk)
        guiding = guiding_inputs(sa, mc, covered, monitor_state);
      const std::vector<std::uint32_t>* pool = nullptr;
      if (!guiding.empty()) pool = &guiding;
      else if (!enabled.empty()) pool = &enabled;
      std::uint32_t pick =
          pool ? (*pool)[rng.below(pool->size())]
               : static_cast<std::uint32_t>(rng.below(sa.all_inputs.size()));

      const Assignment& input = sa.all_inputs[pick];
      Assignment output;
      try {
        output = env.step(input);
      } catch (const SutError& e) {
        record.outcome = TestOutcome::Error;
        record.error = e.what();
        abort_campaign = true;
        break;
      }
      if (output.size() != sa.spec.num_outputs()) {
        record.outcome = TestOutcome::Error;
        record.error = "SUT produced an output of wrong arity";
        abort_campaign = true;
        break;
      }

      Assignment letter = concat(input, output);
      record.trace.steps.push_back(letter);
      current = step_states(sa.nba, current, letter);

      // A dead monitor means the prefix just became invalid; the state-set
      // fold above went empty at the same step.
      auto entry = mc.monitor.step_entry(monitor_state, letter);
      if (!entry) {
        monitor_died = true;
        break;
      }
      record.chosen.push_back(*entry);
      monitor_state = mc.monitor.entry(*entry).dst;
      auto [first, count] = mc.entry_targets[*entry];
      for (std::uint32_t t = first; t < first + count; ++t) {
        if (!covered[t]) {
          covered[t] = true;
          --uncovered;
          ++new_covered;
        }
      }
      if (new_covered > 0) break;  // objective reached, test complete
    }

    if (abort_campaign) {
      run.total_steps += record.trace.size();
      run.tests.push_back(std::move(record));
      run.aborted = true;
      break;
    }
    if (run.budget_expired) break;

    bool reached_acceptance = record.trace.size() >= cfg.kmin &&
                              sa.nba.any_accepting(current);
    Verdict verdict =
        evaluate(sa.spec, record.trace, sa.nba, current, reached_acceptance);
    // The baselines detect failures through the monitor only; that is what
    // makes them blind to liveness violations. The finite-trace verdict is
    // recorded alongside but does not decide the outcome: a truncated test
    // with pending liveness obligations is not a monitor failure.
    record.outcome = monitor_died ? TestOutcome::Fail : TestOutcome::Pass;
    if (verdict.disagreement) ++run.disagreements;
    record.verdict = verdict;
    run.total_steps += record.trace.size();
    bool fail = record.outcome == TestOutcome::Fail;
    run.tests.push_back(std::move(record));
    if (fail) {
      run.killed = true;
      if (stop_on_fail) break;
    }
    stale_tests = new_covered > 0 ? 0 : stale_tests + 1;
  }
  return run;
}

}  // namespace ltltest
