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

#include <doctest.h>

#include <memory>

#include "generator.hpp"
#include "mealy.hpp"

using namespace ltltest;

namespace {

SpecAutomaton automaton_for(const char* spec_text) {
  return build_spec_automaton(parse_spec(spec_text));
}

std::shared_ptr<const MealyMachine> machine_of(const char* text) {
  return std::make_shared<const MealyMachine>(MealyMachine::parse(text));
}

const char* kEchoSpec = ".inputs i0\n.outputs o0\n.req G (i0 <-> o0)\n";

const char* kEchoMachine =
    ".inputs i0\n"
    ".outputs o0\n"
    ".init 0\n"
    "0 | i0=0 -> 0 | o0=0\n"
    "0 | i0=1 -> 0 | o0=1\n";

const char* kSilentMachine =
    ".inputs i0\n"
    ".outputs o0\n"
    ".init 0\n"
    "0 | i0=0 -> 0 | o0=0\n"
    "0 | i0=1 -> 0 | o0=0\n";

// Holds the output high one extra step after a request, so that sequences
// of requests exercise several states.
const char* kStickyMachine =
    ".inputs i0\n"
    ".outputs o0\n"
    ".init 0\n"
    "0 | i0=0 -> 0 | o0=0\n"
    "0 | i0=1 -> 1 | o0=1\n"
    "1 | i0=0 -> 0 | o0=1\n"
    "1 | i0=1 -> 1 | o0=1\n";

}  // namespace

TEST_CASE("gdfs covers every discovered edge on a conformant system") {
  SpecAutomaton sa = automaton_for(kEchoSpec);
  MealySession env(machine_of(kEchoMachine));
  SuiteRun run = gdfs(sa, {1, 100, 0}, env, Deadline::never(), true);

  CHECK_FALSE(run.killed);
  CHECK_FALSE(run.budget_expired);
  CHECK_FALSE(run.aborted);
  CHECK(run.tests.size() >= 1);
  for (const TestRecord& t : run.tests) {
    CHECK(t.outcome == TestOutcome::Pass);
    CHECK(t.verdict->kind == VerdictKind::AcceptanceReached);
  }
  for (std::int64_t count : run.visit_counts) CHECK(count != 0);
}

TEST_CASE("gdfs kills a machine that never answers") {
  SpecAutomaton sa = automaton_for(kEchoSpec);
  MealySession env(machine_of(kSilentMachine));
  SuiteRun run = gdfs(sa, {1, 100, 0}, env, Deadline::never(), true);

  REQUIRE(run.killed);
  const TestRecord& failing = run.tests.back();
  CHECK(failing.outcome == TestOutcome::Fail);
  CHECK(failing.verdict->kind == VerdictKind::PrefixViolation);
  // The violation surfaces at the first step driving i0 high.
  const Trace& t = failing.trace;
  CHECK(t.steps.back().get(0));
  for (std::size_t i = 0; i + 1 < t.size(); ++i)
    CHECK_FALSE(t.steps[i].get(0));
}

TEST_CASE("liveness violations surface at the length cap") {
  SpecAutomaton sa = automaton_for(".inputs i0\n.outputs o0\n.req F o0\n");
  MealySession env(machine_of(kSilentMachine));
  SuiteRun run = gdfs(sa, {1, 100, 0}, env, Deadline::never(), true);

  REQUIRE(run.killed);
  const TestRecord& failing = run.tests.back();
  CHECK(failing.trace.size() == 100);
  CHECK(failing.verdict->kind == VerdictKind::KmaxFltlFail);
}

TEST_CASE("trace lengths respect the configured bounds") {
  SpecAutomaton sa = automaton_for(
      ".inputs i0\n.outputs o0\n.req G (i0 -> F o0)\n.req G (i0 -> o0) | "
      "true\n");
  MealySession env(machine_of(kStickyMachine));
  for (std::uint32_t kmin : {1u, 3u, 5u}) {
    SuiteRun run = gdfs(sa, {kmin, 20, 0}, env, Deadline::never(), true);
    for (const TestRecord& t : run.tests) {
      CHECK(t.trace.size() >= 1);
      CHECK(t.trace.size() <= 20);
      if (t.verdict && t.verdict->kind == VerdictKind::AcceptanceReached)
        CHECK(t.trace.size() >= kmin);
    }
  }
}

TEST_CASE("gdfs is deterministic for a fixed configuration") {
  SpecAutomaton sa = automaton_for(kEchoSpec);
  auto machine = machine_of(kStickyMachine);
  MealySession env1(machine), env2(machine);
  SuiteRun a = gdfs(sa, {2, 50, 7}, env1, Deadline::never(), true);
  SuiteRun b = gdfs(sa, {2, 50, 7}, env2, Deadline::never(), true);
  REQUIRE(a.tests.size() == b.tests.size());
  for (std::size_t i = 0; i < a.tests.size(); ++i) {
    CHECK(a.tests[i].trace.steps == b.tests[i].trace.steps);
    CHECK(a.tests[i].chosen == b.tests[i].chosen);
    CHECK(a.tests[i].outcome == b.tests[i].outcome);
  }
}

TEST_CASE("edge selection order: count, then distance, then degree, then id") {
  // Two-state chain: q0 --a--> q1 --a--> q1(accepting). Distances differ.
  auto factory = std::make_shared<FormulaFactory>();
  auto ap = std::make_shared<VarTable>();
  ap->add("i0");
  ap->add("o0");
  Nba nba(factory, ap);
  StateId q0 = nba.add_state();
  StateId q1 = nba.add_state();
  nba.set_init(q0);
  nba.set_accepting(q1);
  FormulaId i0 = factory->atom("i0");
  nba.add_edge(q0, factory->not_(i0), q0);  // edge 0, stays at distance 1
  nba.add_edge(q0, i0, q1);                 // edge 1, reaches acceptance
  nba.add_edge(q1, factory->make_true(), q1);

  Spec spec;
  spec.factory = factory;
  spec.ap = ap;
  spec.num_inputs = 1;
  spec.requirements = {factory->make_true()};
  spec.conjunction = factory->make_true();

  SpecAutomaton sa{spec, std::move(nba), {}, {}, {}};
  sa.expansion = expand_edges(sa.nba, 1);
  sa.distance = distance_to_acceptance(sa.nba);
  REQUIRE(sa.expansion.edges.size() == 3);

  std::vector<std::int64_t> counts = {0, 0, 0};
  // Equal counts: the edge into the accepting state wins on distance.
  CHECK(select_next_edge({0, 1}, counts, sa) == 1);
  // Fewer visits win regardless of distance.
  counts = {0, 3, 0};
  CHECK(select_next_edge({0, 1}, counts, sa) == 0);
  // Full tie (same count, distance, degree): lowest id.
  counts = {2, 2, 2};
  CHECK(select_next_edge({0}, counts, sa) == 0);
  CHECK_THROWS_AS(select_next_edge({}, counts, sa), Error);
}

TEST_CASE("visit counters track exactly the input-matching edges") {
  SpecAutomaton sa = automaton_for(kEchoSpec);
  MealySession env(machine_of(kStickyMachine));
  SuiteRun run = gdfs(sa, {3, 50, 0}, env, Deadline::never(), true);

  // Selecting an input increments every discovered edge feeding that input
  // from the current states, so each final counter equals the number of
  // steps that offered its input while its source state was possible.
  REQUIRE_FALSE(run.tests.empty());
  std::vector<std::int64_t> expected(sa.expansion.edges.size(), -1);
  for (std::uint32_t e : sa.expansion.out[sa.nba.init()]) expected[e] = 0;
  for (const TestRecord& test : run.tests) {
    StateSet current{sa.nba.init()};
    for (std::size_t i = 0; i < test.trace.size(); ++i) {
      for (StateId q : current)
        for (std::uint32_t e : sa.expansion.out[q])
          if (expected[e] < 0) expected[e] = 0;
      const Assignment& input = sa.expansion.edges[test.chosen[i]].input;
      for (StateId q : current)
        for (std::uint32_t e : sa.expansion.out[q])
          if (sa.expansion.edges[e].input == input) ++expected[e];
      current = step_states(sa.nba, current, test.trace.steps[i]);
    }
  }
  CHECK(run.visit_counts == expected);
}

TEST_CASE("baselines execute nothing when there is no coverage target") {
  SpecAutomaton sa = automaton_for(".inputs i0\n.outputs o0\n.req F o0\n");
  MonitorContext mc = build_monitor_context(sa.nba);
  CHECK(mc.targets.empty());

  MealySession env(machine_of(kSilentMachine));
  for (BaselineKind kind :
       {BaselineKind::RandomWalk, BaselineKind::GuidedWalk}) {
    SuiteRun run = run_baseline(kind, sa, mc, {1, 100, 0}, env,
                                Deadline::never(), true);
    CHECK(run.tests.empty());
    CHECK_FALSE(run.killed);
  }
}

TEST_CASE("baselines cover reachable targets and detect safety faults") {
  SpecAutomaton sa =
      automaton_for(".inputs i0\n.outputs o0\n.req G (i0 -> o0)\n");
  MonitorContext mc = build_monitor_context(sa.nba);
  CHECK_FALSE(mc.targets.empty());

  SUBCASE("conformant machine passes and the campaign terminates") {
    // Answers requests and spontaneously raises the output once, so every
    // monitor entry (00, 01, 11) is reachable.
    auto machine = machine_of(
        ".inputs i0\n.outputs o0\n.init 0\n"
        "0 | i0=0 -> 1 | o0=0\n"
        "0 | i0=1 -> 1 | o0=1\n"
        "1 | i0=0 -> 0 | o0=1\n"
        "1 | i0=1 -> 0 | o0=1\n");
    for (BaselineKind kind :
         {BaselineKind::RandomWalk, BaselineKind::GuidedWalk}) {
      MealySession env(machine);
      SuiteRun run = run_baseline(kind, sa, mc, {1, 100, 1}, env,
                                  Deadline::never(), true);
      CHECK_FALSE(run.killed);
      CHECK_FALSE(run.tests.empty());
      for (const TestRecord& t : run.tests)
        CHECK(t.outcome == TestOutcome::Pass);
    }
  }

  SUBCASE("dropping the output kills via a dead monitor") {
    MealySession env(machine_of(kSilentMachine));
    SuiteRun run = run_baseline(BaselineKind::GuidedWalk, sa, mc, {1, 100, 1},
                                env, Deadline::never(), true);
    REQUIRE(run.killed);
    CHECK(run.tests.back().verdict->kind == VerdictKind::PrefixViolation);
  }
}

TEST_CASE("random walks are reproducible from the seed") {
  SpecAutomaton sa =
      automaton_for(".inputs i0\n.outputs o0\n.req G (i0 -> o0)\n");
  MonitorContext mc = build_monitor_context(sa.nba);
  auto machine = machine_of(kStickyMachine);
  for (std::uint64_t seed : {1ull, 99ull}) {
    MealySession env1(machine), env2(machine);
    SuiteRun a = run_baseline(BaselineKind::RandomWalk, sa, mc,
                              {1, 100, seed}, env1, Deadline::never(), false);
    SuiteRun b = run_baseline(BaselineKind::RandomWalk, sa, mc,
                              {1, 100, seed}, env2, Deadline::never(), false);
    REQUIRE(a.tests.size() == b.tests.size());
    for (std::size_t i = 0; i < a.tests.size(); ++i)
      CHECK(a.tests[i].trace.steps == b.tests[i].trace.steps);
  }
}

TEST_CASE("configuration bounds are validated") {
  GdfsConfig zero_kmin{0, 10, 0};
  CHECK_THROWS_AS(zero_kmin.validate(), Error);
  GdfsConfig equal_bounds{10, 10, 0};
  CHECK_THROWS_AS(equal_bounds.validate(), Error);
  GdfsConfig ok{1, 2, 0};
  ok.validate();
}
