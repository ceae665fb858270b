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

#include <json.hpp>

#include "campaign.hpp"
#include "conformance.hpp"
#include "mealy.hpp"
#include "report.hpp"

using namespace ltltest;

namespace {

const char* kEchoSpec = ".inputs i0\n.outputs o0\n.req G (i0 <-> o0)\n";

const char* kEchoMachine =
    ".inputs i0\n"
    ".outputs o0\n"
    ".init 0\n"
    "0 | i0=0 -> 1 | o0=0\n"
    "0 | i0=1 -> 1 | o0=1\n"
    "1 | i0=0 -> 0 | o0=0\n"
    "1 | i0=1 -> 0 | o0=1\n";

SutFactory factory_for(const std::string& id,
                       std::shared_ptr<const MealyMachine> machine) {
  return {id, [machine] { return std::make_unique<MealySession>(machine); }};
}

}  // namespace

TEST_CASE("campaign kills the faulty mutants of the minimal echo") {
  // One state, so every entry is reachable at depth one and every mutation
  // is an output flip. The conformance model check pins the ground truth.
  Spec spec = parse_spec(kEchoSpec);
  auto parent = std::make_shared<const MealyMachine>(MealyMachine::parse(
      ".inputs i0\n.outputs o0\n.init 0\n"
      "0 | i0=0 -> 0 | o0=0\n"
      "0 | i0=1 -> 0 | o0=1\n"));

  std::vector<SutFactory> suts{factory_for("parent", parent)};
  std::size_t faulty = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto [mutant, mutation] = mutate(*parent, seed);
    auto handle = std::make_shared<const MealyMachine>(std::move(mutant));
    if (!machine_conforms(spec, *handle)) ++faulty;
    suts.push_back(factory_for("mutant_" + std::to_string(seed), handle));
  }
  CHECK(faulty == 10);

  CampaignConfig config;
  config.kmin = 1;
  config.kmax = 100;
  config.seed = 42;
  CampaignReport report = run_campaign(spec, suts, config);

  REQUIRE(report.runs.size() == 1);
  const RunResult& run = report.runs[0];
  REQUIRE(run.records.size() == suts.size());
  CHECK_FALSE(run.records[0].killed);  // the parent machine passes

  std::size_t kills = 0;
  for (std::size_t i = 1; i < run.records.size(); ++i)
    if (run.records[i].killed) ++kills;
  CHECK(kills == faulty);
  CHECK(kills >= 9);
  CHECK(run.aggregates.kills == kills);
  CHECK(run.aggregates.suts == suts.size());
}

TEST_CASE("campaign never kills a conforming mutant") {
  // Two behaviorally identical states: retarget mutants stay correct and
  // must survive; flips hidden in the unreached deeper state may survive a
  // shallow walk, so only an upper bound holds for the kills.
  Spec spec = parse_spec(kEchoSpec);
  auto parent = std::make_shared<const MealyMachine>(
      MealyMachine::parse(kEchoMachine));

  std::vector<SutFactory> suts;
  std::vector<bool> conforming;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto [mutant, mutation] = mutate(*parent, seed);
    auto handle = std::make_shared<const MealyMachine>(std::move(mutant));
    conforming.push_back(machine_conforms(spec, *handle));
    suts.push_back(factory_for("mutant_" + std::to_string(seed), handle));
  }

  CampaignConfig config;
  config.kmin = 5;
  config.seed = 1;
  CampaignReport report = run_campaign(spec, suts, config);
  for (std::size_t i = 0; i < suts.size(); ++i) {
    if (conforming[i]) CHECK_FALSE(report.runs[0].records[i].killed);
  }
}

TEST_CASE("early stop halts a SUT campaign at its first failing test") {
  Spec spec = parse_spec(kEchoSpec);
  // Never raises the output, so the echo requirement always kills it.
  auto silent = std::make_shared<const MealyMachine>(MealyMachine::parse(
      ".inputs i0\n.outputs o0\n.init 0\n"
      "0 | i0=0 -> 0 | o0=0\n"
      "0 | i0=1 -> 0 | o0=0\n"));

  CampaignConfig config;
  config.seed = 7;
  CampaignReport report =
      run_campaign(spec, {factory_for("m", silent)}, config);
  const SutRecord& rec = report.runs[0].records[0];
  REQUIRE(rec.killed);
  CHECK(rec.tests_run ==
        static_cast<std::uint32_t>(rec.first_failing_test + 1));

  config.early_stop = false;
  CampaignReport full = run_campaign(spec, {factory_for("m", silent)}, config);
  const SutRecord& all = full.runs[0].records[0];
  REQUIRE(all.killed);
  CHECK(all.tests_run >= rec.tests_run);
}

TEST_CASE("empty SUT lists and tiny budgets are handled") {
  Spec spec = parse_spec(kEchoSpec);
  CampaignConfig config;
  CampaignReport empty = run_campaign(spec, {}, config);
  CHECK(empty.runs[0].records.empty());
  CHECK(empty.runs[0].aggregates.suts == 0);

  auto parent = std::make_shared<const MealyMachine>(
      MealyMachine::parse(kEchoMachine));
  config.budget_secs = 0.0001;
  CampaignReport tiny =
      run_campaign(spec, {factory_for("parent", parent)}, config);
  REQUIRE(tiny.runs[0].records.size() == 1);  // expiry recorded, no crash
  config.budget_secs = 0;
  CHECK_THROWS_AS(run_campaign(spec, {}, config), Error);
}

TEST_CASE("reports are stable, and csv and json agree on aggregates") {
  Spec spec = parse_spec(kEchoSpec);
  auto parent = std::make_shared<const MealyMachine>(
      MealyMachine::parse(kEchoMachine));
  std::vector<SutFactory> suts{factory_for("parent", parent)};
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    auto [mutant, mutation] = mutate(*parent, seed);
    suts.push_back(factory_for("mutant_" + std::to_string(seed),
                               std::make_shared<const MealyMachine>(
                                   std::move(mutant))));
  }

  CampaignConfig config;
  config.seed = 5;
  config.repeats = 2;
  CampaignReport r1 = run_campaign(spec, suts, config);
  CampaignReport r2 = run_campaign(spec, suts, config);

  std::string csv1 = report_to_csv(r1);
  CHECK(csv1 == report_to_csv(r2));  // same seed, same bytes
  std::string json1 = report_to_json(r1);
  CHECK(json1 == report_to_json(r2));

  // One header, one row per SUT and run, one aggregate per run, one median.
  std::size_t lines = 0;
  for (char c : csv1)
    if (c == '\n') ++lines;
  CHECK(lines == 1 + 2 * suts.size() + 2 + 1);

  auto doc = nlohmann::json::parse(json1);
  REQUIRE(doc["runs"].size() == 2);
  for (std::size_t run = 0; run < 2; ++run) {
    const Aggregates& agg = r1.runs[run].aggregates;
    CHECK(doc["runs"][run]["aggregates"]["kills"] == agg.kills);
    CHECK(doc["runs"][run]["aggregates"]["timeouts"] == agg.timeouts);
    CHECK(doc["runs"][run]["aggregates"]["suts"] == agg.suts);
    // The same aggregates appear in the csv aggregate row.
    std::string needle = "aggregate," + std::to_string(run) + ",,,,,,,,,,,,," +
                         std::to_string(agg.kills) + ",";
    CHECK(csv1.find(needle) != std::string::npos);
  }

  // Per-run records line up with medians over runs.
  std::vector<double> kills;
  for (const RunResult& run : r1.runs)
    kills.push_back(run.aggregates.kills);
  double expect =
      kills.size() == 2 ? (kills[0] + kills[1]) / 2.0 : kills[0];
  CHECK(r1.median_kills == expect);
}

TEST_CASE("a larger budget never loses kills for a fixed seed") {
  Spec spec = parse_spec(kEchoSpec);
  auto parent = std::make_shared<const MealyMachine>(
      MealyMachine::parse(kEchoMachine));
  std::vector<SutFactory> suts;
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    auto [mutant, mutation] = mutate(*parent, seed);
    suts.push_back(factory_for("mutant_" + std::to_string(seed),
                               std::make_shared<const MealyMachine>(
                                   std::move(mutant))));
  }
  CampaignConfig config;
  config.seed = 21;
  std::uint32_t previous = 0;
  for (double budget : {0.001, 0.05, 600.0}) {
    config.budget_secs = budget;
    CampaignReport report = run_campaign(spec, suts, config);
    std::uint32_t kills = report.runs[0].aggregates.kills;
    CHECK(kills >= previous);
    previous = kills;
    // Aggregates follow their definitions.
    double steps = 0;
    for (const SutRecord& rec : report.runs[0].records)
      steps += static_cast<double>(rec.total_steps);
    CHECK(report.runs[0].aggregates.avg_steps ==
          doctest::Approx(steps / suts.size()));
  }
}

TEST_CASE("worker pools produce the same records as sequential runs") {
  Spec spec = parse_spec(kEchoSpec);
  auto parent = std::make_shared<const MealyMachine>(
      MealyMachine::parse(kEchoMachine));
  std::vector<SutFactory> suts;
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    auto [mutant, mutation] = mutate(*parent, seed);
    suts.push_back(factory_for("mutant_" + std::to_string(seed),
                               std::make_shared<const MealyMachine>(
                                   std::move(mutant))));
  }
  CampaignConfig config;
  config.seed = 11;
  CampaignReport sequential = run_campaign(spec, suts, config);
  config.workers = 3;
  CampaignReport parallel = run_campaign(spec, suts, config);
  CHECK(report_to_csv(sequential) == report_to_csv(parallel));
}
