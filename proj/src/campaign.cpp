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

#include "campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "error.hpp"

namespace ltltest {

const char* algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::Gdfs: return "gdfs";
    case Algorithm::RandomWalk: return "rw";
    case Algorithm::GuidedWalk: return "gw";
  }
  return "?";
}

namespace {

std::string render_trace(const Trace& trace, const VarTable& ap) {
  std::string out;
  for (const Assignment& step : trace.steps) {
    out += step.to_string(ap);
    out += '\n';
  }
  return out;
}

SutRecord run_one_sut(const SpecAutomaton& sa, const MonitorContext* mc,
                      const SutFactory& factory, const CampaignConfig& config,
                      std::uint64_t sut_seed, const Deadline& deadline) {
  SutRecord record;
  record.sut_id = factory.id;
  auto t0 = std::chrono::steady_clock::now();

  GdfsConfig cfg{config.kmin, config.kmax, sut_seed};
  SuiteRun suite;
  try {
    std::unique_ptr<SutSession> session = factory.make();
    if (config.algorithm == Algorithm::Gdfs)
      suite = gdfs(sa, cfg, *session, deadline, config.early_stop);
    else
      suite = run_baseline(config.algorithm == Algorithm::RandomWalk
                               ? BaselineKind::RandomWalk
                               : BaselineKind::GuidedWalk,
                           sa, *mc, cfg, *session, deadline,
                           config.early_stop);
  } catch (const Error& e) {
    record.errors = 1;
    record.timeout = false;
    record.tests.push_back({0, TestOutcome::Error,
                            VerdictKind::KmaxFltlFail, false, e.what()});
    record.wall_secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return record;
  }

  record.killed = suite.killed;
  record.tests_run = static_cast<std::uint32_t>(suite.tests.size());
  record.total_steps = suite.total_steps;
  record.disagreements = suite.disagreements;
  record.timeout = suite.budget_expired;
  for (std::size_t i = 0; i < suite.tests.size(); ++i) {
    const TestRecord& test = suite.tests[i];
    TestSummary summary;
    summary.steps = static_cast<std::uint32_t>(test.trace.size());
    summary.outcome = test.outcome;
    if (test.outcome == TestOutcome::Error) {
      ++record.errors;
      summary.trace = test.error;
    } else {
      summary.kind = test.verdict->kind;
      summary.disagreement = test.verdict->disagreement;
      ++record.kind_counts[static_cast<std::size_t>(test.verdict->kind)];
      if (config.keep_traces)
        summary.trace = render_trace(test.trace, *sa.spec.ap);
      if (test.outcome == TestOutcome::Fail && record.first_failing_test < 0)
        record.first_failing_test = static_cast<std::int64_t>(i);
    }
    record.tests.push_back(std::move(summary));
  }
  record.wall_secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return record;
}

Aggregates aggregate(const std::vector<SutRecord>& records) {
  Aggregates agg;
  agg.suts = static_cast<std::uint32_t>(records.size());
  double steps = 0;
  for (const SutRecord& r : records) {
    if (r.killed) ++agg.kills;
    if (r.timeout) ++agg.timeouts;
    steps += static_cast<double>(r.total_steps);
    agg.total_tests += r.tests_run;
  }
  agg.avg_steps = records.empty() ? 0 : steps / records.size();
  return agg;
}

double median(std::vector<double> values) {
  if (values.empty()) return 0;
  std::sort(values.begin(), values.end());
  std::size_t n = values.size();
  return n % 2 ? values[n / 2] : (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

}  // namespace

CampaignReport run_campaign(const Spec& spec,
                            const std::vector<SutFactory>& suts,
                            const CampaignConfig& config) {
  if (config.budget_secs <= 0) throw Error("budget must be positive");
  GdfsConfig{config.kmin, config.kmax, config.seed}.validate();

  CampaignReport report;

  // The automaton is built once and shared read-only by every run and
  // worker; its construction time counts against the first run's budget.
  Deadline first_deadline = Deadline::in_seconds(config.budget_secs);
  SpecAutomaton sa = build_spec_automaton(spec, config.translate);
  std::unique_ptr<MonitorContext> mc;
  if (config.algorithm != Algorithm::Gdfs)
    mc = std::make_unique<MonitorContext>(
        build_monitor_context(sa.nba, config.monitor));

  for (std::uint32_t run_index = 0; run_index < config.repeats; ++run_index) {
    RunResult run;
    run.seed = config.seed + run_index;
    run.records.resize(suts.size());
    Deadline deadline = run_index == 0
                            ? first_deadline
                            : Deadline::in_seconds(config.budget_secs);

    auto work = [&](std::size_t sut_index) {
      const SutFactory& factory = suts[sut_index];
      if (deadline.expired()) {
        SutRecord& r = run.records[sut_index];
        r.sut_id = factory.id;
        r.timeout = true;
        return;
      }
      run.records[sut_index] =
          run_one_sut(sa, mc.get(), factory, config,
                      mix_seed(run.seed, sut_index), deadline);
    };

    if (config.workers <= 1) {
      for (std::size_t i = 0; i < suts.size(); ++i) work(i);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      for (std::uint32_t w = 0; w < config.workers; ++w)
        pool.emplace_back([&] {
          while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= suts.size()) return;
            work(i);
          }
        });
      for (std::thread& t : pool) t.join();
    }

    run.aggregates = aggregate(run.records);
    report.runs.push_back(std::move(run));
  }

  std::vector<double> kills, steps;
  for (const RunResult& run : report.runs) {
    kills.push_back(run.aggregates.kills);
    steps.push_back(run.aggregates.avg_steps);
  }
  report.median_kills = median(std::move(kills));
  report.median_avg_steps = median(std::move(steps));
  return report;
}

}  // namespace ltltest
