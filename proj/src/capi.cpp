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

#include "ltltest/ltltest.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "campaign.hpp"
#include "conformance.hpp"
#include "error.hpp"
#include "generator.hpp"
#include "mealy.hpp"
#include "parse.hpp"
#include "report.hpp"
#include "subprocess.hpp"

using namespace ltltest;

namespace {

thread_local std::string g_last_error = "no error";

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
ltlt_status wrap(F&& fn) {
  try {
    fn();
    return LTLT_OK;
  } catch (const ParseError& e) {
    g_last_error = e.what();
    return LTLT_ERR_PARSE;
  } catch (const LimitError& e) {
    g_last_error = e.what();
    return LTLT_ERR_LIMIT;
  } catch (const SutError& e) {
    g_last_error = e.what();
    return LTLT_ERR_SUT;
  } catch (const Error& e) {
    g_last_error = e.what();
    return LTLT_ERR_INVALID;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LTLT_ERR_INTERNAL;
  }
}

ltlt_status invalid(const char* message) {
  g_last_error = message;
  return LTLT_ERR_INVALID;
}

}  // namespace

struct ltlt_spec {
  Spec spec;
};

struct ltlt_automaton {
  SpecAutomaton sa;
  std::size_t raw_states = 0;
};

struct ltlt_mealy {
  std::shared_ptr<const MealyMachine> machine;
};

struct ltlt_session {
  std::unique_ptr<SutSession> session;
  std::size_t num_inputs = 0;
  std::size_t num_outputs = 0;
};

struct ltlt_report {
  CampaignReport report;
};

extern "C" {

const char* ltlt_version(void) { return "0.1.0"; }

const char* ltlt_last_error(void) { return g_last_error.c_str(); }

void ltlt_string_free(char* s) { std::free(s); }

/* ---- specifications ---------------------------------------------------- */

ltlt_status ltlt_spec_parse(const char* text, ltlt_spec** out) {
  if (!text || !out) return invalid("null argument");
  return wrap([&] { *out = new ltlt_spec{parse_spec(text)}; });
}

ltlt_status ltlt_spec_load_file(const char* path, ltlt_spec** out) {
  if (!path || !out) return invalid("null argument");
  return wrap([&] { *out = new ltlt_spec{parse_spec_file(path)}; });
}

void ltlt_spec_free(ltlt_spec* spec) { delete spec; }

size_t ltlt_spec_num_requirements(const ltlt_spec* spec) {
  return spec->spec.requirements.size();
}
size_t ltlt_spec_num_inputs(const ltlt_spec* spec) {
  return spec->spec.num_inputs;
}
size_t ltlt_spec_num_outputs(const ltlt_spec* spec) {
  return spec->spec.num_outputs();
}
const char* ltlt_spec_input_name(const ltlt_spec* spec, size_t i) {
  return spec->spec.ap->name(static_cast<VarId>(i)).c_str();
}
const char* ltlt_spec_output_name(const ltlt_spec* spec, size_t i) {
  return spec->spec.ap->name(static_cast<VarId>(spec->spec.num_inputs + i))
      .c_str();
}

ltlt_status ltlt_spec_requirement(const ltlt_spec* spec, size_t i,
                                  char** out) {
  if (!spec || !out) return invalid("null argument");
  if (i >= spec->spec.requirements.size())
    return invalid("requirement index out of range");
  return wrap([&] {
    *out = dup_string(
        spec->spec.factory->to_string(spec->spec.requirements[i]));
  });
}

/* ---- automata ---------------------------------------------------------- */

ltlt_status ltlt_automaton_build(const ltlt_spec* spec, size_t state_cap,
                                 ltlt_automaton** out) {
  if (!spec || !out) return invalid("null argument");
  return wrap([&] {
    TranslateOptions options;
    if (state_cap) options.state_cap = state_cap;
    Nba raw = ltl_to_nba(spec->spec.factory, spec->spec.conjunction,
                         spec->spec.ap, options);
    std::size_t raw_states = raw.num_states();
    Nba pruned = prune_empty(raw);
    Expansion expansion = expand_edges(pruned, spec->spec.num_inputs);
    std::vector<std::uint32_t> distance = distance_to_acceptance(pruned);
    *out = new ltlt_automaton{
        SpecAutomaton{spec->spec, std::move(pruned), std::move(expansion),
                      std::move(distance),
                      {}},
        raw_states};
  });
}

void ltlt_automaton_free(ltlt_automaton* aut) { delete aut; }

size_t ltlt_automaton_num_states(const ltlt_automaton* aut) {
  return aut->sa.nba.num_states();
}
size_t ltlt_automaton_num_edges(const ltlt_automaton* aut) {
  return aut->sa.nba.edges().size();
}
size_t ltlt_automaton_num_accepting(const ltlt_automaton* aut) {
  return aut->sa.nba.num_accepting();
}
size_t ltlt_automaton_num_expanded_edges(const ltlt_automaton* aut) {
  return aut->sa.expansion.edges.size();
}
size_t ltlt_automaton_raw_num_states(const ltlt_automaton* aut) {
  return aut->raw_states;
}

ltlt_status ltlt_automaton_dump(const ltlt_automaton* aut, char** out) {
  if (!aut || !out) return invalid("null argument");
  return wrap([&] { *out = dup_string(dump_automaton(aut->sa.nba)); });
}

/* ---- mealy machines ---------------------------------------------------- */

ltlt_status ltlt_mealy_parse(const char* text, ltlt_mealy** out) {
  if (!text || !out) return invalid("null argument");
  return wrap([&] {
    *out = new ltlt_mealy{
        std::make_shared<const MealyMachine>(MealyMachine::parse(text))};
  });
}

ltlt_status ltlt_mealy_load_file(const char* path, ltlt_mealy** out) {
  if (!path || !out) return invalid("null argument");
  return wrap([&] {
    *out = new ltlt_mealy{std::make_shared<const MealyMachine>(
        MealyMachine::load_file(path))};
  });
}

void ltlt_mealy_free(ltlt_mealy* mealy) { delete mealy; }

ltlt_status ltlt_mealy_to_string(const ltlt_mealy* mealy, char** out) {
  if (!mealy || !out) return invalid("null argument");
  return wrap([&] { *out = dup_string(mealy->machine->to_string()); });
}

size_t ltlt_mealy_num_states(const ltlt_mealy* mealy) {
  return mealy->machine->num_states();
}
size_t ltlt_mealy_num_inputs(const ltlt_mealy* mealy) {
  return mealy->machine->inputs().size();
}
size_t ltlt_mealy_num_outputs(const ltlt_mealy* mealy) {
  return mealy->machine->outputs().size();
}
const char* ltlt_mealy_input_name(const ltlt_mealy* mealy, size_t i) {
  return mealy->machine->inputs().name(static_cast<VarId>(i)).c_str();
}
const char* ltlt_mealy_output_name(const ltlt_mealy* mealy, size_t i) {
  return mealy->machine->outputs().name(static_cast<VarId>(i)).c_str();
}

ltlt_status ltlt_mealy_mutate(const ltlt_mealy* mealy, uint64_t seed,
                              ltlt_mealy** out, char** description) {
  if (!mealy || !out) return invalid("null argument");
  return wrap([&] {
    auto [mutant, mutation] = mutate(*mealy->machine, seed);
    if (description)
      *description = dup_string(mutation.describe(*mealy->machine));
    *out = new ltlt_mealy{
        std::make_shared<const MealyMachine>(std::move(mutant))};
  });
}

ltlt_status ltlt_mealy_conforms(const ltlt_spec* spec, const ltlt_mealy* mealy,
                                int* conforms) {
  if (!spec || !mealy || !conforms) return invalid("null argument");
  return wrap([&] {
    *conforms = machine_conforms(spec->spec, *mealy->machine) ? 1 : 0;
  });
}

/* ---- SUT sessions ------------------------------------------------------ */

ltlt_status ltlt_session_open_mealy(const ltlt_mealy* mealy,
                                    ltlt_session** out) {
  if (!mealy || !out) return invalid("null argument");
  return wrap([&] {
    auto handle = std::make_unique<ltlt_session>();
    handle->session = std::make_unique<MealySession>(mealy->machine);
    handle->num_inputs = mealy->machine->inputs().size();
    handle->num_outputs = mealy->machine->outputs().size();
    *out = handle.release();
  });
}

ltlt_status ltlt_session_open_exec(const char* command, const ltlt_spec* spec,
                                   double timeout_secs, ltlt_session** out) {
  if (!command || !spec || !out) return invalid("null argument");
  return wrap([&] {
    auto handle = std::make_unique<ltlt_session>();
    handle->session = std::make_unique<SubprocessSession>(
        command, spec->spec.input_names(), spec->spec.output_names(),
        timeout_secs > 0 ? timeout_secs : 10.0);
    handle->num_inputs = spec->spec.num_inputs;
    handle->num_outputs = spec->spec.num_outputs();
    *out = handle.release();
  });
}

void ltlt_session_free(ltlt_session* session) { delete session; }

ltlt_status ltlt_session_reset(ltlt_session* session) {
  if (!session) return invalid("null argument");
  return wrap([&] { session->session->reset(); });
}

ltlt_status ltlt_session_step(ltlt_session* session, const int* inputs,
                              size_t num_inputs, int* outputs,
                              size_t num_outputs) {
  if (!session || !inputs || !outputs) return invalid("null argument");
  if (num_inputs != session->num_inputs ||
      num_outputs != session->num_outputs)
    return invalid("input/output arity mismatch");
  return wrap([&] {
    Assignment input(num_inputs, false);
    for (size_t i = 0; i < num_inputs; ++i)
      input.set(static_cast<VarId>(i), inputs[i] != 0);
    Assignment output = session->session->step(input);
    for (size_t i = 0; i < num_outputs; ++i)
      outputs[i] = output.get(static_cast<VarId>(i)) ? 1 : 0;
  });
}

/* ---- campaigns --------------------------------------------------------- */

void ltlt_campaign_options_init(ltlt_campaign_options* options) {
  options->algorithm = LTLT_ALGO_GDFS;
  options->kmin = 1;
  options->kmax = 100;
  options->budget_secs = 600.0;
  options->early_stop = 1;
  options->seed = 0;
  options->workers = 1;
  options->repeats = 1;
  options->keep_traces = 0;
}

ltlt_status ltlt_campaign_run(const ltlt_spec* spec,
                              const ltlt_sut_desc* suts, size_t num_suts,
                              const ltlt_campaign_options* options,
                              ltlt_report** out) {
  if (!spec || !out || (num_suts > 0 && !suts))
    return invalid("null argument");
  return wrap([&] {
    CampaignConfig config;
    if (options) {
      switch (options->algorithm) {
        case LTLT_ALGO_GDFS: config.algorithm = Algorithm::Gdfs; break;
        case LTLT_ALGO_RW: config.algorithm = Algorithm::RandomWalk; break;
        case LTLT_ALGO_GW: config.algorithm = Algorithm::GuidedWalk; break;
        default: throw Error("unknown algorithm");
      }
      config.kmin = options->kmin;
      config.kmax = options->kmax;
      config.budget_secs = options->budget_secs;
      config.early_stop = options->early_stop != 0;
      config.seed = options->seed;
      config.workers = options->workers ? options->workers : 1;
      config.repeats = options->repeats ? options->repeats : 1;
      config.keep_traces = options->keep_traces != 0;
    }

    const Spec& sp = spec->spec;
    std::vector<SutFactory> factories;
    for (size_t i = 0; i < num_suts; ++i) {
      const ltlt_sut_desc& desc = suts[i];
      std::string id = desc.id ? desc.id : ("sut" + std::to_string(i));
      switch (desc.kind) {
        case LTLT_SUT_MEALY_FILE:
        case LTLT_SUT_MEALY: {
          std::shared_ptr<const MealyMachine> machine;
          if (desc.kind == LTLT_SUT_MEALY_FILE) {
            if (!desc.arg) throw Error("missing mealy file path");
            machine = std::make_shared<const MealyMachine>(
                MealyMachine::load_file(desc.arg));
          } else {
            if (!desc.mealy) throw Error("missing mealy handle");
            machine = desc.mealy->machine;
          }
          if (machine->inputs().names() != sp.input_names() ||
              machine->outputs().names() != sp.output_names())
            throw Error("machine '" + id +
                        "' does not declare the spec variables");
          factories.push_back({id, [machine] {
                                 return std::make_unique<MealySession>(
                                     machine);
                               }});
          break;
        }
        case LTLT_SUT_EXEC: {
          if (!desc.arg) throw Error("missing SUT command");
          std::string command = desc.arg;
          auto in_names = sp.input_names();
          auto out_names = sp.output_names();
          factories.push_back({id, [command, in_names, out_names] {
                                 return std::make_unique<SubprocessSession>(
                                     command, in_names, out_names);
                               }});
          break;
        }
        default:
          throw Error("unknown SUT kind");
      }
    }

    *out = new ltlt_report{run_campaign(sp, factories, config)};
  });
}

void ltlt_report_free(ltlt_report* report) { delete report; }

size_t ltlt_report_num_runs(const ltlt_report* report) {
  return report->report.runs.size();
}

size_t ltlt_report_num_suts(const ltlt_report* report, size_t run) {
  if (run >= report->report.runs.size()) return 0;
  return report->report.runs[run].records.size();
}

size_t ltlt_report_num_tests(const ltlt_report* report, size_t run,
                             size_t sut) {
  if (run >= report->report.runs.size()) return 0;
  const auto& records = report->report.runs[run].records;
  if (sut >= records.size()) return 0;
  return records[sut].tests.size();
}

ltlt_status ltlt_report_sut(const ltlt_report* report, size_t run, size_t sut,
                            ltlt_sut_result* out) {
  if (!report || !out) return invalid("null argument");
  if (run >= report->report.runs.size() ||
      sut >= report->report.runs[run].records.size())
    return invalid("index out of range");
  const SutRecord& rec = report->report.runs[run].records[sut];
  out->id = rec.sut_id.c_str();
  out->killed = rec.killed ? 1 : 0;
  out->tests_run = rec.tests_run;
  out->total_steps = rec.total_steps;
  out->first_failing_test = rec.first_failing_test;
  out->acceptance_reached = rec.kind_counts[0];
  out->kmax_fltl_pass = rec.kind_counts[1];
  out->prefix_violation = rec.kind_counts[2];
  out->kmax_fltl_fail = rec.kind_counts[3];
  out->errors = rec.errors;
  out->disagreements = rec.disagreements;
  out->timeout = rec.timeout ? 1 : 0;
  out->wall_secs = rec.wall_secs;
  return LTLT_OK;
}

ltlt_status ltlt_report_test(const ltlt_report* report, size_t run, size_t sut,
                             size_t test, ltlt_test_result* out) {
  if (!report || !out) return invalid("null argument");
  if (run >= report->report.runs.size() ||
      sut >= report->report.runs[run].records.size() ||
      test >= report->report.runs[run].records[sut].tests.size())
    return invalid("index out of range");
  const TestSummary& t = report->report.runs[run].records[sut].tests[test];
  out->steps = t.steps;
  out->outcome = t.outcome == TestOutcome::Pass   ? LTLT_TEST_PASS
                 : t.outcome == TestOutcome::Fail ? LTLT_TEST_FAIL
                                                  : LTLT_TEST_ERROR;
  out->verdict_kind =
      t.outcome == TestOutcome::Error ? "error" : verdict_kind_name(t.kind);
  out->disagreement = t.disagreement ? 1 : 0;
  out->detail = t.trace.c_str();
  return LTLT_OK;
}

ltlt_status ltlt_report_aggregates(const ltlt_report* report, size_t run,
                                   ltlt_aggregates* out) {
  if (!report || !out) return invalid("null argument");
  if (run >= report->report.runs.size()) return invalid("index out of range");
  const Aggregates& agg = report->report.runs[run].aggregates;
  out->kills = agg.kills;
  out->avg_steps = agg.avg_steps;
  out->timeouts = agg.timeouts;
  out->suts = agg.suts;
  out->total_tests = agg.total_tests;
  return LTLT_OK;
}

ltlt_status ltlt_report_median(const ltlt_report* report, double* kills,
                               double* avg_steps) {
  if (!report) return invalid("null argument");
  if (kills) *kills = report->report.median_kills;
  if (avg_steps) *avg_steps = report->report.median_avg_steps;
  return LTLT_OK;
}

ltlt_status ltlt_report_write(const ltlt_report* report, int format,
                              const char* path) {
  if (!report || !path) return invalid("null argument");
  if (format != LTLT_FORMAT_CSV && format != LTLT_FORMAT_JSON)
    return invalid("unknown report format");
  return wrap([&] {
    write_report(report->report,
                 format == LTLT_FORMAT_CSV ? ReportFormat::Csv
                                           : ReportFormat::Json,
                 path);
  });
}

} /* extern "C" */
