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
// Exercises the shared library strictly through its public C header.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "ltltest/ltltest.h"

namespace {

const char* kSpec = ".inputs i0\n.outputs o0\n.req G (i0 <-> o0)\n";

const char* kEcho =
    ".inputs i0\n"
    ".outputs o0\n"
    ".init 0\n"
    "0 | i0=0 -> 0 | o0=0\n"
    "0 | i0=1 -> 0 | o0=1\n";

}  // namespace

TEST_CASE("version and error reporting") {
  CHECK(ltlt_version() != nullptr);
  ltlt_spec* spec = nullptr;
  CHECK(ltlt_spec_parse(".inputs a\n.outputs a\n.req a\n", &spec) ==
        LTLT_ERR_INVALID);
  CHECK(std::strlen(ltlt_last_error()) > 0);
  CHECK(ltlt_spec_parse(".inputs a\n.outputs b\n.req a &\n", &spec) ==
        LTLT_ERR_PARSE);
  std::string message = ltlt_last_error();
  CHECK(message.find("line") != std::string::npos);
}

TEST_CASE("spec introspection") {
  ltlt_spec* spec = nullptr;
  REQUIRE(ltlt_spec_parse(kSpec, &spec) == LTLT_OK);
  CHECK(ltlt_spec_num_requirements(spec) == 1);
  CHECK(ltlt_spec_num_inputs(spec) == 1);
  CHECK(ltlt_spec_num_outputs(spec) == 1);
  CHECK(std::string(ltlt_spec_input_name(spec, 0)) == "i0");
  CHECK(std::string(ltlt_spec_output_name(spec, 0)) == "o0");

  char* req = nullptr;
  REQUIRE(ltlt_spec_requirement(spec, 0, &req) == LTLT_OK);
  CHECK(std::string(req) == "G (i0 <-> o0)");
  ltlt_string_free(req);
  CHECK(ltlt_spec_requirement(spec, 7, &req) == LTLT_ERR_INVALID);
  ltlt_spec_free(spec);
}

TEST_CASE("resource caps and SUT failures map to their status codes") {
  ltlt_spec* spec = nullptr;
  REQUIRE(ltlt_spec_parse(
              ".inputs a\n.outputs b\n.req (a U b) & (b U a) & F (a & b)\n",
              &spec) == LTLT_OK);
  ltlt_automaton* aut = nullptr;
  CHECK(ltlt_automaton_build(spec, 2, &aut) == LTLT_ERR_LIMIT);

  ltlt_session* session = nullptr;
  REQUIRE(ltlt_session_open_exec("exit 3", spec, 2.0, &session) == LTLT_OK);
  CHECK(ltlt_session_reset(session) == LTLT_ERR_SUT);
  ltlt_session_free(session);
  ltlt_spec_free(spec);
}

TEST_CASE("automaton build, stats and dump") {
  ltlt_spec* spec = nullptr;
  REQUIRE(ltlt_spec_parse(kSpec, &spec) == LTLT_OK);
  ltlt_automaton* aut = nullptr;
  REQUIRE(ltlt_automaton_build(spec, 0, &aut) == LTLT_OK);
  CHECK(ltlt_automaton_num_states(aut) >= 1);
  CHECK(ltlt_automaton_num_edges(aut) >= 1);
  CHECK(ltlt_automaton_num_accepting(aut) >= 1);
  CHECK(ltlt_automaton_num_expanded_edges(aut) >= 2);
  CHECK(ltlt_automaton_raw_num_states(aut) >=
        ltlt_automaton_num_states(aut));

  char* dump = nullptr;
  REQUIRE(ltlt_automaton_dump(aut, &dump) == LTLT_OK);
  CHECK(std::string(dump).find("init 0\n") == 0);
  ltlt_string_free(dump);
  ltlt_automaton_free(aut);
  ltlt_spec_free(spec);
}

TEST_CASE("mealy machines: roundtrip, mutation, conformance, sessions") {
  ltlt_mealy* mealy = nullptr;
  REQUIRE(ltlt_mealy_parse(kEcho, &mealy) == LTLT_OK);
  CHECK(ltlt_mealy_num_states(mealy) == 1);
  CHECK(ltlt_mealy_num_inputs(mealy) == 1);
  CHECK(std::string(ltlt_mealy_input_name(mealy, 0)) == "i0");

  char* text = nullptr;
  REQUIRE(ltlt_mealy_to_string(mealy, &text) == LTLT_OK);
  ltlt_mealy* reparsed = nullptr;
  REQUIRE(ltlt_mealy_parse(text, &reparsed) == LTLT_OK);
  char* text2 = nullptr;
  REQUIRE(ltlt_mealy_to_string(reparsed, &text2) == LTLT_OK);
  CHECK(std::string(text) == text2);
  ltlt_string_free(text);
  ltlt_string_free(text2);
  ltlt_mealy_free(reparsed);

  ltlt_spec* spec = nullptr;
  REQUIRE(ltlt_spec_parse(kSpec, &spec) == LTLT_OK);
  int conforms = 0;
  REQUIRE(ltlt_mealy_conforms(spec, mealy, &conforms) == LTLT_OK);
  CHECK(conforms == 1);

  ltlt_mealy* mutant = nullptr;
  char* description = nullptr;
  REQUIRE(ltlt_mealy_mutate(mealy, 1, &mutant, &description) == LTLT_OK);
  CHECK(std::strlen(description) > 0);
  REQUIRE(ltlt_mealy_conforms(spec, mutant, &conforms) == LTLT_OK);
  CHECK(conforms == 0);  // single-state echo: every mutation flips a bit
  ltlt_string_free(description);

  ltlt_session* session = nullptr;
  REQUIRE(ltlt_session_open_mealy(mealy, &session) == LTLT_OK);
  REQUIRE(ltlt_session_reset(session) == LTLT_OK);
  int in = 1, out = 0;
  REQUIRE(ltlt_session_step(session, &in, 1, &out, 1) == LTLT_OK);
  CHECK(out == 1);
  in = 0;
  REQUIRE(ltlt_session_step(session, &in, 1, &out, 1) == LTLT_OK);
  CHECK(out == 0);
  CHECK(ltlt_session_step(session, &in, 2, &out, 1) == LTLT_ERR_INVALID);

  ltlt_session_free(session);
  ltlt_mealy_free(mutant);
  ltlt_mealy_free(mealy);
  ltlt_spec_free(spec);
}

TEST_CASE("campaigns over in-memory machines") {
  ltlt_spec* spec = nullptr;
  REQUIRE(ltlt_spec_parse(kSpec, &spec) == LTLT_OK);
  ltlt_mealy* parent = nullptr;
  REQUIRE(ltlt_mealy_parse(kEcho, &parent) == LTLT_OK);
  ltlt_mealy* mutant = nullptr;
  REQUIRE(ltlt_mealy_mutate(parent, 2, &mutant, nullptr) == LTLT_OK);

  ltlt_campaign_options options;
  ltlt_campaign_options_init(&options);
  options.seed = 9;
  options.keep_traces = 1;

  ltlt_sut_desc suts[2] = {};
  suts[0].id = "parent";
  suts[0].kind = LTLT_SUT_MEALY;
  suts[0].mealy = parent;
  suts[1].id = "mutant";
  suts[1].kind = LTLT_SUT_MEALY;
  suts[1].mealy = mutant;

  ltlt_report* report = nullptr;
  REQUIRE(ltlt_campaign_run(spec, suts, 2, &options, &report) == LTLT_OK);
  REQUIRE(ltlt_report_num_runs(report) == 1);
  REQUIRE(ltlt_report_num_suts(report, 0) == 2);

  ltlt_sut_result parent_result, mutant_result;
  REQUIRE(ltlt_report_sut(report, 0, 0, &parent_result) == LTLT_OK);
  REQUIRE(ltlt_report_sut(report, 0, 1, &mutant_result) == LTLT_OK);
  CHECK(parent_result.killed == 0);
  CHECK(mutant_result.killed == 1);
  CHECK(mutant_result.first_failing_test >= 0);

  std::size_t tests = ltlt_report_num_tests(report, 0, 1);
  REQUIRE(tests > 0);
  ltlt_test_result last;
  REQUIRE(ltlt_report_test(report, 0, 1, tests - 1, &last) == LTLT_OK);
  CHECK(last.outcome == LTLT_TEST_FAIL);
  CHECK(last.detail[0] != '\0');  // keep_traces retains the trace text

  ltlt_aggregates agg;
  REQUIRE(ltlt_report_aggregates(report, 0, &agg) == LTLT_OK);
  CHECK(agg.kills == 1);
  CHECK(agg.suts == 2);

  REQUIRE(ltlt_report_write(report, LTLT_FORMAT_JSON,
                            "capi_report.json") == LTLT_OK);
  REQUIRE(ltlt_report_write(report, LTLT_FORMAT_CSV, "capi_report.csv") ==
          LTLT_OK);
  CHECK(ltlt_report_write(report, 42, "x") == LTLT_ERR_INVALID);

  ltlt_report_free(report);
  ltlt_mealy_free(mutant);
  ltlt_mealy_free(parent);
  ltlt_spec_free(spec);
}
