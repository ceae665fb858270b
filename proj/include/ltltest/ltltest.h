/* Copyright 2026 The ltltest Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of the ltltest shared library.
 *
 * All objects are opaque handles created by ltlt_*_parse/load/build
 * functions and released by the matching ltlt_*_free. Functions return
 * LTLT_OK or an error code; ltlt_last_error() describes the most recent
 * failure on the calling thread. Strings returned through char** are
 * heap-allocated and must be released with ltlt_string_free; const char*
 * results point into the owning handle and stay valid until it is freed.
 *
 * Handles are not thread-safe while being created or mutated; campaigns
 * internally share read-only data across their workers.
 */

#ifndef LTLTEST_LTLTEST_H
#define LTLTEST_LTLTEST_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ltlt_status {
  LTLT_OK = 0,
  LTLT_ERR_PARSE = 1,    /* bad input text; message carries line/column */
  LTLT_ERR_LIMIT = 2,    /* a resource cap was exceeded */
  LTLT_ERR_SUT = 3,      /* SUT communication failed */
  LTLT_ERR_INVALID = 4,  /* invalid arguments or state */
  LTLT_ERR_INTERNAL = 5
} ltlt_status;

const char* ltlt_version(void);

/* Description of the last failure on this thread; never NULL. */
const char* ltlt_last_error(void);

void ltlt_string_free(char* s);

/* ---- specifications ---------------------------------------------------- */

typedef struct ltlt_spec ltlt_spec;

ltlt_status ltlt_spec_parse(const char* text, ltlt_spec** out);
ltlt_status ltlt_spec_load_file(const char* path, ltlt_spec** out);
void ltlt_spec_free(ltlt_spec* spec);

size_t ltlt_spec_num_requirements(const ltlt_spec* spec);
size_t ltlt_spec_num_inputs(const ltlt_spec* spec);
size_t ltlt_spec_num_outputs(const ltlt_spec* spec);
const char* ltlt_spec_input_name(const ltlt_spec* spec, size_t i);
const char* ltlt_spec_output_name(const ltlt_spec* spec, size_t i);

/* Requirement i rendered back to formula syntax. */
ltlt_status ltlt_spec_requirement(const ltlt_spec* spec, size_t i, char** out);

/* ---- automata ---------------------------------------------------------- */

typedef struct ltlt_automaton ltlt_automaton;

/* Translates the requirement conjunction, prunes states that cannot reach
 * acceptance and expands the per-state input menus. state_cap limits the
 * construction; 0 uses the default. */
ltlt_status ltlt_automaton_build(const ltlt_spec* spec, size_t state_cap,
                                 ltlt_automaton** out);
void ltlt_automaton_free(ltlt_automaton* aut);

size_t ltlt_automaton_num_states(const ltlt_automaton* aut);   /* pruned */
size_t ltlt_automaton_num_edges(const ltlt_automaton* aut);
size_t ltlt_automaton_num_accepting(const ltlt_automaton* aut);
size_t ltlt_automaton_num_expanded_edges(const ltlt_automaton* aut);
size_t ltlt_automaton_raw_num_states(const ltlt_automaton* aut);

/* Textual dump: `init` and `accept` headers, one `src "label" dst` line per
 * edge of the pruned automaton. */
ltlt_status ltlt_automaton_dump(const ltlt_automaton* aut, char** out);

/* ---- mealy machines ---------------------------------------------------- */

typedef struct ltlt_mealy ltlt_mealy;

ltlt_status ltlt_mealy_parse(const char* text, ltlt_mealy** out);
ltlt_status ltlt_mealy_load_file(const char* path, ltlt_mealy** out);
void ltlt_mealy_free(ltlt_mealy* mealy);

ltlt_status ltlt_mealy_to_string(const ltlt_mealy* mealy, char** out);
size_t ltlt_mealy_num_states(const ltlt_mealy* mealy);
size_t ltlt_mealy_num_inputs(const ltlt_mealy* mealy);
size_t ltlt_mealy_num_outputs(const ltlt_mealy* mealy);
const char* ltlt_mealy_input_name(const ltlt_mealy* mealy, size_t i);
const char* ltlt_mealy_output_name(const ltlt_mealy* mealy, size_t i);

/* One seeded single-fault mutant. `description`, when non-NULL, receives a
 * human-readable account of the applied mutation. */
ltlt_status ltlt_mealy_mutate(const ltlt_mealy* mealy, uint64_t seed,
                              ltlt_mealy** out, char** description);

/* Exact conformance of the machine against the spec (every input sequence
 * yields a trace satisfying the conjunction). */
ltlt_status ltlt_mealy_conforms(const ltlt_spec* spec, const ltlt_mealy* mealy,
                                int* conforms);

/* ---- SUT sessions ------------------------------------------------------ */

typedef struct ltlt_session ltlt_session;

ltlt_status ltlt_session_open_mealy(const ltlt_mealy* mealy,
                                    ltlt_session** out);

/* Runs `command` via /bin/sh -c and speaks the line protocol
 * (RESET -> OK, STEP name=0|1 ... -> outputs in declaration order).
 * Input/output names come from the spec. timeout_secs <= 0 uses the
 * default of 10 seconds. */
ltlt_status ltlt_session_open_exec(const char* command, const ltlt_spec* spec,
                                   double timeout_secs, ltlt_session** out);
void ltlt_session_free(ltlt_session* session);

ltlt_status ltlt_session_reset(ltlt_session* session);

/* inputs[i] / outputs[i] are 0/1 in declaration order. */
ltlt_status ltlt_session_step(ltlt_session* session, const int* inputs,
                              size_t num_inputs, int* outputs,
                              size_t num_outputs);

/* ---- campaigns --------------------------------------------------------- */

typedef enum ltlt_algorithm {
  LTLT_ALGO_GDFS = 0,
  LTLT_ALGO_RW = 1,
  LTLT_ALGO_GW = 2
} ltlt_algorithm;

typedef struct ltlt_campaign_options {
  int algorithm;      /* ltlt_algorithm */
  uint32_t kmin;      /* 1 <= kmin < kmax */
  uint32_t kmax;
  double budget_secs; /* per run, automaton processing included */
  int early_stop;     /* stop a SUT's campaign at the first failure */
  uint64_t seed;
  uint32_t workers;
  uint32_t repeats;   /* run r uses seed + r */
  int keep_traces;    /* retain executed traces in test details */
} ltlt_campaign_options;

/* Fills in the defaults: GDFS, kmin 1, kmax 100, 600 s, early stop on,
 * seed 0, 1 worker, 1 repeat. */
void ltlt_campaign_options_init(ltlt_campaign_options* options);

typedef enum ltlt_sut_kind {
  LTLT_SUT_MEALY_FILE = 0, /* arg = path to a .mealy file */
  LTLT_SUT_EXEC = 1,       /* arg = shell command speaking the protocol */
  LTLT_SUT_MEALY = 2       /* mealy = borrowed handle */
} ltlt_sut_kind;

typedef struct ltlt_sut_desc {
  const char* id; /* label used in reports */
  int kind;       /* ltlt_sut_kind */
  const char* arg;
  const ltlt_mealy* mealy;
} ltlt_sut_desc;

typedef struct ltlt_report ltlt_report;

ltlt_status ltlt_campaign_run(const ltlt_spec* spec,
                              const ltlt_sut_desc* suts, size_t num_suts,
                              const ltlt_campaign_options* options,
                              ltlt_report** out);
void ltlt_report_free(ltlt_report* report);

size_t ltlt_report_num_runs(const ltlt_report* report);
size_t ltlt_report_num_suts(const ltlt_report* report, size_t run);
size_t ltlt_report_num_tests(const ltlt_report* report, size_t run,
                             size_t sut);

typedef struct ltlt_sut_result {
  const char* id;
  int killed;
  uint32_t tests_run;
  uint64_t total_steps;
  int64_t first_failing_test; /* -1 when no test failed */
  uint32_t acceptance_reached;
  uint32_t kmax_fltl_pass;
  uint32_t prefix_violation;
  uint32_t kmax_fltl_fail;
  uint32_t errors;
  uint32_t disagreements;
  int timeout;
  double wall_secs; /* diagnostics; not part of written reports */
} ltlt_sut_result;

ltlt_status ltlt_report_sut(const ltlt_report* report, size_t run, size_t sut,
                            ltlt_sut_result* out);

typedef enum ltlt_test_outcome {
  LTLT_TEST_PASS = 0,
  LTLT_TEST_FAIL = 1,
  LTLT_TEST_ERROR = 2
} ltlt_test_outcome;

typedef struct ltlt_test_result {
  uint32_t steps;
  int outcome;              /* ltlt_test_outcome */
  const char* verdict_kind; /* "acceptance-reached", ... */
  int disagreement;
  const char* detail; /* trace (keep_traces) or error text; may be "" */
} ltlt_test_result;

ltlt_status ltlt_report_test(const ltlt_report* report, size_t run, size_t sut,
                             size_t test, ltlt_test_result* out);

typedef struct ltlt_aggregates {
  uint32_t kills;
  double avg_steps; /* mean over SUTs of per-SUT total steps */
  uint32_t timeouts;
  uint32_t suts;
  uint64_t total_tests;
} ltlt_aggregates;

ltlt_status ltlt_report_aggregates(const ltlt_report* report, size_t run,
                                   ltlt_aggregates* out);

/* Median over runs (meaningful with repeats > 1 and a randomized
 * algorithm). */
ltlt_status ltlt_report_median(const ltlt_report* report, double* kills,
                               double* avg_steps);

typedef enum ltlt_report_format {
  LTLT_FORMAT_CSV = 0,
  LTLT_FORMAT_JSON = 1
} ltlt_report_format;

ltlt_status ltlt_report_write(const ltlt_report* report, int format,
                              const char* path);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* LTLTEST_LTLTEST_H */
