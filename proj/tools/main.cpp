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
// Command-line front end. Everything goes through the public C API of the
// shared library; exit codes are 0 (all tests passed), 1 (failures found)
// and 2 (usage or processing error).

#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ltltest/ltltest.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailures = 1;
constexpr int kExitError = 2;

[[noreturn]] void die(const std::string& context) {
  std::cerr << "error: " << context << ": " << ltlt_last_error() << "\n";
  std::exit(kExitError);
}

struct SpecHandle {
  ltlt_spec* ptr = nullptr;
  ~SpecHandle() { ltlt_spec_free(ptr); }
};

struct MealyHandle {
  ltlt_mealy* ptr = nullptr;
  ~MealyHandle() { ltlt_mealy_free(ptr); }
};

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { ltlt_string_free(ptr); }
};

int cmd_translate(const std::string& spec_path, const std::string& dump_path,
                  std::size_t state_cap) {
  SpecHandle spec;
  if (ltlt_spec_load_file(spec_path.c_str(), &spec.ptr) != LTLT_OK)
    die("parsing '" + spec_path + "'");

  ltlt_automaton* aut = nullptr;
  if (ltlt_automaton_build(spec.ptr, state_cap, &aut) != LTLT_OK)
    die("building the automaton");

  std::printf("requirements:    %zu\n", ltlt_spec_num_requirements(spec.ptr));
  std::printf("inputs:          %zu\n", ltlt_spec_num_inputs(spec.ptr));
  std::printf("outputs:         %zu\n", ltlt_spec_num_outputs(spec.ptr));
  std::printf("states (raw):    %zu\n", ltlt_automaton_raw_num_states(aut));
  std::printf("states (pruned): %zu\n", ltlt_automaton_num_states(aut));
  std::printf("edges:           %zu\n", ltlt_automaton_num_edges(aut));
  std::printf("accepting:       %zu\n", ltlt_automaton_num_accepting(aut));
  std::printf("expanded edges:  %zu\n",
              ltlt_automaton_num_expanded_edges(aut));

  if (!dump_path.empty()) {
    OwnedString text;
    if (ltlt_automaton_dump(aut, &text.ptr) != LTLT_OK) {
      ltlt_automaton_free(aut);
      die("dumping the automaton");
    }
    std::ofstream out(dump_path, std::ios::binary);
    out << text.ptr;
    if (!out) {
      ltlt_automaton_free(aut);
      std::cerr << "error: cannot write '" << dump_path << "'\n";
      return kExitError;
    }
    std::printf("dump written to  %s\n", dump_path.c_str());
  }
  ltlt_automaton_free(aut);
  return kExitPass;
}

int cmd_mutate(const std::string& mealy_path, std::uint32_t count,
               std::uint64_t seed, const std::string& out_dir) {
  MealyHandle parent;
  if (ltlt_mealy_load_file(mealy_path.c_str(), &parent.ptr) != LTLT_OK)
    die("parsing '" + mealy_path + "'");

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    std::cerr << "error: cannot create '" << out_dir << "': " << ec.message()
              << "\n";
    return kExitError;
  }

  std::string manifest_path = out_dir + "/mutations.txt";
  std::ofstream manifest(manifest_path, std::ios::binary);
  for (std::uint32_t i = 0; i < count; ++i) {
    MealyHandle mutant;
    OwnedString description;
    if (ltlt_mealy_mutate(parent.ptr, seed + i, &mutant.ptr,
                          &description.ptr) != LTLT_OK)
      die("mutating");
    OwnedString text;
    if (ltlt_mealy_to_string(mutant.ptr, &text.ptr) != LTLT_OK)
      die("serializing a mutant");

    char name[32];
    std::snprintf(name, sizeof name, "mutant_%03u.mealy", i);
    std::string path = out_dir + "/" + name;
    std::ofstream out(path, std::ios::binary);
    out << text.ptr;
    if (!out) {
      std::cerr << "error: cannot write '" << path << "'\n";
      return kExitError;
    }
    manifest << name << ": seed " << (seed + i) << ", " << description.ptr
             << "\n";
  }
  std::printf("wrote %u mutants to %s (manifest: %s)\n", count,
              out_dir.c_str(), manifest_path.c_str());
  return kExitPass;
}

void print_sut_result(const ltlt_report* report, std::size_t run,
                      std::size_t sut, bool verbose) {
  ltlt_sut_result res;
  if (ltlt_report_sut(report, run, sut, &res) != LTLT_OK) die("reading report");
  std::printf("%s: %s, %u tests, %" PRIu64 " steps%s\n", res.id,
              res.killed ? "FAIL" : (res.timeout ? "timeout" : "pass"),
              res.tests_run, res.total_steps,
              res.disagreements ? " [oracle disagreement]" : "");
  if (!verbose) return;
  std::size_t tests = ltlt_report_num_tests(report, run, sut);
  for (std::size_t t = 0; t < tests; ++t) {
    ltlt_test_result tr;
    if (ltlt_report_test(report, run, sut, t, &tr) != LTLT_OK)
      die("reading report");
    const char* outcome = tr.outcome == LTLT_TEST_PASS   ? "pass"
                          : tr.outcome == LTLT_TEST_FAIL ? "FAIL"
                                                         : "ERROR";
    std::printf("  test %zu: %s, %u steps, %s\n", t, outcome, tr.steps,
                tr.verdict_kind);
    if (tr.outcome != LTLT_TEST_PASS && tr.detail && tr.detail[0])
      std::printf("%s", tr.detail);
  }
}

int run_suts(const std::string& spec_path,
             const std::vector<ltlt_sut_desc>& suts,
             const ltlt_campaign_options& options,
             const std::string& report_path, const std::string& format,
             bool verbose) {
  SpecHandle spec;
  if (ltlt_spec_load_file(spec_path.c_str(), &spec.ptr) != LTLT_OK)
    die("parsing '" + spec_path + "'");

  ltlt_report* report = nullptr;
  if (ltlt_campaign_run(spec.ptr, suts.data(), suts.size(), &options,
                        &report) != LTLT_OK)
    die("running the campaign");

  bool failures = false;
  std::size_t runs = ltlt_report_num_runs(report);
  for (std::size_t run = 0; run < runs; ++run) {
    if (runs > 1)
      std::printf("== run %zu (seed %" PRIu64 ") ==\n", run,
                  options.seed + run);
    std::size_t n = ltlt_report_num_suts(report, run);
    for (std::size_t sut = 0; sut < n; ++sut) {
      print_sut_result(report, run, sut, verbose);
      ltlt_sut_result res;
      ltlt_report_sut(report, run, sut, &res);
      if (res.killed) failures = true;
    }
    ltlt_aggregates agg;
    if (ltlt_report_aggregates(report, run, &agg) != LTLT_OK)
      die("reading report");
    std::printf("suts %u, kills %u, avg steps %.2f, timeouts %u\n", agg.suts,
                agg.kills, agg.avg_steps, agg.timeouts);
  }
  if (runs > 1) {
    double kills = 0, avg_steps = 0;
    ltlt_report_median(report, &kills, &avg_steps);
    std::printf("median over %zu runs: kills %.1f, avg steps %.2f\n", runs,
                kills, avg_steps);
  }

  if (!report_path.empty()) {
    int fmt = format == "json" ? LTLT_FORMAT_JSON : LTLT_FORMAT_CSV;
    if (ltlt_report_write(report, fmt, report_path.c_str()) != LTLT_OK) {
      ltlt_report_free(report);
      die("writing '" + report_path + "'");
    }
    std::printf("report written to %s\n", report_path.c_str());
  }
  ltlt_report_free(report);
  return failures ? kExitFailures : kExitPass;
}

int cmd_serve(const std::string& mealy_path) {
  MealyHandle mealy;
  if (ltlt_mealy_load_file(mealy_path.c_str(), &mealy.ptr) != LTLT_OK)
    die("parsing '" + mealy_path + "'");

  ltlt_session* session = nullptr;
  if (ltlt_session_open_mealy(mealy.ptr, &session) != LTLT_OK)
    die("opening a session");

  std::size_t num_in = ltlt_mealy_num_inputs(mealy.ptr);
  std::size_t num_out = ltlt_mealy_num_outputs(mealy.ptr);
  std::vector<std::string> in_names, out_names;
  for (std::size_t i = 0; i < num_in; ++i)
    in_names.push_back(ltlt_mealy_input_name(mealy.ptr, i));
  for (std::size_t i = 0; i < num_out; ++i)
    out_names.push_back(ltlt_mealy_output_name(mealy.ptr, i));

  std::vector<int> inputs(num_in), outputs(num_out);
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line == "RESET") {
      if (ltlt_session_reset(session) != LTLT_OK) break;
      std::fputs("OK\n", stdout);
      std::fflush(stdout);
      continue;
    }
    // STEP name=0|1 ..., all inputs in declaration order, single spaces.
    bool ok = line.size() >= 4 && line.compare(0, 4, "STEP") == 0;
    std::size_t pos = 4;
    for (std::size_t i = 0; ok && i < num_in; ++i) {
      std::string expect = " " + in_names[i] + "=";
      if (line.compare(pos, expect.size(), expect) != 0) {
        ok = false;
        break;
      }
      pos += expect.size();
      if (pos >= line.size() || (line[pos] != '0' && line[pos] != '1')) {
        ok = false;
        break;
      }
      inputs[i] = line[pos] == '1';
      ++pos;
    }
    if (!ok || pos != line.size()) {
      std::cerr << "serve: malformed command '" << line << "'\n";
      ltlt_session_free(session);
      return kExitError;
    }
    if (ltlt_session_step(session, inputs.data(), num_in, outputs.data(),
                          num_out) != LTLT_OK) {
      std::cerr << "serve: " << ltlt_last_error() << "\n";
      ltlt_session_free(session);
      return kExitError;
    }
    std::string reply;
    for (std::size_t i = 0; i < num_out; ++i) {
      if (i) reply += ' ';
      reply += out_names[i];
      reply += outputs[i] ? "=1" : "=0";
    }
    reply += '\n';
    std::fputs(reply.c_str(), stdout);
    std::fflush(stdout);
  }
  ltlt_session_free(session);
  return kExitPass;
}

std::vector<std::string> sorted_mealy_files(const std::string& dir) {
  std::vector<std::string> files;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
    if (entry.path().extension() == ".mealy")
      files.push_back(entry.path().string());
  }
  if (ec) {
    std::cerr << "error: cannot read '" << dir << "': " << ec.message()
              << "\n";
    std::exit(kExitError);
  }
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conformance testing of black-box reactive systems against "
               "temporal-logic requirements"};
  app.require_subcommand(1);

  // translate
  std::string spec_path, dump_path;
  std::size_t state_cap = 0;
  CLI::App* translate = app.add_subcommand(
      "translate", "Build and inspect the automaton of a requirement file");
  translate->add_option("spec", spec_path, "requirement file")->required();
  translate->add_option("--dump-automaton", dump_path,
                        "write the edge list to this file");
  translate->add_option("--state-cap", state_cap,
                        "abort beyond this many states");

  // mutate
  std::string mealy_path, out_dir;
  std::uint32_t count = 100;
  std::uint64_t seed = 0;
  CLI::App* mutate_cmd = app.add_subcommand(
      "mutate", "Generate single-fault mutants of a mealy machine");
  mutate_cmd->add_option("mealy", mealy_path, "machine file")->required();
  mutate_cmd->add_option("--count", count, "number of mutants")
      ->capture_default_str();
  mutate_cmd->add_option("--seed", seed, "base seed")->capture_default_str();
  mutate_cmd->add_option("--out", out_dir, "output directory")->required();

  // shared test/bench options
  auto add_campaign_options = [](CLI::App* cmd, ltlt_campaign_options& opt,
                                 std::string& algo) {
    cmd->add_option("--algo", algo, "gdfs, rw or gw")
        ->check(CLI::IsMember({"gdfs", "rw", "gw"}))
        ->capture_default_str();
    cmd->add_option("--kmin", opt.kmin,
                    "minimum trace length before an acceptance stop")
        ->capture_default_str();
    cmd->add_option("--kmax", opt.kmax, "maximum trace length")
        ->capture_default_str();
    cmd->add_option("--seed", opt.seed, "campaign seed")
        ->capture_default_str();
    cmd->add_option("--budget-secs", opt.budget_secs,
                    "wall-clock budget per run")
        ->capture_default_str();
  };

  // test
  std::string test_spec, test_algo = "gdfs";
  std::vector<std::string> sut_spec;
  bool keep_going = false, verbose = false;
  ltlt_campaign_options test_opt;
  ltlt_campaign_options_init(&test_opt);
  CLI::App* test_cmd =
      app.add_subcommand("test", "Run one test campaign against one system");
  test_cmd->add_option("spec", test_spec, "requirement file")->required();
  test_cmd
      ->add_option("--sut", sut_spec,
                   "mealy FILE (in-process machine) or exec CMD (wire "
                   "protocol over stdio)")
      ->expected(2)
      ->required();
  add_campaign_options(test_cmd, test_opt, test_algo);
  test_cmd->add_flag("--keep-going", keep_going,
                     "do not stop at the first failing test");
  test_cmd->add_flag("-v,--verbose", verbose, "print every test");

  // bench
  std::string bench_spec, bench_algo = "gdfs", mutants_dir, report_path,
              format = "csv";
  ltlt_campaign_options bench_opt;
  ltlt_campaign_options_init(&bench_opt);
  std::uint32_t repeats = 1, workers = 1;
  CLI::App* bench_cmd = app.add_subcommand(
      "bench", "Run a mutation-analysis campaign over a mutant directory");
  bench_cmd->add_option("spec", bench_spec, "requirement file")->required();
  bench_cmd->add_option("--mutants", mutants_dir, "directory of .mealy files")
      ->required();
  add_campaign_options(bench_cmd, bench_opt, bench_algo);
  bench_cmd
      ->add_option("--repeats", repeats, "independent runs (median reported)")
      ->capture_default_str();
  bench_cmd->add_option("--workers", workers, "parallel SUT workers")
      ->capture_default_str();
  bench_cmd->add_option("--report", report_path, "write the report here");
  bench_cmd->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  // serve
  std::string serve_path;
  CLI::App* serve_cmd = app.add_subcommand(
      "serve", "Expose a mealy machine over the stdio wire protocol");
  serve_cmd->add_option("mealy", serve_path, "machine file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  auto algo_code = [](const std::string& name) {
    return name == "rw"   ? LTLT_ALGO_RW
           : name == "gw" ? LTLT_ALGO_GW
                          : LTLT_ALGO_GDFS;
  };

  if (translate->parsed())
    return cmd_translate(spec_path, dump_path, state_cap);
  if (mutate_cmd->parsed())
    return cmd_mutate(mealy_path, count, seed, out_dir);
  if (serve_cmd->parsed()) return cmd_serve(serve_path);

  if (test_cmd->parsed()) {
    test_opt.algorithm = algo_code(test_algo);
    test_opt.early_stop = keep_going ? 0 : 1;
    test_opt.keep_traces = 1;
    ltlt_sut_desc desc{};
    desc.id = "sut";
    if (sut_spec[0] == "mealy") {
      desc.kind = LTLT_SUT_MEALY_FILE;
      desc.arg = sut_spec[1].c_str();
    } else if (sut_spec[0] == "exec") {
      desc.kind = LTLT_SUT_EXEC;
      desc.arg = sut_spec[1].c_str();
    } else {
      std::cerr << "error: --sut expects 'mealy FILE' or 'exec CMD'\n";
      return kExitError;
    }
    return run_suts(test_spec, {desc}, test_opt, "", "csv", true);
  }

  if (bench_cmd->parsed()) {
    bench_opt.algorithm = algo_code(bench_algo);
    bench_opt.repeats = repeats;
    bench_opt.workers = workers;
    std::vector<std::string> files = sorted_mealy_files(mutants_dir);
    if (files.empty()) {
      std::cerr << "error: no .mealy files in '" << mutants_dir << "'\n";
      return kExitError;
    }
    std::vector<std::string> ids;
    ids.reserve(files.size());
    for (const std::string& f : files)
      ids.push_back(std::filesystem::path(f).stem().string());
    std::vector<ltlt_sut_desc> suts;
    for (std::size_t i = 0; i < files.size(); ++i) {
      ltlt_sut_desc desc{};
      desc.id = ids[i].c_str();
      desc.kind = LTLT_SUT_MEALY_FILE;
      desc.arg = files[i].c_str();
      suts.push_back(desc);
    }
    return run_suts(bench_spec, suts, bench_opt, report_path, format, false);
  }

  return kExitError;
}
