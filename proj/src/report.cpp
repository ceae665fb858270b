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

#include "report.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "error.hpp"

namespace ltltest {

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

std::string report_to_csv(const CampaignReport& report) {
  std::string out =
      "record,run,sut,killed,tests_run,total_steps,first_failing_test,"
      "acceptance_reached,kmax_fltl_pass,prefix_violation,kmax_fltl_fail,"
      "errors,disagreements,timeout,kills,avg_steps,timeouts,suts\n";
  for (std::size_t r = 0; r < report.runs.size(); ++r) {
    const RunResult& run = report.runs[r];
    for (const SutRecord& rec : run.records) {
      out += "sut," + std::to_string(r) + "," + rec.sut_id + ",";
      out += std::to_string(rec.killed ? 1 : 0) + ",";
      out += std::to_string(rec.tests_run) + ",";
      out += std::to_string(rec.total_steps) + ",";
      out += std::to_string(rec.first_failing_test) + ",";
      for (std::uint32_t count : rec.kind_counts)
        out += std::to_string(count) + ",";
      out += std::to_string(rec.errors) + ",";
      out += std::to_string(rec.disagreements) + ",";
      out += std::to_string(rec.timeout ? 1 : 0) + ",,,,\n";
    }
    const Aggregates& agg = run.aggregates;
    out += "aggregate," + std::to_string(r) + ",,,,,,,,,,,,,";
    out += std::to_string(agg.kills) + "," + fixed6(agg.avg_steps) + "," +
           std::to_string(agg.timeouts) + "," + std::to_string(agg.suts) +
           "\n";
  }
  out += "median,,,,,,,,,,,,,," + fixed6(report.median_kills) + "," +
         fixed6(report.median_avg_steps) + ",,\n";
  return out;
}

std::string report_to_json(const CampaignReport& report) {
  nlohmann::ordered_json doc;
  doc["runs"] = nlohmann::ordered_json::array();
  for (const RunResult& run : report.runs) {
    nlohmann::ordered_json jrun;
    jrun["seed"] = run.seed;
    jrun["records"] = nlohmann::ordered_json::array();
    for (const SutRecord& rec : run.records) {
      nlohmann::ordered_json jrec;
      jrec["sut"] = rec.sut_id;
      jrec["killed"] = rec.killed;
      jrec["tests_run"] = rec.tests_run;
      jrec["total_steps"] = rec.total_steps;
      jrec["first_failing_test"] = rec.first_failing_test;
      jrec["acceptance_reached"] = rec.kind_counts[0];
      jrec["kmax_fltl_pass"] = rec.kind_counts[1];
      jrec["prefix_violation"] = rec.kind_counts[2];
      jrec["kmax_fltl_fail"] = rec.kind_counts[3];
      jrec["errors"] = rec.errors;
      jrec["disagreements"] = rec.disagreements;
      jrec["timeout"] = rec.timeout;
      jrun["records"].push_back(std::move(jrec));
    }
    nlohmann::ordered_json jagg;
    jagg["kills"] = run.aggregates.kills;
    jagg["avg_steps"] = fixed6(run.aggregates.avg_steps);
    jagg["timeouts"] = run.aggregates.timeouts;
    jagg["suts"] = run.aggregates.suts;
    jrun["aggregates"] = std::move(jagg);
    doc["runs"].push_back(std::move(jrun));
  }
  doc["median"] = {{"kills", fixed6(report.median_kills)},
                   {"avg_steps", fixed6(report.median_avg_steps)}};
  return doc.dump(2) + "\n";
}

void write_report(const CampaignReport& report, ReportFormat format,
                  const std::string& path) {
  std::string text = format == ReportFormat::Csv ? report_to_csv(report)
                                                 : report_to_json(report);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open report file '" + path + "'");
  out << text;
  if (!out) throw Error("failed writing report file '" + path + "'");
}

}  // namespace ltltest
