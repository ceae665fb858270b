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

#pragma once

#include <string>

#include "campaign.hpp"

namespace ltltest {

enum class ReportFormat : std::uint8_t { Csv, Json };

/// Serializes a campaign report. Field order is stable, floats use six
/// decimals, and the output contains no wall-clock readings, so re-running
/// with the same seed reproduces the bytes exactly.
///
/// CSV columns (one `sut` row per SUT and run, one `aggregate` row per run,
/// one final `median` row):
///
///   record,run,sut,killed,tests_run,total_steps,first_failing_test,
///   acceptance_reached,kmax_fltl_pass,prefix_violation,kmax_fltl_fail,
///   errors,disagreements,timeout,kills,avg_steps,timeouts,suts
std::string report_to_csv(const CampaignReport& report);

/// JSON object: {"runs": [{"seed", "records": [...], "aggregates": {...}}],
/// "median": {"kills", "avg_steps"}}.
std::string report_to_json(const CampaignReport& report);

void write_report(const CampaignReport& report, ReportFormat format,
                  const std::string& path);

}  // namespace ltltest
