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
#include <vector>

#include "sut.hpp"

namespace ltltest {

/// Drives an external system under test over its standard streams with a
/// newline-delimited protocol (ASCII, single spaces):
///
///   client: RESET\n                      reply: OK\n
///   client: STEP i0=1 i1=0\n             reply: o0=1 o1=0\n
///
/// STEP lists every input in declaration order; the reply must list every
/// output in declaration order. Anything else is a protocol violation.
/// Replies must arrive within the per-step timeout.
class SubprocessSession : public SutSession {
 public:
  /// Launches `command` via /bin/sh -c. Throws SutError on spawn failure.
  SubprocessSession(std::string command, std::vector<std::string> input_names,
                    std::vector<std::string> output_names,
                    double timeout_secs = 10.0);
  ~SubprocessSession() override;

  SubprocessSession(const SubprocessSession&) = delete;
  SubprocessSession& operator=(const SubprocessSession&) = delete;

  void reset() override;
  Assignment step(const Assignment& input) override;

 private:
  void send_line(const std::string& line);
  std::string read_line();

  std::vector<std::string> input_names_;
  std::vector<std::string> output_names_;
  double timeout_secs_;
  int pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  std::string buffer_;
};

}  // namespace ltltest
