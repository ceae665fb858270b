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

#include <vector>

#include "vars.hpp"

namespace ltltest {

/// Finite word over 2^AP; every step is a total assignment over AP.
struct Trace {
  std::vector<Assignment> steps;

  std::size_t size() const { return steps.size(); }
  bool empty() const { return steps.empty(); }
};

/// Ultimately periodic infinite word prefix . loop^omega. The loop must be
/// nonempty.
struct LassoWord {
  std::vector<Assignment> prefix;
  std::vector<Assignment> loop;

  /// Number of distinct positions (|prefix| + |loop|).
  std::size_t positions() const { return prefix.size() + loop.size(); }

  const Assignment& letter(std::size_t pos) const {
    return pos < prefix.size() ? prefix[pos] : loop[pos - prefix.size()];
  }

  /// Position following `pos`, wrapping from the last loop position back to
  /// the loop start.
  std::size_t successor(std::size_t pos) const {
    return pos + 1 < positions() ? pos + 1 : prefix.size();
  }
};

}  // namespace ltltest
