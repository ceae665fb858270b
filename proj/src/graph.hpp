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

#include <cstdint>
#include <vector>

namespace ltltest {

struct SccResult {
  std::vector<std::uint32_t> comp;  // node -> component id
  std::uint32_t count = 0;
  // A component lies on a cycle: more than one node, or a self-loop.
  std::vector<bool> cyclic;
};

/// Tarjan's algorithm, iterative. `adj[v]` lists successors of v.
SccResult strongly_connected_components(
    std::size_t n, const std::vector<std::vector<std::uint32_t>>& adj);

}  // namespace ltltest
