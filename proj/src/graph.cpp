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

#include "graph.hpp"

#include <algorithm>

namespace ltltest {

SccResult strongly_connected_components(
    std::size_t n, const std::vector<std::vector<std::uint32_t>>& adj) {
  constexpr std::uint32_t kUnvisited = static_cast<std::uint32_t>(-1);

  SccResult res;
  res.comp.assign(n, kUnvisited);

  std::vector<std::uint32_t> index(n, kUnvisited), lowlink(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::uint32_t> stack;
  std::uint32_t next_index = 0;

  struct Frame {
    std::uint32_t v;
    std::size_t child;
  };
  std::vector<Frame> frames;

  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    frames.push_back({root, 0});
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!frames.empty()) {
      Frame& fr = frames.back();
      std::uint32_t v = fr.v;
      if (fr.child < adj[v].size()) {
        std::uint32_t w = adj[v][fr.child++];
        if (index[w] == kUnvisited) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
        continue;
      }
      frames.pop_back();
      if (!frames.empty())
        lowlink[frames.back().v] = std::min(lowlink[frames.back().v],
                                            lowlink[v]);
      if (lowlink[v] == index[v]) {
        std::uint32_t comp_id = res.count++;
        std::size_t size = 0;
        while (true) {
          std::uint32_t w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          res.comp[w] = comp_id;
          ++size;
          if (w == v) break;
        }
        res.cyclic.push_back(size > 1);
      }
    }
  }

  // Single-node components are cyclic only with a self-loop.
  for (std::uint32_t v = 0; v < n; ++v) {
    if (res.cyclic[res.comp[v]]) continue;
    for (std::uint32_t w : adj[v])
      if (w == v) res.cyclic[res.comp[v]] = true;
  }
  return res;
}

}  // namespace ltltest
