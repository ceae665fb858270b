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

#include "expand.hpp"

#include <set>
#include <tuple>

#include "error.hpp"
#include "eval.hpp"

namespace ltltest {

Expansion expand_edges(const Nba& nba, std::size_t num_inputs) {
  const std::size_t num_outputs = nba.ap().size() - num_inputs;
  Expansion expansion;
  expansion.out.resize(nba.num_states());

  std::set<std::tuple<StateId, StateId, Assignment, Cube>> seen;
  Assignment letter(nba.ap().size(), false);

  for (std::uint32_t e = 0; e < nba.edges().size(); ++e) {
    const NbaEdge& edge = nba.edges()[e];
    std::vector<VarId> support = nba.label_support(edge.label);

    for (std::uint64_t bits = 0; bits < (1ull << support.size()); ++bits) {
      for (std::size_t j = 0; j < support.size(); ++j)
        letter.set(support[j], (bits >> j) & 1);
      if (!nba.label_satisfied(edge.label, letter)) continue;

      ExpandedEdge expanded;
      expanded.src = edge.src;
      expanded.dst = edge.dst;
      expanded.origin = e;
      expanded.input = Assignment(num_inputs, false);
      expanded.output_cube = Cube(num_outputs);
      for (std::size_t j = 0; j < support.size(); ++j) {
        VarId v = support[j];
        bool value = (bits >> j) & 1;
        if (v < num_inputs)
          expanded.input.set(v, value);
        else
          expanded.output_cube.set(v - num_inputs, value);
      }

      auto key = std::make_tuple(expanded.src, expanded.dst, expanded.input,
                                 expanded.output_cube);
      if (!seen.insert(std::move(key)).second) continue;
      expansion.out[expanded.src].push_back(
          static_cast<std::uint32_t>(expansion.edges.size()));
      expansion.edges.push_back(std::move(expanded));
    }
    // Reset the support bits for the next edge.
    for (VarId v : support) letter.set(v, false);
  }
  return expansion;
}

}  // namespace ltltest
