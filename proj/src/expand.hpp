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

#include "nba.hpp"

namespace ltltest {

/// A symbolic edge refined to one concrete input choice. The input is total
/// over the declared inputs (variables the label does not mention default to
/// false); the output cube keeps only the output literals the label's
/// minterm fixes, leaving the rest unconstrained.
struct ExpandedEdge {
  StateId src = 0;
  StateId dst = 0;
  Assignment input;       // over the input block
  Cube output_cube;       // over the output block
  std::uint32_t origin = 0;  // index of the symbolic edge it refines
};

struct Expansion {
  std::vector<ExpandedEdge> edges;
  std::vector<std::vector<std::uint32_t>> out;  // per state: edge ids
};

/// Enumerates, for every symbolic edge, the distinct minterms of its label
/// over the label's own support, projected to (input, output cube) pairs.
/// Tuples identical in (src, input, output cube, dst) are deduplicated,
/// keeping the lowest-numbered origin.
Expansion expand_edges(const Nba& nba, std::size_t num_inputs);

}  // namespace ltltest
