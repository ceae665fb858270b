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

#include "conformance.hpp"

#include <deque>

#include "error.hpp"
#include "graph.hpp"

namespace ltltest {

bool machine_conforms(const Spec& spec, const MealyMachine& machine,
                      const TranslateOptions& options) {
  if (machine.inputs().names() != spec.input_names() ||
      machine.outputs().names() != spec.output_names())
    throw Error("machine variables do not match the spec declarations");

  FormulaId negated = spec.factory->not_(spec.conjunction);
  Nba nba = ltl_to_nba(spec.factory, negated, spec.ap, options);

  const std::size_t nq = nba.num_states();
  const std::size_t n = machine.num_states() * nq;
  auto id = [&](std::uint32_t s, StateId q) { return s * nq + q; };

  std::vector<std::vector<std::uint32_t>> adj(n);
  std::vector<bool> reach(n, false);
  std::deque<std::uint32_t> queue;
  std::uint32_t start = static_cast<std::uint32_t>(
      id(machine.init(), nba.init()));
  reach[start] = true;
  queue.push_back(start);

  while (!queue.empty()) {
    std::uint32_t node = queue.front();
    queue.pop_front();
    std::uint32_t s = node / static_cast<std::uint32_t>(nq);
    StateId q = node % static_cast<std::uint32_t>(nq);
    for (std::size_t w = 0; w < machine.num_input_words(); ++w) {
      const MealyMachine::Transition& t = machine.transition_entry(s, w);
      Assignment letter = concat(machine.input_word(w), t.output);
      for (std::uint32_t e : nba.out(q)) {
        if (!nba.label_satisfied(nba.edges()[e].label, letter)) continue;
        std::uint32_t next =
            static_cast<std::uint32_t>(id(t.next, nba.edges()[e].dst));
        adj[node].push_back(next);
        if (!reach[next]) {
          reach[next] = true;
          queue.push_back(next);
        }
      }
    }
  }

  SccResult scc = strongly_connected_components(n, adj);
  for (std::uint32_t node = 0; node < n; ++node) {
    if (!reach[node]) continue;
    StateId q = node % static_cast<std::uint32_t>(nq);
    if (nba.accepting(q) && scc.cyclic[scc.comp[node]])
      return false;  // some input sequence violates the conjunction
  }
  return true;
}

}  // namespace ltltest
