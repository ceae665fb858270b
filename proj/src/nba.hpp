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
// Nondeterministic Buchi automata over the alphabet 2^AP. Edges carry
// propositional formulas over AP as a shorthand: an edge labeled `a | b`
// stands for one transition per satisfying assignment of the label.

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "formula.hpp"
#include "trace.hpp"
#include "vars.hpp"

namespace ltltest {

using StateId = std::uint32_t;

/// Sorted, duplicate-free set of automaton states.
using StateSet = std::vector<StateId>;

inline constexpr std::uint32_t kInfiniteDistance =
    static_cast<std::uint32_t>(-1);

struct NbaEdge {
  StateId src;
  FormulaId label;
  StateId dst;
};

class Nba {
 public:
  Nba(std::shared_ptr<FormulaFactory> factory,
      std::shared_ptr<const VarTable> ap);

  StateId add_state();
  void set_init(StateId q);
  void set_accepting(StateId q, bool accepting = true);

  /// Validates that the label is propositional over the declared AP and
  /// satisfiable; throws Error otherwise.
  void add_edge(StateId src, FormulaId label, StateId dst);

  std::size_t num_states() const { return num_states_; }
  StateId init() const { return init_; }
  bool accepting(StateId q) const { return accepting_[q]; }
  std::size_t num_accepting() const;
  const std::vector<NbaEdge>& edges() const { return edges_; }
  const std::vector<std::uint32_t>& out(StateId q) const { return out_[q]; }

  const FormulaFactory& factory() const { return *factory_; }
  const std::shared_ptr<FormulaFactory>& factory_ptr() const {
    return factory_;
  }
  const VarTable& ap() const { return *ap_; }
  const std::shared_ptr<const VarTable>& ap_ptr() const { return ap_; }

  /// Atoms occurring in a label, as sorted variable ids.
  std::vector<VarId> label_support(FormulaId label) const;

  bool label_satisfied(FormulaId label, const Assignment& letter) const;

  bool any_accepting(const StateSet& states) const;

 private:
  std::shared_ptr<FormulaFactory> factory_;
  std::shared_ptr<const VarTable> ap_;
  std::size_t num_states_ = 0;
  StateId init_ = 0;
  std::vector<bool> accepting_;
  std::vector<NbaEdge> edges_;
  std::vector<std::vector<std::uint32_t>> out_;  // per state: edge indices
};

/// One automaton step for a set of possible states: all destinations of
/// edges leaving `current` whose symbolic label the letter satisfies. An
/// empty result means the executed trace is not a valid prefix.
StateSet step_states(const Nba& nba, const StateSet& current,
                     const Assignment& letter);

/// Whether some run over prefix.loop^omega visits an accepting state
/// infinitely often; decided on the finite product of states and lasso
/// positions by searching for a reachable cycle through an accepting node.
bool nba_accepts_lasso(const Nba& nba, const LassoWord& word);

/// Removes states from which no accepting lasso is reachable (and states
/// unreachable from the initial state), preserving the language. The
/// initial state is always kept so the result stays well formed even for
/// an empty language.
Nba prune_empty(const Nba& nba);

/// Backward BFS from the accepting states; accepting states map to 0,
/// states that cannot reach acceptance to kInfiniteDistance.
std::vector<std::uint32_t> distance_to_acceptance(const Nba& nba);

/// Textual dump: `init` and `accept` headers, then one `src "label" dst`
/// line per edge.
std::string dump_automaton(const Nba& nba);

}  // namespace ltltest
