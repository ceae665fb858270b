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
#include <memory>
#include <optional>
#include <vector>

#include "nba.hpp"

namespace ltltest {

struct MonitorOptions {
  std::size_t state_cap = 65536;
  // Cap on the number of variables any state's transitions may depend on;
  // the transition table of a state enumerates 2^|support| entries.
  std::size_t support_cap = 16;
};

/// Deterministic prefix acceptor: a trace is rejected exactly when no
/// transition matches the next letter, which happens exactly when the trace
/// stops being a valid prefix of the underlying automaton's language.
///
/// Transitions are stored per state as a partial map over the state's
/// semantic support (the variables whose value can change the outcome);
/// letters agreeing on the support share one entry, so the map is finite
/// and canonical. States are minimized, so a monitor that accepts every
/// prefix has exactly one state.
class Monitor {
 public:
  struct Entry {
    std::uint32_t bits;  // assignment of the state's support variables
    StateId dst;
  };
  struct State {
    std::vector<VarId> support;  // sorted AP variable ids
    std::vector<Entry> entries;  // sorted by bits
    std::uint32_t first_entry;   // global id of entries[0]
  };

  StateId init() const { return 0; }
  std::size_t num_states() const { return states_.size(); }
  std::size_t num_entries() const { return total_entries_; }
  const State& state(StateId q) const { return states_[q]; }
  const VarTable& ap() const { return *ap_; }

  /// Successor under a full letter over AP, or nullopt when the monitor
  /// cannot move.
  std::optional<StateId> step(StateId q, const Assignment& letter) const;

  /// Global entry id of the transition taken, or nullopt.
  std::optional<std::uint32_t> step_entry(StateId q,
                                          const Assignment& letter) const;

  std::uint32_t entry_state(std::uint32_t entry_id) const;
  const Entry& entry(std::uint32_t entry_id) const;

 private:
  friend Monitor build_monitor(const Nba&, const MonitorOptions&);

  std::uint32_t restrict_bits(StateId q, const Assignment& letter) const;

  std::shared_ptr<const VarTable> ap_;
  std::vector<State> states_;
  std::vector<std::uint32_t> entry_state_;  // global entry id -> state
  std::size_t total_entries_ = 0;
};

/// Prunes the automaton, determinizes the reachable subsets over letters
/// realizable by the edge labels, and minimizes the result.
Monitor build_monitor(const Nba& nba, const MonitorOptions& options = {});

/// One atomic-proposition obligation of the coverage criterion used by the
/// baseline walks: the literal as fixed by the entry's support assignment.
/// A target is covered when a step traverses its entry (the letter then
/// satisfies the literal by construction).
struct CoverageTarget {
  std::uint32_t entry_id;
  VarId atom;
  bool positive;
};

std::vector<CoverageTarget> apc_targets(const Monitor& monitor);

}  // namespace ltltest
