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

#include "monitor.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "error.hpp"

namespace ltltest {

std::uint32_t Monitor::restrict_bits(StateId q,
                                     const Assignment& letter) const {
  const State& s = states_[q];
  std::uint32_t bits = 0;
  for (std::size_t j = 0; j < s.support.size(); ++j)
    if (letter.get(s.support[j])) bits |= 1u << j;
  return bits;
}

std::optional<StateId> Monitor::step(StateId q,
                                     const Assignment& letter) const {
  auto eid = step_entry(q, letter);
  if (!eid) return std::nullopt;
  return entry(*eid).dst;
}

std::optional<std::uint32_t> Monitor::step_entry(
    StateId q, const Assignment& letter) const {
  const State& s = states_[q];
  std::uint32_t bits = restrict_bits(q, letter);
  auto it = std::lower_bound(
      s.entries.begin(), s.entries.end(), bits,
      [](const Entry& e, std::uint32_t b) { return e.bits < b; });
  if (it == s.entries.end() || it->bits != bits) return std::nullopt;
  return s.first_entry +
         static_cast<std::uint32_t>(it - s.entries.begin());
}

std::uint32_t Monitor::entry_state(std::uint32_t entry_id) const {
  return entry_state_[entry_id];
}

const Monitor::Entry& Monitor::entry(std::uint32_t entry_id) const {
  const State& s = states_[entry_state_[entry_id]];
  return s.entries[entry_id - s.first_entry];
}

Monitor build_monitor(const Nba& raw, const MonitorOptions& options) {
  Nba nba = prune_empty(raw);

  // Subset construction over the reachable nonempty state sets. Each
  // subset's transitions are grouped over the union of its outgoing labels'
  // supports; variables outside that union cannot affect any label.
  std::vector<StateSet> subsets{{nba.init()}};
  std::map<StateSet, std::uint32_t> subset_index{{subsets[0], 0}};

  struct RawState {
    std::vector<VarId> support;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> entries;  // bits->dst
  };
  std::vector<RawState> raw_states;

  std::deque<std::uint32_t> queue{0};
  Assignment letter(nba.ap().size(), false);
  while (!queue.empty()) {
    std::uint32_t idx = queue.front();
    queue.pop_front();
    if (raw_states.size() <= idx) raw_states.resize(idx + 1);
    StateSet members = subsets[idx];

    std::vector<VarId> support;
    std::vector<std::uint32_t> out_edges;
    for (StateId q : members)
      for (std::uint32_t e : nba.out(q)) {
        out_edges.push_back(e);
        for (VarId v : nba.label_support(nba.edges()[e].label))
          support.push_back(v);
      }
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    if (support.size() > options.support_cap)
      throw LimitError("monitor transition support exceeds " +
                       std::to_string(options.support_cap) + " variables");

    RawState& rs = raw_states[idx];
    rs.support = support;
    for (std::uint32_t bits = 0; bits < (1u << support.size()); ++bits) {
      for (std::size_t j = 0; j < support.size(); ++j)
        letter.set(support[j], (bits >> j) & 1);
      StateSet next;
      for (std::uint32_t e : out_edges)
        if (nba.label_satisfied(nba.edges()[e].label, letter))
          next.push_back(nba.edges()[e].dst);
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      if (next.empty()) continue;
      auto [it, inserted] =
          subset_index.emplace(next, static_cast<std::uint32_t>(subsets.size()));
      if (inserted) {
        if (subsets.size() >= options.state_cap)
          throw LimitError("monitor subset construction exceeded " +
                           std::to_string(options.state_cap) + " states");
        subsets.push_back(next);
        queue.push_back(it->second);
      }
      rs.entries.emplace_back(bits, it->second);
    }
    for (VarId v : support) letter.set(v, false);
  }

  const std::size_t n = raw_states.size();
  constexpr std::uint32_t kDead = static_cast<std::uint32_t>(-1);

  // Common alphabet for minimization: assignments of the union of every
  // state's support.
  std::vector<VarId> all_support;
  for (const RawState& rs : raw_states)
    all_support.insert(all_support.end(), rs.support.begin(),
                       rs.support.end());
  std::sort(all_support.begin(), all_support.end());
  all_support.erase(std::unique(all_support.begin(), all_support.end()),
                    all_support.end());
  if (all_support.size() > options.support_cap)
    throw LimitError("monitor alphabet support exceeds " +
                     std::to_string(options.support_cap) + " variables");
  const std::size_t letters = 1ull << all_support.size();

  // Dense successor tables over the common alphabet.
  std::vector<std::vector<std::uint32_t>> table(
      n, std::vector<std::uint32_t>(letters, kDead));
  for (std::size_t s = 0; s < n; ++s) {
    const RawState& rs = raw_states[s];
    std::vector<std::size_t> positions;  // of rs.support inside all_support
    for (VarId v : rs.support)
      positions.push_back(
          std::lower_bound(all_support.begin(), all_support.end(), v) -
          all_support.begin());
    std::unordered_map<std::uint32_t, std::uint32_t> lookup(
        rs.entries.begin(), rs.entries.end());
    for (std::size_t a = 0; a < letters; ++a) {
      std::uint32_t bits = 0;
      for (std::size_t j = 0; j < positions.size(); ++j)
        if ((a >> positions[j]) & 1) bits |= 1u << j;
      auto it = lookup.find(bits);
      if (it != lookup.end()) table[s][a] = it->second;
    }
  }

  // Moore-style partition refinement. All states start equivalent (every
  // state of a prefix acceptor "accepts"); classes split on successor
  // classes per letter, with "no transition" as a distinguished sink.
  std::vector<std::uint32_t> cls(n, 0);
  std::size_t num_classes = 1;
  while (true) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> sig_index;
    std::vector<std::uint32_t> next_cls(n);
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<std::uint32_t> sig;
      sig.reserve(letters + 1);
      sig.push_back(cls[s]);
      for (std::size_t a = 0; a < letters; ++a)
        sig.push_back(table[s][a] == kDead ? kDead : cls[table[s][a]]);
      auto [it, inserted] = sig_index.emplace(
          std::move(sig), static_cast<std::uint32_t>(sig_index.size()));
      next_cls[s] = it->second;
    }
    if (sig_index.size() == num_classes) break;
    num_classes = sig_index.size();
    cls = std::move(next_cls);
  }

  // Representative (lowest id) per class; state 0 is the initial subset and
  // scans first, so its class is 0.
  std::vector<std::uint32_t> rep(num_classes, kDead);
  for (std::size_t s = 0; s < n; ++s)
    if (rep[cls[s]] == kDead) rep[cls[s]] = static_cast<std::uint32_t>(s);

  Monitor monitor;
  monitor.ap_ = nba.ap_ptr();
  monitor.states_.resize(num_classes);

  auto cls_of = [&](std::uint32_t s, std::size_t a) {
    return table[s][a] == kDead ? kDead : cls[table[s][a]];
  };

  for (std::uint32_t c = 0; c < num_classes; ++c) {
    std::uint32_t r = rep[c];
    // Semantic support: variables whose value can change the outcome.
    std::vector<VarId> sem;
    std::vector<std::size_t> sem_pos;
    for (std::size_t j = 0; j < all_support.size(); ++j) {
      bool matters = false;
      for (std::size_t a = 0; a < letters && !matters; ++a) {
        if ((a >> j) & 1) continue;
        if (cls_of(r, a) != cls_of(r, a | (1ull << j))) matters = true;
      }
      if (matters) {
        sem.push_back(all_support[j]);
        sem_pos.push_back(j);
      }
    }

    Monitor::State& out = monitor.states_[c];
    out.support = sem;
    out.first_entry = static_cast<std::uint32_t>(monitor.entry_state_.size());
    for (std::uint32_t bits = 0; bits < (1u << sem.size()); ++bits) {
      std::size_t a = 0;
      for (std::size_t j = 0; j < sem.size(); ++j)
        if ((bits >> j) & 1) a |= 1ull << sem_pos[j];
      std::uint32_t dst = cls_of(r, a);
      if (dst == kDead) continue;
      out.entries.push_back({bits, dst});
      monitor.entry_state_.push_back(c);
    }
  }
  monitor.total_entries_ = monitor.entry_state_.size();
  return monitor;
}

std::vector<CoverageTarget> apc_targets(const Monitor& monitor) {
  std::vector<CoverageTarget> targets;
  for (StateId q = 0; q < monitor.num_states(); ++q) {
    const Monitor::State& s = monitor.state(q);
    for (std::size_t i = 0; i < s.entries.size(); ++i) {
      std::uint32_t gid = s.first_entry + static_cast<std::uint32_t>(i);
      for (std::size_t j = 0; j < s.support.size(); ++j)
        targets.push_back(
            {gid, s.support[j], ((s.entries[i].bits >> j) & 1) != 0});
    }
  }
  return targets;
}

}  // namespace ltltest
