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

#include "nba.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "error.hpp"
#include "eval.hpp"
#include "graph.hpp"

namespace ltltest {

namespace {

constexpr std::size_t kMaxLabelSupport = 24;

void check_propositional(const FormulaFactory& f, FormulaId label,
                         const VarTable& ap) {
  for (FormulaId sub : f.subformulas(label)) {
    const FormulaNode& n = f.node(sub);
    switch (n.op) {
      case Op::True:
      case Op::False:
      case Op::Not:
      case Op::And:
      case Op::Or:
      case Op::Implies:
      case Op::Iff:
        break;
      case Op::Atom:
        if (!ap.find(n.atom))
          throw Error("edge label uses undeclared atom '" + n.atom + "'");
        break;
      default:
        throw Error(std::string("edge label contains temporal operator '") +
                    op_name(n.op) + "'");
    }
  }
}

}  // namespace

Nba::Nba(std::shared_ptr<FormulaFactory> factory,
         std::shared_ptr<const VarTable> ap)
    : factory_(std::move(factory)), ap_(std::move(ap)) {}

StateId Nba::add_state() {
  accepting_.push_back(false);
  out_.emplace_back();
  return static_cast<StateId>(num_states_++);
}

void Nba::set_init(StateId q) {
  if (q >= num_states_) throw Error("initial state out of range");
  init_ = q;
}

void Nba::set_accepting(StateId q, bool accepting) {
  if (q >= num_states_) throw Error("state out of range");
  accepting_[q] = accepting;
}

std::size_t Nba::num_accepting() const {
  return static_cast<std::size_t>(
      std::count(accepting_.begin(), accepting_.end(), true));
}

std::vector<VarId> Nba::label_support(FormulaId label) const {
  std::vector<VarId> support;
  for (const std::string& name : factory_->atom_names(label))
    support.push_back(*ap_->find(name));
  std::sort(support.begin(), support.end());
  return support;
}

void Nba::add_edge(StateId src, FormulaId label, StateId dst) {
  if (src >= num_states_ || dst >= num_states_)
    throw Error("edge endpoint out of range");
  check_propositional(*factory_, label, *ap_);

  std::vector<VarId> support = label_support(label);
  if (support.size() > kMaxLabelSupport)
    throw LimitError("edge label support exceeds " +
                     std::to_string(kMaxLabelSupport) + " variables");
  // Satisfiability only depends on the supporting variables.
  Assignment letter(ap_->size(), false);
  bool satisfiable = false;
  for (std::uint64_t bits = 0; bits < (1ull << support.size()); ++bits) {
    for (std::size_t j = 0; j < support.size(); ++j)
      letter.set(support[j], (bits >> j) & 1);
    if (eval_prop(*factory_, label, *ap_, letter)) {
      satisfiable = true;
      break;
    }
  }
  if (!satisfiable) throw Error("unsatisfiable edge label");

  out_[src].push_back(static_cast<std::uint32_t>(edges_.size()));
  edges_.push_back({src, label, dst});
}

bool Nba::label_satisfied(FormulaId label, const Assignment& letter) const {
  return eval_prop(*factory_, label, *ap_, letter);
}

bool Nba::any_accepting(const StateSet& states) const {
  for (StateId q : states)
    if (accepting_[q]) return true;
  return false;
}

StateSet step_states(const Nba& nba, const StateSet& current,
                     const Assignment& letter) {
  StateSet next;
  for (StateId q : current)
    for (std::uint32_t e : nba.out(q))
      if (nba.label_satisfied(nba.edges()[e].label, letter))
        next.push_back(nba.edges()[e].dst);
  std::sort(next.begin(), next.end());
  next.erase(std::unique(next.begin(), next.end()), next.end());
  return next;
}

bool nba_accepts_lasso(const Nba& nba, const LassoWord& word) {
  if (word.loop.empty()) throw Error("lasso word needs a nonempty loop");
  const std::size_t positions = word.positions();
  const std::size_t n = nba.num_states() * positions;
  auto id = [&](StateId q, std::size_t pos) {
    return static_cast<std::uint32_t>(q * positions + pos);
  };

  // Reachable part of the product of automaton states and lasso positions.
  std::vector<bool> reach(n, false);
  std::deque<std::uint32_t> queue;
  std::uint32_t start = id(nba.init(), 0);
  reach[start] = true;
  queue.push_back(start);
  std::vector<std::vector<std::uint32_t>> adj(n);
  while (!queue.empty()) {
    std::uint32_t node = queue.front();
    queue.pop_front();
    StateId q = static_cast<StateId>(node / positions);
    std::size_t pos = node % positions;
    const Assignment& letter = word.letter(pos);
    std::size_t succ = word.successor(pos);
    for (std::uint32_t e : nba.out(q)) {
      if (!nba.label_satisfied(nba.edges()[e].label, letter)) continue;
      std::uint32_t next = id(nba.edges()[e].dst, succ);
      adj[node].push_back(next);
      if (!reach[next]) {
        reach[next] = true;
        queue.push_back(next);
      }
    }
  }

  SccResult scc = strongly_connected_components(n, adj);
  for (std::uint32_t node = 0; node < n; ++node) {
    if (!reach[node]) continue;
    StateId q = static_cast<StateId>(node / positions);
    if (nba.accepting(q) && scc.cyclic[scc.comp[node]]) return true;
  }
  return false;
}

Nba prune_empty(const Nba& nba) {
  const std::size_t n = nba.num_states();
  std::vector<std::vector<std::uint32_t>> adj(n), radj(n);
  for (const NbaEdge& e : nba.edges()) {
    adj[e.src].push_back(e.dst);
    radj[e.dst].push_back(e.src);
  }

  // States inside a cyclic SCC containing an accepting state can anchor an
  // accepting lasso; everything that reaches one is live.
  SccResult scc = strongly_connected_components(n, adj);
  std::vector<bool> good_comp(scc.count, false);
  for (StateId q = 0; q < n; ++q)
    if (nba.accepting(q) && scc.cyclic[scc.comp[q]])
      good_comp[scc.comp[q]] = true;

  std::vector<bool> live(n, false);
  std::deque<StateId> queue;
  for (StateId q = 0; q < n; ++q) {
    if (good_comp[scc.comp[q]]) {
      live[q] = true;
      queue.push_back(q);
    }
  }
  while (!queue.empty()) {
    StateId q = queue.front();
    queue.pop_front();
    for (StateId p : radj[q]) {
      if (!live[p]) {
        live[p] = true;
        queue.push_back(p);
      }
    }
  }

  // Forward reachability from the initial state.
  std::vector<bool> fwd(n, false);
  fwd[nba.init()] = true;
  queue.push_back(nba.init());
  while (!queue.empty()) {
    StateId q = queue.front();
    queue.pop_front();
    for (StateId p : adj[q]) {
      if (!fwd[p]) {
        fwd[p] = true;
        queue.push_back(p);
      }
    }
  }

  std::vector<bool> keep(n, false);
  for (StateId q = 0; q < n; ++q) keep[q] = live[q] && fwd[q];
  keep[nba.init()] = true;  // keep the type well formed even when dead

  std::vector<StateId> remap(n, 0);
  Nba pruned(nba.factory_ptr(), nba.ap_ptr());
  for (StateId q = 0; q < n; ++q)
    if (keep[q]) remap[q] = pruned.add_state();
  pruned.set_init(remap[nba.init()]);
  for (StateId q = 0; q < n; ++q)
    if (keep[q]) pruned.set_accepting(remap[q], nba.accepting(q));
  for (const NbaEdge& e : nba.edges())
    if (keep[e.src] && keep[e.dst])
      pruned.add_edge(remap[e.src], e.label, remap[e.dst]);
  return pruned;
}

std::vector<std::uint32_t> distance_to_acceptance(const Nba& nba) {
  const std::size_t n = nba.num_states();
  std::vector<std::vector<StateId>> radj(n);
  for (const NbaEdge& e : nba.edges()) radj[e.dst].push_back(e.src);

  std::vector<std::uint32_t> dist(n, kInfiniteDistance);
  std::deque<StateId> queue;
  for (StateId q = 0; q < n; ++q) {
    if (nba.accepting(q)) {
      dist[q] = 0;
      queue.push_back(q);
    }
  }
  while (!queue.empty()) {
    StateId q = queue.front();
    queue.pop_front();
    for (StateId p : radj[q]) {
      if (dist[p] == kInfiniteDistance) {
        dist[p] = dist[q] + 1;
        queue.push_back(p);
      }
    }
  }
  return dist;
}

std::string dump_automaton(const Nba& nba) {
  std::string out = "init " + std::to_string(nba.init()) + "\n";
  out += "accept";
  for (StateId q = 0; q < nba.num_states(); ++q)
    if (nba.accepting(q)) out += " " + std::to_string(q);
  out += "\n";
  for (const NbaEdge& e : nba.edges()) {
    out += std::to_string(e.src);
    out += " \"";
    out += nba.factory().to_string(e.label);
    out += "\" ";
    out += std::to_string(e.dst);
    out += "\n";
  }
  return out;
}

}  // namespace ltltest
