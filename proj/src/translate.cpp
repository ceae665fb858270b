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

#include "translate.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "error.hpp"
#include "nnf.hpp"

namespace ltltest {

namespace {

using IdSet = std::vector<FormulaId>;  // sorted, unique

bool contains(const IdSet& set, FormulaId id) {
  return std::binary_search(set.begin(), set.end(), id);
}

void insert(IdSet& set, FormulaId id) {
  auto it = std::lower_bound(set.begin(), set.end(), id);
  if (it == set.end() || *it != id) set.insert(it, id);
}

// A completed tableau node: `olds` records the formulas asserted at the
// current position, `nexts` the obligations passed to the successor.
struct TableauNode {
  IdSet olds;
  IdSet nexts;
  std::vector<std::uint32_t> incoming;  // node ids; kFromInit for the root
};

constexpr std::uint32_t kFromInit = static_cast<std::uint32_t>(-1);

struct Tableau {
  FormulaFactory& f;
  std::size_t cap;
  std::vector<TableauNode> nodes;
  std::map<std::pair<IdSet, IdSet>, std::uint32_t> done;
  // Successor sets waiting to be expanded; keeps the recursion depth
  // bounded by the closure size instead of the automaton size.
  std::deque<std::pair<IdSet, std::uint32_t>> pending;

  Tableau(FormulaFactory& factory, std::size_t state_cap)
      : f(factory), cap(state_cap) {}

  void run(FormulaId root) {
    expand({root}, {}, {}, {kFromInit});
    while (!pending.empty()) {
      auto [new_set, from] = std::move(pending.front());
      pending.pop_front();
      expand(std::move(new_set), {}, {}, {from});
    }
  }

  bool is_literal(FormulaId id) const {
    const FormulaNode& n = f.node(id);
    if (n.op == Op::Atom) return true;
    return n.op == Op::Not && f.node(n.lhs).op == Op::Atom;
  }

  FormulaId negate_literal(FormulaId id) const {
    const FormulaNode& n = f.node(id);
    return n.op == Op::Not ? n.lhs : const_cast<FormulaFactory&>(f).not_(id);
  }

  // Splits pending obligations until none remain, then records the node or
  // merges it with a structurally equal one.
  void expand(IdSet new_set, IdSet olds, IdSet nexts,
              std::vector<std::uint32_t> incoming) {
    if (new_set.empty()) {
      auto key = std::make_pair(olds, nexts);
      auto it = done.find(key);
      if (it != done.end()) {
        TableauNode& m = nodes[it->second];
        m.incoming.insert(m.incoming.end(), incoming.begin(), incoming.end());
        return;
      }
      if (nodes.size() >= cap)
        throw LimitError("automaton construction exceeded " +
                         std::to_string(cap) + " tableau nodes");
      std::uint32_t id = static_cast<std::uint32_t>(nodes.size());
      nodes.push_back({olds, nexts, std::move(incoming)});
      done.emplace(std::move(key), id);
      pending.emplace_back(std::move(nexts), id);
      return;
    }

    FormulaId eta = new_set.back();
    new_set.pop_back();
    const FormulaNode& n = f.node(eta);

    if (eta == f.make_false()) return;  // inconsistent, drop this branch
    if (eta == f.make_true() || is_literal(eta)) {
      if (is_literal(eta) && contains(olds, negate_literal(eta)))
        return;  // contradictory literals
      insert(olds, eta);
      expand(std::move(new_set), std::move(olds), std::move(nexts),
             std::move(incoming));
      return;
    }

    insert(olds, eta);
    switch (n.op) {
      case Op::And: {
        if (!contains(olds, n.lhs)) insert(new_set, n.lhs);
        if (!contains(olds, n.rhs)) insert(new_set, n.rhs);
        expand(std::move(new_set), std::move(olds), std::move(nexts),
               std::move(incoming));
        return;
      }
      case Op::Or: {
        IdSet left = new_set;
        if (!contains(olds, n.lhs)) insert(left, n.lhs);
        expand(std::move(left), olds, nexts, incoming);
        if (!contains(olds, n.rhs)) insert(new_set, n.rhs);
        expand(std::move(new_set), std::move(olds), std::move(nexts),
               std::move(incoming));
        return;
      }
      case Op::Next: {
        insert(nexts, n.lhs);
        expand(std::move(new_set), std::move(olds), std::move(nexts),
               std::move(incoming));
        return;
      }
      case Op::Until: {
        // a U b == b | (a & X(a U b))
        IdSet wait = new_set;
        IdSet wait_next = nexts;
        if (!contains(olds, n.lhs)) insert(wait, n.lhs);
        insert(wait_next, eta);
        expand(std::move(wait), olds, std::move(wait_next), incoming);
        if (!contains(olds, n.rhs)) insert(new_set, n.rhs);
        expand(std::move(new_set), std::move(olds), std::move(nexts),
               std::move(incoming));
        return;
      }
      case Op::Release: {
        // a R b == b & (a | X(a R b))
        IdSet wait = new_set;
        IdSet wait_next = nexts;
        if (!contains(olds, n.rhs)) insert(wait, n.rhs);
        insert(wait_next, eta);
        expand(std::move(wait), olds, std::move(wait_next), incoming);
        if (!contains(olds, n.lhs)) insert(new_set, n.lhs);
        if (!contains(olds, n.rhs)) insert(new_set, n.rhs);
        expand(std::move(new_set), std::move(olds), std::move(nexts),
               std::move(incoming));
        return;
      }
      default:
        throw Error(std::string("unexpected operator '") + op_name(n.op) +
                    "' after negation normal form");
    }
  }

  FormulaId node_label(const TableauNode& node) const {
    FormulaFactory& fac = const_cast<FormulaFactory&>(f);
    FormulaId label = kNoFormula;
    for (FormulaId id : node.olds) {
      if (!is_literal(id)) continue;
      label = label == kNoFormula ? id : fac.and_(label, id);
    }
    return label == kNoFormula ? fac.make_true() : label;
  }
};

}  // namespace

Nba ltl_to_nba(std::shared_ptr<FormulaFactory> factory, FormulaId formula,
               std::shared_ptr<const VarTable> ap,
               const TranslateOptions& options) {
  FormulaFactory& f = *factory;
  FormulaId psi = to_nnf(f, formula);

  Tableau tableau(f, options.state_cap);
  tableau.run(psi);

  // One acceptance set per until subformula: nodes that do not carry the
  // until, or that already assert its right-hand side.
  std::vector<FormulaId> untils;
  for (FormulaId sub : f.subformulas(psi))
    if (f.node(sub).op == Op::Until) untils.push_back(sub);
  const std::size_t k = untils.size();

  // Tableau nodes with the same obligations for the next position and the
  // same acceptance signature differ only in the letters that enter them:
  // merge them into one state and OR the entry labels. Besides shrinking
  // the automaton, this keeps edge labels as rich disjunctions, so the
  // input menus derived from their minterms are not cut down by the
  // branch-splitting of the construction.
  const std::size_t raw = tableau.nodes.size();
  std::vector<std::vector<bool>> acc_sig(raw, std::vector<bool>(k, false));
  for (std::uint32_t q = 0; q < raw; ++q)
    for (std::size_t j = 0; j < k; ++j)
      acc_sig[q][j] = !contains(tableau.nodes[q].olds, untils[j]) ||
                      contains(tableau.nodes[q].olds, f.node(untils[j]).rhs);

  std::map<std::pair<IdSet, std::vector<bool>>, std::uint32_t> merge_index;
  std::vector<std::uint32_t> node_class(raw, 0);
  std::vector<std::uint32_t> class_rep;  // class -> representative node
  for (std::uint32_t q = 0; q < raw; ++q) {
    auto key = std::make_pair(tableau.nodes[q].nexts, acc_sig[q]);
    auto [it, inserted] = merge_index.emplace(
        std::move(key), static_cast<std::uint32_t>(class_rep.size()));
    if (inserted) class_rep.push_back(q);
    node_class[q] = it->second;
  }
  const std::size_t m = class_rep.size();

  auto in_accepting_set = [&](std::uint32_t cls, std::size_t j) {
    return acc_sig[class_rep[cls]][j];
  };

  // Per class: OR-merged labels of parallel edges, keyed by source class
  // (kFromInit for the virtual initial state).
  std::vector<std::map<std::uint32_t, FormulaId>> in_labels(m);
  for (std::uint32_t q = 0; q < raw; ++q) {
    FormulaId label = tableau.node_label(tableau.nodes[q]);
    std::uint32_t cls = node_class[q];
    // Incoming lists may repeat a source; fold each source only once per
    // node label (OR is idempotent on interned ids anyway).
    IdSet sources;
    for (std::uint32_t p : tableau.nodes[q].incoming)
      insert(sources, p == kFromInit ? kFromInit : node_class[p]);
    for (std::uint32_t src : sources) {
      auto [it, inserted] = in_labels[cls].emplace(src, label);
      if (!inserted && it->second != label)
        it->second = f.or_(it->second, label);
    }
  }

  std::vector<std::vector<std::uint32_t>> node_out(m);
  std::vector<std::uint32_t> init_out;
  std::vector<std::vector<FormulaId>> labels(m);  // aligned with node_out
  std::vector<FormulaId> init_labels;
  for (std::uint32_t cls = 0; cls < m; ++cls) {
    for (const auto& [src, label] : in_labels[cls]) {
      if (src == kFromInit) {
        init_out.push_back(cls);
        init_labels.push_back(label);
      } else {
        node_out[src].push_back(cls);
        labels[src].push_back(label);
      }
    }
  }

  Nba nba(factory, ap);

  if (k == 0) {
    // Already a plain automaton; every infinite run is accepting.
    std::vector<StateId> state_of(m);
    StateId init = nba.add_state();
    nba.set_init(init);
    nba.set_accepting(init);
    // Only classes reachable from the initial state become states.
    std::vector<bool> reach(m, false);
    std::deque<std::uint32_t> queue;
    for (std::uint32_t q : init_out)
      if (!reach[q]) {
        reach[q] = true;
        queue.push_back(q);
      }
    while (!queue.empty()) {
      std::uint32_t q = queue.front();
      queue.pop_front();
      for (std::uint32_t r : node_out[q])
        if (!reach[r]) {
          reach[r] = true;
          queue.push_back(r);
        }
    }
    for (std::uint32_t q = 0; q < m; ++q) {
      if (!reach[q]) continue;
      state_of[q] = nba.add_state();
      nba.set_accepting(state_of[q]);
    }
    for (std::size_t i = 0; i < init_out.size(); ++i)
      nba.add_edge(init, init_labels[i], state_of[init_out[i]]);
    for (std::uint32_t q = 0; q < m; ++q) {
      if (!reach[q]) continue;
      for (std::size_t i = 0; i < node_out[q].size(); ++i)
        nba.add_edge(state_of[q], labels[q][i], state_of[node_out[q][i]]);
    }
    return nba;
  }

  // Degeneralization: pair each class with a counter of acceptance sets
  // seen so far; counter k marks acceptance and restarts.
  auto advance = [&](std::uint32_t cls, std::size_t counter) {
    std::size_t b = counter == k ? 0 : counter;
    while (b < k && in_accepting_set(cls, b)) ++b;
    return b;
  };

  std::map<std::pair<std::uint32_t, std::size_t>, StateId> product;
  std::deque<std::pair<std::uint32_t, std::size_t>> queue;
  StateId init = nba.add_state();
  nba.set_init(init);

  auto product_state = [&](std::uint32_t cls, std::size_t counter) {
    auto key = std::make_pair(cls, counter);
    auto it = product.find(key);
    if (it != product.end()) return it->second;
    if (nba.num_states() >= options.state_cap)
      throw LimitError("automaton construction exceeded " +
                       std::to_string(options.state_cap) + " states");
    StateId s = nba.add_state();
    nba.set_accepting(s, counter == k);
    product.emplace(key, s);
    queue.push_back(key);
    return s;
  };

  for (std::size_t i = 0; i < init_out.size(); ++i)
    nba.add_edge(init, init_labels[i],
                 product_state(init_out[i], advance(init_out[i], 0)));
  while (!queue.empty()) {
    auto [cls, counter] = queue.front();
    queue.pop_front();
    StateId src = product.at({cls, counter});
    for (std::size_t i = 0; i < node_out[cls].size(); ++i)
      nba.add_edge(src, labels[cls][i],
                   product_state(node_out[cls][i],
                                 advance(node_out[cls][i], counter)));
  }
  return nba;
}

}  // namespace ltltest
