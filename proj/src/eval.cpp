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

#include "eval.hpp"

#include <unordered_map>

#include "error.hpp"

namespace ltltest {

namespace {

VarId atom_index(const FormulaFactory& f, FormulaId id, const VarTable& ap) {
  auto v = ap.find(f.node(id).atom);
  if (!v) throw Error("atom '" + f.node(id).atom + "' is not declared");
  return *v;
}

}  // namespace

bool eval_fltl(const FormulaFactory& f, FormulaId formula, const VarTable& ap,
               const Trace& trace) {
  if (trace.empty()) throw Error("cannot evaluate the empty trace");
  const std::size_t n = trace.size();

  std::vector<FormulaId> subs = f.subformulas(formula);
  std::unordered_map<FormulaId, std::size_t> local;
  local.reserve(subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i) local.emplace(subs[i], i);

  // sat[s][i] = whether subformula s holds at position i.
  std::vector<std::vector<char>> sat(subs.size(), std::vector<char>(n, 0));
  auto at = [&](FormulaId id, std::size_t i) -> char {
    return sat[local.at(id)][i];
  };

  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t i = n - 1 - step;
    const bool last = i + 1 == n;
    for (std::size_t s = 0; s < subs.size(); ++s) {
      const FormulaNode& node = f.node(subs[s]);
      char v = 0;
      switch (node.op) {
        case Op::True: v = 1; break;
        case Op::False: v = 0; break;
        case Op::Atom:
          v = trace.steps[i].get(atom_index(f, subs[s], ap));
          break;
        case Op::Not: v = !at(node.lhs, i); break;
        case Op::And: v = at(node.lhs, i) && at(node.rhs, i); break;
        case Op::Or: v = at(node.lhs, i) || at(node.rhs, i); break;
        case Op::Implies: v = !at(node.lhs, i) || at(node.rhs, i); break;
        case Op::Iff: v = at(node.lhs, i) == at(node.rhs, i); break;
        case Op::Next: v = !last && at(node.lhs, i + 1); break;
        case Op::WeakNext: v = last || at(node.lhs, i + 1); break;
        case Op::Until:
          v = at(node.rhs, i) ||
              (at(node.lhs, i) && !last && sat[s][i + 1]);
          break;
        case Op::Release:
          v = at(node.rhs, i) &&
              (at(node.lhs, i) || last || sat[s][i + 1]);
          break;
        case Op::Eventually:
          v = at(node.lhs, i) || (!last && sat[s][i + 1]);
          break;
        case Op::Always:
          v = at(node.lhs, i) && (last || sat[s][i + 1]);
          break;
      }
      sat[s][i] = v;
    }
  }
  return sat[local.at(formula)][0] != 0;
}

bool eval_ltl_lasso(const FormulaFactory& f, FormulaId formula,
                    const VarTable& ap, const LassoWord& word) {
  if (word.loop.empty()) throw Error("lasso word needs a nonempty loop");
  const std::size_t n = word.positions();

  std::vector<FormulaId> subs = f.subformulas(formula);
  std::unordered_map<FormulaId, std::size_t> local;
  local.reserve(subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i) local.emplace(subs[i], i);

  std::vector<std::vector<char>> sat(subs.size(), std::vector<char>(n, 0));
  auto at = [&](FormulaId id, std::size_t i) -> char {
    return sat[local.at(id)][i];
  };

  // Children are fully evaluated before their parents, so fixpoints for
  // the temporal operators can iterate over final child values.
  for (std::size_t s = 0; s < subs.size(); ++s) {
    const FormulaNode& node = f.node(subs[s]);
    std::vector<char>& row = sat[s];
    switch (node.op) {
      case Op::True:
        row.assign(n, 1);
        break;
      case Op::False:
        break;
      case Op::Atom: {
        VarId v = atom_index(f, subs[s], ap);
        for (std::size_t i = 0; i < n; ++i) row[i] = word.letter(i).get(v);
        break;
      }
      case Op::Not:
        for (std::size_t i = 0; i < n; ++i) row[i] = !at(node.lhs, i);
        break;
      case Op::And:
        for (std::size_t i = 0; i < n; ++i)
          row[i] = at(node.lhs, i) && at(node.rhs, i);
        break;
      case Op::Or:
        for (std::size_t i = 0; i < n; ++i)
          row[i] = at(node.lhs, i) || at(node.rhs, i);
        break;
      case Op::Implies:
        for (std::size_t i = 0; i < n; ++i)
          row[i] = !at(node.lhs, i) || at(node.rhs, i);
        break;
      case Op::Iff:
        for (std::size_t i = 0; i < n; ++i)
          row[i] = at(node.lhs, i) == at(node.rhs, i);
        break;
      case Op::Next:
      case Op::WeakNext:
        // Identical over infinite words: the successor always exists.
        for (std::size_t i = 0; i < n; ++i)
          row[i] = at(node.lhs, word.successor(i));
        break;
      case Op::Until:
      case Op::Eventually: {
        // Least fixpoint from all-false.
        bool changed = true;
        while (changed) {
          changed = false;
          for (std::size_t step = 0; step < n; ++step) {
            std::size_t i = n - 1 - step;
            char lhs_ok = node.op == Op::Eventually ? 1 : at(node.lhs, i);
            char goal =
                node.op == Op::Eventually ? at(node.lhs, i) : at(node.rhs, i);
            char v = goal || (lhs_ok && row[word.successor(i)]);
            if (v != row[i]) {
              row[i] = v;
              changed = true;
            }
          }
        }
        break;
      }
      case Op::Release:
      case Op::Always: {
        // Greatest fixpoint from all-true.
        row.assign(n, 1);
        bool changed = true;
        while (changed) {
          changed = false;
          for (std::size_t step = 0; step < n; ++step) {
            std::size_t i = n - 1 - step;
            char inv = node.op == Op::Always ? at(node.lhs, i) : at(node.rhs, i);
            char escape = node.op == Op::Always ? 0 : at(node.lhs, i);
            char v = inv && (escape || row[word.successor(i)]);
            if (v != row[i]) {
              row[i] = v;
              changed = true;
            }
          }
        }
        break;
      }
    }
  }
  return sat[local.at(formula)][0] != 0;
}

bool eval_prop(const FormulaFactory& f, FormulaId formula, const VarTable& ap,
               const Assignment& letter) {
  const FormulaNode& node = f.node(formula);
  switch (node.op) {
    case Op::True: return true;
    case Op::False: return false;
    case Op::Atom: return letter.get(atom_index(f, formula, ap));
    case Op::Not: return !eval_prop(f, node.lhs, ap, letter);
    case Op::And:
      return eval_prop(f, node.lhs, ap, letter) &&
             eval_prop(f, node.rhs, ap, letter);
    case Op::Or:
      return eval_prop(f, node.lhs, ap, letter) ||
             eval_prop(f, node.rhs, ap, letter);
    case Op::Implies:
      return !eval_prop(f, node.lhs, ap, letter) ||
             eval_prop(f, node.rhs, ap, letter);
    case Op::Iff:
      return eval_prop(f, node.lhs, ap, letter) ==
             eval_prop(f, node.rhs, ap, letter);
    default:
      throw Error(std::string("temporal operator '") + op_name(node.op) +
                  "' in a propositional context");
  }
}

}  // namespace ltltest
