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

#include "formula.hpp"

#include <functional>

#include "error.hpp"
#include "vars.hpp"

namespace ltltest {

const char* op_name(Op op) {
  switch (op) {
    case Op::True: return "true";
    case Op::False: return "false";
    case Op::Atom: return "atom";
    case Op::Not: return "not";
    case Op::And: return "and";
    case Op::Or: return "or";
    case Op::Implies: return "implies";
    case Op::Iff: return "iff";
    case Op::Next: return "next";
    case Op::WeakNext: return "weak-next";
    case Op::Until: return "until";
    case Op::Release: return "release";
    case Op::Eventually: return "eventually";
    case Op::Always: return "always";
  }
  return "?";
}

std::size_t FormulaNodeHash::operator()(const FormulaNode& n) const noexcept {
  std::size_t h = static_cast<std::size_t>(n.op);
  h = h * 1000003u ^ std::hash<std::string>{}(n.atom);
  h = h * 1000003u ^ n.lhs;
  h = h * 1000003u ^ n.rhs;
  return h;
}

FormulaFactory::FormulaFactory() {
  intern({Op::True, "", kNoFormula, kNoFormula});
  intern({Op::False, "", kNoFormula, kNoFormula});
}

FormulaId FormulaFactory::intern(FormulaNode n) {
  auto it = table_.find(n);
  if (it != table_.end()) return it->second;
  FormulaId id = static_cast<FormulaId>(nodes_.size());
  table_.emplace(n, id);
  nodes_.push_back(std::move(n));
  return id;
}

FormulaId FormulaFactory::atom(std::string_view name) {
  if (!valid_identifier(name))
    throw Error("invalid atom name '" + std::string(name) + "'");
  return intern({Op::Atom, std::string(name), kNoFormula, kNoFormula});
}

FormulaId FormulaFactory::not_(FormulaId x) {
  return intern({Op::Not, "", x, kNoFormula});
}
FormulaId FormulaFactory::and_(FormulaId a, FormulaId b) {
  return intern({Op::And, "", a, b});
}
FormulaId FormulaFactory::or_(FormulaId a, FormulaId b) {
  return intern({Op::Or, "", a, b});
}
FormulaId FormulaFactory::implies(FormulaId a, FormulaId b) {
  return intern({Op::Implies, "", a, b});
}
FormulaId FormulaFactory::iff(FormulaId a, FormulaId b) {
  return intern({Op::Iff, "", a, b});
}
FormulaId FormulaFactory::next(FormulaId x) {
  return intern({Op::Next, "", x, kNoFormula});
}
FormulaId FormulaFactory::weak_next(FormulaId x) {
  return intern({Op::WeakNext, "", x, kNoFormula});
}
FormulaId FormulaFactory::until(FormulaId a, FormulaId b) {
  return intern({Op::Until, "", a, b});
}
FormulaId FormulaFactory::release(FormulaId a, FormulaId b) {
  return intern({Op::Release, "", a, b});
}
FormulaId FormulaFactory::eventually(FormulaId x) {
  return intern({Op::Eventually, "", x, kNoFormula});
}
FormulaId FormulaFactory::always(FormulaId x) {
  return intern({Op::Always, "", x, kNoFormula});
}

std::vector<FormulaId> FormulaFactory::subformulas(FormulaId id) const {
  std::vector<FormulaId> order;
  std::vector<char> seen(nodes_.size(), 0);
  // Iterative post-order: children before parents.
  std::vector<std::pair<FormulaId, bool>> stack{{id, false}};
  while (!stack.empty()) {
    auto [cur, expanded] = stack.back();
    stack.pop_back();
    if (seen[cur]) continue;
    if (expanded) {
      seen[cur] = 1;
      order.push_back(cur);
      continue;
    }
    stack.emplace_back(cur, true);
    const FormulaNode& n = nodes_[cur];
    if (n.rhs != kNoFormula) stack.emplace_back(n.rhs, false);
    if (n.lhs != kNoFormula) stack.emplace_back(n.lhs, false);
  }
  return order;
}

std::set<std::string> FormulaFactory::atom_names(FormulaId id) const {
  std::set<std::string> out;
  for (FormulaId sub : subformulas(id))
    if (nodes_[sub].op == Op::Atom) out.insert(nodes_[sub].atom);
  return out;
}

namespace {

// Binding strength; higher binds tighter. Left/right associativity is
// handled by bumping the context on the recursing side.
int precedence(Op op) {
  switch (op) {
    case Op::Iff: return 1;
    case Op::Implies: return 2;
    case Op::Or: return 3;
    case Op::And: return 4;
    case Op::Until:
    case Op::Release: return 5;
    default: return 6;  // unary and leaves
  }
}

}  // namespace

std::string FormulaFactory::to_string(FormulaId id) const {
  std::function<void(FormulaId, int, std::string&)> pr =
      [&](FormulaId cur, int ctx, std::string& out) {
        const FormulaNode& n = nodes_[cur];
        int prec = precedence(n.op);
        bool paren = prec < ctx;
        if (paren) out += '(';
        switch (n.op) {
          case Op::True: out += "true"; break;
          case Op::False: out += "false"; break;
          case Op::Atom: out += n.atom; break;
          case Op::Not:
            out += '!';
            pr(n.lhs, 6, out);
            break;
          case Op::Next:
          case Op::WeakNext:
          case Op::Eventually:
          case Op::Always: {
            char c = n.op == Op::Next ? 'X'
                     : n.op == Op::WeakNext ? 'N'
                     : n.op == Op::Eventually ? 'F'
                                              : 'G';
            out += c;
            out += ' ';
            pr(n.lhs, 6, out);
            break;
          }
          case Op::Until:
          case Op::Release:
            // Left associative: a U b U c reparses as (a U b) U c.
            pr(n.lhs, prec, out);
            out += n.op == Op::Until ? " U " : " R ";
            pr(n.rhs, prec + 1, out);
            break;
          case Op::And:
          case Op::Or:
            pr(n.lhs, prec, out);
            out += n.op == Op::And ? " & " : " | ";
            pr(n.rhs, prec + 1, out);
            break;
          case Op::Implies:
          case Op::Iff:
            // Right associative.
            pr(n.lhs, prec + 1, out);
            out += n.op == Op::Implies ? " -> " : " <-> ";
            pr(n.rhs, prec, out);
            break;
        }
        if (paren) out += ')';
      };
  std::string out;
  pr(id, 0, out);
  return out;
}

}  // namespace ltltest
