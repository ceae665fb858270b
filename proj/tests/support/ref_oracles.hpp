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
// Brute-force reference semantics used as independent oracles. These stay
// deliberately naive (explicit quantifier loops, path walking, run
// enumeration) and share no code with the implementations they check.

#pragma once

#include <set>

#include "formula.hpp"
#include "nba.hpp"
#include "trace.hpp"
#include "vars.hpp"

namespace ltltest::testing {

/// Finite-trace satisfaction at position i with explicit quantifier loops.
inline bool fltl_reference(const FormulaFactory& f, FormulaId id,
                           const VarTable& ap, const Trace& t,
                           std::size_t i) {
  const FormulaNode& n = f.node(id);
  const std::size_t len = t.size();
  switch (n.op) {
    case Op::True: return true;
    case Op::False: return false;
    case Op::Atom: return t.steps[i].get(*ap.find(n.atom));
    case Op::Not: return !fltl_reference(f, n.lhs, ap, t, i);
    case Op::And:
      return fltl_reference(f, n.lhs, ap, t, i) &&
             fltl_reference(f, n.rhs, ap, t, i);
    case Op::Or:
      return fltl_reference(f, n.lhs, ap, t, i) ||
             fltl_reference(f, n.rhs, ap, t, i);
    case Op::Implies:
      return !fltl_reference(f, n.lhs, ap, t, i) ||
             fltl_reference(f, n.rhs, ap, t, i);
    case Op::Iff:
      return fltl_reference(f, n.lhs, ap, t, i) ==
             fltl_reference(f, n.rhs, ap, t, i);
    case Op::Next:
      return i + 1 < len && fltl_reference(f, n.lhs, ap, t, i + 1);
    case Op::WeakNext:
      return i + 1 >= len || fltl_reference(f, n.lhs, ap, t, i + 1);
    case Op::Until:
      for (std::size_t j = i; j < len; ++j) {
        if (fltl_reference(f, n.rhs, ap, t, j)) {
          bool prefix_ok = true;
          for (std::size_t m = i; m < j; ++m)
            if (!fltl_reference(f, n.lhs, ap, t, m)) prefix_ok = false;
          if (prefix_ok) return true;
        }
      }
      return false;
    case Op::Release:
      // Dual of until on finite traces.
      for (std::size_t j = i; j < len; ++j) {
        if (!fltl_reference(f, n.rhs, ap, t, j)) {
          bool released = false;
          for (std::size_t m = i; m < j; ++m)
            if (fltl_reference(f, n.lhs, ap, t, m)) released = true;
          if (!released) return false;
        }
      }
      return true;
    case Op::Eventually:
      for (std::size_t j = i; j < len; ++j)
        if (fltl_reference(f, n.lhs, ap, t, j)) return true;
      return false;
    case Op::Always:
      for (std::size_t j = i; j < len; ++j)
        if (!fltl_reference(f, n.lhs, ap, t, j)) return false;
      return true;
  }
  return false;
}

/// Infinite-word satisfaction on a lasso, decided by walking the finitely
/// many suffix positions until a revisit. Independent of the fixpoint
/// tabulation in the library.
inline bool lasso_reference(const FormulaFactory& f, FormulaId id,
                            const VarTable& ap, const LassoWord& w,
                            std::size_t pos) {
  const FormulaNode& n = f.node(id);
  switch (n.op) {
    case Op::True: return true;
    case Op::False: return false;
    case Op::Atom: return w.letter(pos).get(*ap.find(n.atom));
    case Op::Not: return !lasso_reference(f, n.lhs, ap, w, pos);
    case Op::And:
      return lasso_reference(f, n.lhs, ap, w, pos) &&
             lasso_reference(f, n.rhs, ap, w, pos);
    case Op::Or:
      return lasso_reference(f, n.lhs, ap, w, pos) ||
             lasso_reference(f, n.rhs, ap, w, pos);
    case Op::Implies:
      return !lasso_reference(f, n.lhs, ap, w, pos) ||
             lasso_reference(f, n.rhs, ap, w, pos);
    case Op::Iff:
      return lasso_reference(f, n.lhs, ap, w, pos) ==
             lasso_reference(f, n.rhs, ap, w, pos);
    case Op::Next:
    case Op::WeakNext:
      return lasso_reference(f, n.lhs, ap, w, w.successor(pos));
    case Op::Until: {
      std::set<std::size_t> visited;
      std::size_t k = pos;
      while (!visited.count(k)) {
        visited.insert(k);
        if (lasso_reference(f, n.rhs, ap, w, k)) return true;
        if (!lasso_reference(f, n.lhs, ap, w, k)) return false;
        k = w.successor(k);
      }
      return false;  // looped with lhs holding but rhs never reached
    }
    case Op::Release: {
      std::set<std::size_t> visited;
      std::size_t k = pos;
      while (!visited.count(k)) {
        visited.insert(k);
        if (!lasso_reference(f, n.rhs, ap, w, k)) return false;
        if (lasso_reference(f, n.lhs, ap, w, k)) return true;
        k = w.successor(k);
      }
      return true;  // rhs holds around the loop forever
    }
    case Op::Eventually: {
      std::set<std::size_t> visited;
      std::size_t k = pos;
      while (!visited.count(k)) {
        visited.insert(k);
        if (lasso_reference(f, n.lhs, ap, w, k)) return true;
        k = w.successor(k);
      }
      return false;
    }
    case Op::Always: {
      std::set<std::size_t> visited;
      std::size_t k = pos;
      while (!visited.count(k)) {
        visited.insert(k);
        if (!lasso_reference(f, n.lhs, ap, w, k)) return false;
        k = w.successor(k);
      }
      return true;
    }
  }
  return false;
}

/// Does any run over the trace exist? Depth-first enumeration of runs, one
/// state at a time; no state-set batching.
inline bool run_exists(const Nba& nba, const Trace& t, StateId q,
                       std::size_t i) {
  if (i == t.size()) return true;
  for (std::uint32_t e : nba.out(q)) {
    if (!nba.label_satisfied(nba.edges()[e].label, t.steps[i])) continue;
    if (run_exists(nba, t, nba.edges()[e].dst, i + 1)) return true;
  }
  return false;
}

inline bool run_exists(const Nba& nba, const Trace& t) {
  return run_exists(nba, t, nba.init(), 0);
}

}  // namespace ltltest::testing
