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

#include "nnf.hpp"

#include <map>
#include <utility>

#include "error.hpp"

namespace ltltest {

namespace {

struct NnfBuilder {
  FormulaFactory& f;
  std::map<std::pair<FormulaId, bool>, FormulaId> memo;

  FormulaId run(FormulaId id, bool negated) {
    auto key = std::make_pair(id, negated);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    FormulaId out = build(id, negated);
    memo.emplace(key, out);
    return out;
  }

  FormulaId build(FormulaId id, bool neg) {
    const FormulaNode& n = f.node(id);
    switch (n.op) {
      case Op::True: return neg ? f.make_false() : f.make_true();
      case Op::False: return neg ? f.make_true() : f.make_false();
      case Op::Atom: return neg ? f.not_(id) : id;
      case Op::Not: return run(n.lhs, !neg);
      case Op::And:
        return neg ? f.or_(run(n.lhs, true), run(n.rhs, true))
                   : f.and_(run(n.lhs, false), run(n.rhs, false));
      case Op::Or:
        return neg ? f.and_(run(n.lhs, true), run(n.rhs, true))
                   : f.or_(run(n.lhs, false), run(n.rhs, false));
      case Op::Implies:
        // a -> b == !a | b
        return neg ? f.and_(run(n.lhs, false), run(n.rhs, true))
                   : f.or_(run(n.lhs, true), run(n.rhs, false));
      case Op::Iff:
        // a <-> b == (a & b) | (!a & !b)
        return neg ? f.or_(f.and_(run(n.lhs, false), run(n.rhs, true)),
                           f.and_(run(n.lhs, true), run(n.rhs, false)))
                   : f.or_(f.and_(run(n.lhs, false), run(n.rhs, false)),
                           f.and_(run(n.lhs, true), run(n.rhs, true)));
      case Op::Next:
      case Op::WeakNext:
        // Over infinite words both collapse to strong next, which is
        // self-dual.
        return f.next(run(n.lhs, neg));
      case Op::Until:
        return neg ? f.release(run(n.lhs, true), run(n.rhs, true))
                   : f.until(run(n.lhs, false), run(n.rhs, false));
      case Op::Release:
        return neg ? f.until(run(n.lhs, true), run(n.rhs, true))
                   : f.release(run(n.lhs, false), run(n.rhs, false));
      case Op::Eventually:
        // F x == true U x, !F x == false R !x
        return neg ? f.release(f.make_false(), run(n.lhs, true))
                   : f.until(f.make_true(), run(n.lhs, false));
      case Op::Always:
        // G x == false R x, !G x == true U !x
        return neg ? f.until(f.make_true(), run(n.lhs, true))
                   : f.release(f.make_false(), run(n.lhs, false));
    }
    throw Error("unreachable formula kind");
  }
};

}  // namespace

FormulaId to_nnf(FormulaFactory& f, FormulaId formula) {
  NnfBuilder b{f, {}};
  return b.run(formula, false);
}

}  // namespace ltltest
