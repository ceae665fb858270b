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
// Temporal-logic abstract syntax. Formulas are nodes of an interned DAG
// owned by a FormulaFactory; structurally identical formulas share the same
// FormulaId, so equality checks and deduplication are O(1).

#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ltltest {

using FormulaId = std::uint32_t;
inline constexpr FormulaId kNoFormula = static_cast<FormulaId>(-1);

enum class Op : std::uint8_t {
  True,
  False,
  Atom,
  Not,
  And,
  Or,
  Implies,
  Iff,
  Next,      // strong next: requires a successor step on finite traces
  WeakNext,  // weak next: satisfied at the last step; evaluator-only
  Until,
  Release,   // produced by negation normal form; not in the surface grammar
  Eventually,
  Always,
};

const char* op_name(Op op);

struct FormulaNode {
  Op op{};
  std::string atom;  // nonempty only for Atom
  FormulaId lhs{kNoFormula};
  FormulaId rhs{kNoFormula};

  bool operator==(const FormulaNode&) const = default;
};

struct FormulaNodeHash {
  std::size_t operator()(const FormulaNode& n) const noexcept;
};

/// Owns formula nodes and the interning table. Append-only: ids stay valid
/// for the factory's lifetime. Growing the table is not thread-safe; build
/// every formula up front, then share the factory read-only across workers.
class FormulaFactory {
 public:
  FormulaFactory();

  FormulaId make_true() { return 0; }
  FormulaId make_false() { return 1; }
  FormulaId atom(std::string_view name);  // validates the identifier
  FormulaId not_(FormulaId x);
  FormulaId and_(FormulaId a, FormulaId b);
  FormulaId or_(FormulaId a, FormulaId b);
  FormulaId implies(FormulaId a, FormulaId b);
  FormulaId iff(FormulaId a, FormulaId b);
  FormulaId next(FormulaId x);
  FormulaId weak_next(FormulaId x);
  FormulaId until(FormulaId a, FormulaId b);
  FormulaId release(FormulaId a, FormulaId b);
  FormulaId eventually(FormulaId x);
  FormulaId always(FormulaId x);

  const FormulaNode& node(FormulaId id) const { return nodes_[id]; }
  Op op(FormulaId id) const { return nodes_[id].op; }
  std::size_t size() const { return nodes_.size(); }

  /// Distinct subformulas of `id`, children before parents; the last entry
  /// is `id` itself.
  std::vector<FormulaId> subformulas(FormulaId id) const;

  /// Names of the atoms occurring in `id`.
  std::set<std::string> atom_names(FormulaId id) const;

  /// Concrete syntax with minimal parentheses; reparsing yields the same id.
  /// WeakNext and Release render as `N x` / `a R b`, which the surface
  /// parser does not accept.
  std::string to_string(FormulaId id) const;

 private:
  FormulaId intern(FormulaNode n);

  std::vector<FormulaNode> nodes_;
  std::unordered_map<FormulaNode, FormulaId, FormulaNodeHash> table_;
};

}  // namespace ltltest
