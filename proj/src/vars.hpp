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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ltltest {

using VarId = std::uint32_t;

/// True if `name` matches [A-Za-z_][A-Za-z0-9_]*.
bool valid_identifier(std::string_view name);

/// Ordered set of propositional variable declarations. The index of a
/// variable is its declaration position, which fixes the serialization
/// order used everywhere (assignments, traces, the wire protocol).
class VarTable {
 public:
  /// Appends a variable. Throws Error on invalid or duplicate names.
  VarId add(std::string name);

  std::optional<VarId> find(std::string_view name) const;
  const std::string& name(VarId id) const { return names_[id]; }
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VarId> index_;
};

/// Total truth assignment over the first size() variables of a VarTable.
/// Which table it refers to is carried by the surrounding context.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::size_t size, bool value = false)
      : bits_(size, value) {}

  bool get(VarId v) const { return bits_[v]; }
  void set(VarId v, bool b) { bits_[v] = b; }
  std::size_t size() const { return bits_.size(); }

  bool operator==(const Assignment&) const = default;
  auto operator<=>(const Assignment&) const = default;

  /// "a=1 b=0" in declaration order.
  std::string to_string(const VarTable& vars) const;

 private:
  std::vector<bool> bits_;
};

/// Concatenation; used to join an input assignment and an output assignment
/// into a letter over AP = inputs-then-outputs.
Assignment concat(const Assignment& lhs, const Assignment& rhs);

/// Partial assignment over a variable block (per-variable: unset/0/1).
/// Used for output cubes, where unset means "don't care".
class Cube {
 public:
  Cube() = default;
  explicit Cube(std::size_t size) : vals_(size, kUnset) {}

  void set(std::size_t i, bool b) { vals_[i] = b ? 1 : 0; }
  bool is_set(std::size_t i) const { return vals_[i] != kUnset; }
  bool value(std::size_t i) const { return vals_[i] == 1; }
  std::size_t size() const { return vals_.size(); }

  /// True if `a` agrees with every set position; `base` is the offset of
  /// this block inside a's variable table.
  bool matches(const Assignment& a, VarId base) const;

  bool operator==(const Cube&) const = default;
  auto operator<=>(const Cube&) const = default;

  /// "o0=1 o1=*" in declaration order; `base` as in matches().
  std::string to_string(const VarTable& vars, VarId base) const;

 private:
  static constexpr signed char kUnset = -1;
  std::vector<signed char> vals_;
};

}  // namespace ltltest
