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

#include "vars.hpp"

#include "error.hpp"

namespace ltltest {

bool valid_identifier(std::string_view name) {
  if (name.empty()) return false;
  auto head = [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
  };
  auto tail = [&](char c) { return head(c) || (c >= '0' && c <= '9'); };
  if (!head(name[0])) return false;
  for (std::size_t i = 1; i < name.size(); ++i)
    if (!tail(name[i])) return false;
  return true;
}

VarId VarTable::add(std::string name) {
  if (!valid_identifier(name))
    throw Error("invalid variable name '" + name + "'");
  if (index_.count(name))
    throw Error("duplicate variable '" + name + "'");
  VarId id = static_cast<VarId>(names_.size());
  index_.emplace(name, id);
  names_.push_back(std::move(name));
  return id;
}

std::optional<VarId> VarTable::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string Assignment::to_string(const VarTable& vars) const {
  std::string out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (i) out += ' ';
    out += vars.name(static_cast<VarId>(i));
    out += bits_[i] ? "=1" : "=0";
  }
  return out;
}

Assignment concat(const Assignment& lhs, const Assignment& rhs) {
  Assignment out(lhs.size() + rhs.size());
  for (std::size_t i = 0; i < lhs.size(); ++i)
    out.set(static_cast<VarId>(i), lhs.get(static_cast<VarId>(i)));
  for (std::size_t i = 0; i < rhs.size(); ++i)
    out.set(static_cast<VarId>(lhs.size() + i), rhs.get(static_cast<VarId>(i)));
  return out;
}

bool Cube::matches(const Assignment& a, VarId base) const {
  for (std::size_t i = 0; i < vals_.size(); ++i) {
    if (vals_[i] == kUnset) continue;
    if (a.get(base + static_cast<VarId>(i)) != (vals_[i] == 1)) return false;
  }
  return true;
}

std::string Cube::to_string(const VarTable& vars, VarId base) const {
  std::string out;
  for (std::size_t i = 0; i < vals_.size(); ++i) {
    if (i) out += ' ';
    out += vars.name(base + static_cast<VarId>(i));
    out += vals_[i] == kUnset ? "=*" : (vals_[i] == 1 ? "=1" : "=0");
  }
  return out;
}

}  // namespace ltltest
