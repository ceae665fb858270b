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

#include <memory>
#include <string_view>
#include <vector>

#include "formula.hpp"
#include "vars.hpp"

namespace ltltest {

/// Parses a formula in the surface grammar:
///
///   true false ! & | -> <-> X F G U  identifiers  ( )
///
/// Unary operators bind tightest, then U, &, |, -> and <->, in that order.
/// U, & and | are left associative; -> and <-> are right associative.
/// X, F, G, U and N are reserved words; N (weak next) is rejected.
///
/// `line` and `column` locate the first character of `text` inside a larger
/// file and only affect error positions.
FormulaId parse_ltl(std::string_view text, FormulaFactory& factory,
                    std::uint32_t line = 1, std::uint32_t column = 1);

/// A requirement list over declared input and output propositions.
/// AP is ordered inputs-then-outputs, each block in declaration order.
struct Spec {
  std::shared_ptr<FormulaFactory> factory;
  std::shared_ptr<const VarTable> ap;
  std::size_t num_inputs = 0;
  std::vector<FormulaId> requirements;  // in file order
  FormulaId conjunction = kNoFormula;   // left fold of requirements

  std::size_t num_outputs() const { return ap->size() - num_inputs; }
  bool is_input(VarId v) const { return v < num_inputs; }

  std::vector<std::string> input_names() const;
  std::vector<std::string> output_names() const;
};

/// Parses the line-oriented spec file format:
///
///   # comment
///   .inputs  <id>+        (exactly once, before any .req)
///   .outputs <id>+        (exactly once, before any .req)
///   .req <formula>        (one per requirement, at least one)
///
/// Every atom of every requirement must be declared, and the input and
/// output sets must be disjoint.
Spec parse_spec(std::string_view text);

/// Same, reading from a file.
Spec parse_spec_file(const std::string& path);

}  // namespace ltltest
