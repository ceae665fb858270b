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

#include "nba.hpp"

namespace ltltest {

struct TranslateOptions {
  std::size_t state_cap = 100000;
};

/// Translates a formula into a Buchi automaton with the same language over
/// infinite words. The construction is the classic on-the-fly tableau on
/// the negation normal form, yielding a generalized automaton with one
/// acceptance set per until subformula, degeneralized by the counter
/// construction. Edge labels are conjunctions of literals.
///
/// Throws LimitError when the state cap is exceeded.
Nba ltl_to_nba(std::shared_ptr<FormulaFactory> factory, FormulaId formula,
               std::shared_ptr<const VarTable> ap,
               const TranslateOptions& options = {});

}  // namespace ltltest
