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

#include "formula.hpp"
#include "trace.hpp"
#include "vars.hpp"

namespace ltltest {

/// Finite-trace semantics at position 0. Strong next requires a successor
/// step; weak next is satisfied at the last step. Satisfaction is tabulated
/// per (subformula, position), so the cost is O(|formula| * |trace|) even
/// for nested untils.
///
/// Throws Error on an empty trace: the semantics quantifies over positions
/// of a nonempty word and the generator never produces empty traces, so no
/// verdict is invented for that case.
bool eval_fltl(const FormulaFactory& f, FormulaId formula, const VarTable& ap,
               const Trace& trace);

/// Infinite-word semantics on the ultimately periodic word prefix.loop^omega,
/// decided exactly by a fixpoint over the finitely many distinct suffix
/// positions: until/eventually iterate to a least fixpoint on the loop,
/// always/release to a greatest fixpoint.
bool eval_ltl_lasso(const FormulaFactory& f, FormulaId formula,
                    const VarTable& ap, const LassoWord& word);

/// Evaluates a formula of boolean connectives over AP under one letter.
/// Throws Error if the formula contains temporal operators or undeclared
/// atoms.
bool eval_prop(const FormulaFactory& f, FormulaId formula, const VarTable& ap,
               const Assignment& letter);

}  // namespace ltltest
