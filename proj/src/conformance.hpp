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

#include "mealy.hpp"
#include "parse.hpp"
#include "translate.hpp"

namespace ltltest {

/// Exact conformance of a white-box machine: true iff every trace the
/// machine can produce, under every infinite input sequence, satisfies the
/// requirement conjunction. Decided by searching the product of the machine
/// with the automaton of the negated conjunction for a reachable accepting
/// cycle. Ground truth for mutation analysis.
///
/// The machine must declare exactly the spec's inputs and outputs, in the
/// same order.
bool machine_conforms(const Spec& spec, const MealyMachine& machine,
                      const TranslateOptions& options = {});

}  // namespace ltltest
