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

#include <optional>

#include "nba.hpp"
#include "parse.hpp"
#include "trace.hpp"

namespace ltltest {

enum class VerdictKind : std::uint8_t {
  AcceptanceReached,  // stopped in an accepting state at length >= kmin
  KmaxFltlPass,       // passed without the acceptance stop firing
  PrefixViolation,    // the trace induces no run on the automaton
  KmaxFltlFail,       // valid prefix, but the finite-trace semantics reject
};

const char* verdict_kind_name(VerdictKind kind);

/// The verdict of record is the finite-trace evaluation of the requirement
/// conjunction; the automaton view is kept alongside and a disagreement
/// between the two is flagged rather than silently trusted.
struct Verdict {
  bool pass = false;
  VerdictKind kind = VerdictKind::KmaxFltlFail;
  bool fltl = false;
  std::optional<bool> automaton;
  bool disagreement = false;
};

/// A trace is a valid prefix exactly while some automaton state remains
/// possible. Once empty, every extension stays empty.
inline bool valid_prefix(const StateSet& current) { return !current.empty(); }

/// Final verdict for an executed trace. `final_states` must be the fold of
/// step_states over the trace; `reached_acceptance` says whether the run
/// stopped because an accepting state was possible at length >= kmin.
Verdict evaluate(const Spec& spec, const Trace& trace, const Nba& nba,
                 const StateSet& final_states, bool reached_acceptance);

}  // namespace ltltest
