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

#include "oracle.hpp"

#include "error.hpp"
#include "eval.hpp"

namespace ltltest {

const char* verdict_kind_name(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::AcceptanceReached: return "acceptance-reached";
    case VerdictKind::KmaxFltlPass: return "kmax-fltl-pass";
    case VerdictKind::PrefixViolation: return "prefix-violation";
    case VerdictKind::KmaxFltlFail: return "kmax-fltl-fail";
  }
  return "?";
}

Verdict evaluate(const Spec& spec, const Trace& trace, const Nba& nba,
                 const StateSet& final_states, bool reached_acceptance) {
  if (trace.empty()) throw Error("cannot evaluate an empty trace");

  Verdict v;
  v.fltl = eval_fltl(*spec.factory, spec.conjunction, *spec.ap, trace);
  v.automaton =
      final_states.empty() ? false : nba.any_accepting(final_states);
  v.pass = v.fltl;
  v.disagreement = *v.automaton != v.fltl;

  if (v.fltl)
    v.kind = reached_acceptance ? VerdictKind::AcceptanceReached
                                : VerdictKind::KmaxFltlPass;
  else
    v.kind = final_states.empty() ? VerdictKind::PrefixViolation
                                  : VerdictKind::KmaxFltlFail;
  return v;
}

}  // namespace ltltest
