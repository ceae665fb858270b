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

#include <string>
#include <vector>

#include "formula.hpp"
#include "rng.hpp"
#include "trace.hpp"
#include "vars.hpp"

namespace ltltest::testing {

/// Random formula in the surface grammar (no weak next, no release).
inline FormulaId random_formula(FormulaFactory& f, Rng& rng,
                                const std::vector<std::string>& atoms,
                                int depth) {
  if (depth <= 0) {
    std::uint64_t leaf = rng.below(atoms.size() + 1);
    if (leaf < atoms.size()) return f.atom(atoms[leaf]);
    return rng.coin() ? f.make_true() : f.make_false();
  }
  switch (rng.below(10)) {
    case 0: return f.not_(random_formula(f, rng, atoms, depth - 1));
    case 1:
      return f.and_(random_formula(f, rng, atoms, depth - 1),
                    random_formula(f, rng, atoms, depth - 1));
    case 2:
      return f.or_(random_formula(f, rng, atoms, depth - 1),
                   random_formula(f, rng, atoms, depth - 1));
    case 3:
      return f.implies(random_formula(f, rng, atoms, depth - 1),
                       random_formula(f, rng, atoms, depth - 1));
    case 4:
      return f.iff(random_formula(f, rng, atoms, depth - 1),
                   random_formula(f, rng, atoms, depth - 1));
    case 5: return f.next(random_formula(f, rng, atoms, depth - 1));
    case 6:
      return f.until(random_formula(f, rng, atoms, depth - 1),
                     random_formula(f, rng, atoms, depth - 1));
    case 7: return f.eventually(random_formula(f, rng, atoms, depth - 1));
    case 8: return f.always(random_formula(f, rng, atoms, depth - 1));
    default: return random_formula(f, rng, atoms, 0);
  }
}

/// Random formula over the full evaluator fragment, including weak next
/// and release, which the surface grammar does not offer.
inline FormulaId random_formula_full(FormulaFactory& f, Rng& rng,
                                     const std::vector<std::string>& atoms,
                                     int depth) {
  if (depth <= 0) {
    std::uint64_t leaf = rng.below(atoms.size() + 1);
    if (leaf < atoms.size()) return f.atom(atoms[leaf]);
    return rng.coin() ? f.make_true() : f.make_false();
  }
  auto sub = [&] { return random_formula_full(f, rng, atoms, depth - 1); };
  switch (rng.below(12)) {
    case 0: return f.not_(sub());
    case 1: return f.and_(sub(), sub());
    case 2: return f.or_(sub(), sub());
    case 3: return f.implies(sub(), sub());
    case 4: return f.iff(sub(), sub());
    case 5: return f.next(sub());
    case 6: return f.until(sub(), sub());
    case 7: return f.eventually(sub());
    case 8: return f.always(sub());
    case 9: return f.weak_next(sub());
    case 10: return f.release(sub(), sub());
    default: return random_formula_full(f, rng, atoms, 0);
  }
}

inline Assignment random_assignment(Rng& rng, std::size_t size) {
  Assignment a(size, false);
  for (std::size_t i = 0; i < size; ++i)
    a.set(static_cast<VarId>(i), rng.coin());
  return a;
}

inline Trace random_trace(Rng& rng, std::size_t vars, std::size_t max_len) {
  Trace t;
  std::size_t len = 1 + rng.below(max_len);
  for (std::size_t i = 0; i < len; ++i)
    t.steps.push_back(random_assignment(rng, vars));
  return t;
}

inline LassoWord random_lasso(Rng& rng, std::size_t vars, std::size_t max_u,
                              std::size_t max_v) {
  LassoWord w;
  std::size_t nu = rng.below(max_u + 1);
  std::size_t nv = 1 + rng.below(max_v);
  for (std::size_t i = 0; i < nu; ++i)
    w.prefix.push_back(random_assignment(rng, vars));
  for (std::size_t i = 0; i < nv; ++i)
    w.loop.push_back(random_assignment(rng, vars));
  return w;
}

}  // namespace ltltest::testing
