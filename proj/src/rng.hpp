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

#include <cstdint>

namespace ltltest {

/// splitmix64; small, seedable and identical on every platform, which keeps
/// seeded campaigns byte-for-byte reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform-ish value in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  bool coin() { return next() & 1; }

 private:
  std::uint64_t state_;
};

/// Stable combination of a campaign seed with per-run/per-target indices.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  Rng rng(seed ^ (salt * 0x9e3779b97f4a7c15ull + 0x165667b19e3779f9ull));
  return rng.next();
}

}  // namespace ltltest
