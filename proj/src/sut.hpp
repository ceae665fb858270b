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

#include "error.hpp"
#include "vars.hpp"

namespace ltltest {

/// One executable session with a black-box reactive system. After reset(),
/// behavior is a function of the subsequent input sequence only. A session
/// is single-threaded and not shareable.
class SutSession {
 public:
  virtual ~SutSession() = default;

  virtual void reset() = 0;

  /// Feeds one input assignment (total over the declared inputs) and
  /// returns the produced output assignment (total over the declared
  /// outputs). Throws SutError on communication failure.
  virtual Assignment step(const Assignment& input) = 0;
};

}  // namespace ltltest
