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
#include <stdexcept>
#include <string>

namespace ltltest {

/// Base class for everything thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax or semantic error in an input file, with a 1-based position.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::uint32_t line, std::uint32_t column)
      : Error(msg + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line(line),
        column(column) {}

  std::uint32_t line;
  std::uint32_t column;
};

/// A configurable resource cap was exceeded (automaton states, subsets, ...).
class LimitError : public Error {
 public:
  using Error::Error;
};

/// Communication with a system under test failed (protocol, timeout, exit).
class SutError : public Error {
 public:
  using Error::Error;
};

}  // namespace ltltest
