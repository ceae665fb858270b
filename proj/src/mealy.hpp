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
#include <string>
#include <vector>

#include "sut.hpp"
#include "vars.hpp"

namespace ltltest {

/// Deterministic reactive state machine: output and successor are a total
/// function of the current state and the current input assignment.
///
/// File format (line oriented, # comments):
///
///   .inputs <id>+
///   .outputs <id>+
///   .init <state>
///   <state> | <in assignments> -> <state> | <out assignments>
///
/// with assignments written name=0|1, total over the respective block.
/// Every state mentioned anywhere must have one row per input assignment.
class MealyMachine {
 public:
  struct Transition {
    std::uint32_t next = 0;
    Assignment output;
  };

  MealyMachine(VarTable inputs, VarTable outputs, std::size_t num_states,
               std::uint32_t init);

  static MealyMachine parse(std::string_view text);
  static MealyMachine load_file(const std::string& path);

  /// Canonical serialization: states ascending, input assignments in binary
  /// counting order, assignments in declaration order. parse(to_string())
  /// reproduces the machine exactly.
  std::string to_string() const;

  void set_transition(std::uint32_t state, const Assignment& input,
                      std::uint32_t next, Assignment output);

  const Transition& transition(std::uint32_t state,
                               const Assignment& input) const;
  Transition& transition_entry(std::uint32_t state, std::size_t input_index);
  const Transition& transition_entry(std::uint32_t state,
                                     std::size_t input_index) const;

  std::size_t num_states() const { return num_states_; }
  std::uint32_t init() const { return init_; }
  const VarTable& inputs() const { return inputs_; }
  const VarTable& outputs() const { return outputs_; }
  std::size_t num_input_words() const { return 1ull << inputs_.size(); }

  /// The input assignment with the given binary encoding.
  Assignment input_word(std::size_t index) const;
  std::size_t input_index(const Assignment& input) const;

  /// Throws Error unless every (state, input) entry has been set.
  void check_total() const;

 private:
  VarTable inputs_;
  VarTable outputs_;
  std::size_t num_states_;
  std::uint32_t init_;
  std::vector<Transition> table_;  // state-major, 2^|inputs| per state
  std::vector<bool> defined_;
};

/// In-process session over a machine.
class MealySession : public SutSession {
 public:
  explicit MealySession(std::shared_ptr<const MealyMachine> machine)
      : machine_(std::move(machine)), state_(machine_->init()) {}

  void reset() override { state_ = machine_->init(); }

  Assignment step(const Assignment& input) override {
    const auto& t = machine_->transition(state_, input);
    state_ = t.next;
    return t.output;
  }

  std::uint32_t state() const { return state_; }

 private:
  std::shared_ptr<const MealyMachine> machine_;
  std::uint32_t state_;
};

/// A single-fault variant: exactly one transition entry differs from the
/// parent, either by its target state or by one flipped output bit.
struct Mutation {
  enum class Kind : std::uint8_t { RetargetTransition, FlipOutputBit };

  Kind kind = Kind::FlipOutputBit;
  std::uint32_t state = 0;
  std::size_t input_index = 0;
  std::uint32_t old_target = 0;  // retarget only
  std::uint32_t new_target = 0;  // retarget only
  VarId output_var = 0;          // flip only

  std::string describe(const MealyMachine& machine) const;
};

/// Applies one uniformly sampled mutation: rule, then transition entry,
/// then parameter. Retargeting to the entry's current successor is
/// excluded, so the mutant always differs structurally; it may still be
/// behaviorally correct for a given specification. Throws Error when no
/// rule applies (single state and no outputs).
std::pair<MealyMachine, Mutation> mutate(const MealyMachine& machine,
                                         std::uint64_t seed);

}  // namespace ltltest
