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

#include "mealy.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "error.hpp"
#include "rng.hpp"

namespace ltltest {

namespace {

constexpr std::size_t kMaxInputVars = 16;

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t' || text[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t' &&
           text[j] != '\r')
      ++j;
    out.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

// Parses "name=0" tokens into a total assignment over `vars`.
Assignment parse_assignment(const std::vector<std::string>& tokens,
                            std::size_t begin, std::size_t end,
                            const VarTable& vars, std::uint32_t lineno) {
  Assignment a(vars.size(), false);
  std::vector<bool> seen(vars.size(), false);
  for (std::size_t i = begin; i < end; ++i) {
    const std::string& tok = tokens[i];
    std::size_t eq = tok.find('=');
    if (eq == std::string::npos || eq + 2 != tok.size() ||
        (tok[eq + 1] != '0' && tok[eq + 1] != '1'))
      throw ParseError("expected name=0 or name=1, got '" + tok + "'", lineno,
                       1);
    auto v = vars.find(tok.substr(0, eq));
    if (!v)
      throw ParseError("undeclared variable '" + tok.substr(0, eq) + "'",
                       lineno, 1);
    if (seen[*v])
      throw ParseError("variable '" + vars.name(*v) + "' assigned twice",
                       lineno, 1);
    seen[*v] = true;
    a.set(*v, tok[eq + 1] == '1');
  }
  for (std::size_t v = 0; v < vars.size(); ++v)
    if (!seen[v])
      throw ParseError("missing assignment for '" +
                           vars.name(static_cast<VarId>(v)) + "'",
                       lineno, 1);
  return a;
}

std::uint32_t parse_state(const std::string& tok, std::uint32_t lineno) {
  if (tok.empty() ||
      !std::all_of(tok.begin(), tok.end(),
                   [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError("expected a state number, got '" + tok + "'", lineno, 1);
  return static_cast<std::uint32_t>(std::stoul(tok));
}

}  // namespace

MealyMachine::MealyMachine(VarTable inputs, VarTable outputs,
                           std::size_t num_states, std::uint32_t init)
    : inputs_(std::move(inputs)),
      outputs_(std::move(outputs)),
      num_states_(num_states),
      init_(init) {
  if (inputs_.size() > kMaxInputVars)
    throw LimitError("mealy machine with more than " +
                     std::to_string(kMaxInputVars) + " inputs");
  if (num_states_ == 0) throw Error("mealy machine needs at least one state");
  if (init_ >= num_states_) throw Error("initial state out of range");
  table_.resize(num_states_ * num_input_words());
  defined_.resize(table_.size(), false);
}

Assignment MealyMachine::input_word(std::size_t index) const {
  Assignment a(inputs_.size(), false);
  for (std::size_t j = 0; j < inputs_.size(); ++j)
    a.set(static_cast<VarId>(j), (index >> j) & 1);
  return a;
}

std::size_t MealyMachine::input_index(const Assignment& input) const {
  std::size_t index = 0;
  for (std::size_t j = 0; j < inputs_.size(); ++j)
    if (input.get(static_cast<VarId>(j))) index |= 1ull << j;
  return index;
}

void MealyMachine::set_transition(std::uint32_t state, const Assignment& input,
                                  std::uint32_t next, Assignment output) {
  if (state >= num_states_ || next >= num_states_)
    throw Error("transition state out of range");
  if (output.size() != outputs_.size())
    throw Error("output assignment has wrong arity");
  std::size_t slot = state * num_input_words() + input_index(input);
  table_[slot] = {next, std::move(output)};
  defined_[slot] = true;
}

const MealyMachine::Transition& MealyMachine::transition(
    std::uint32_t state, const Assignment& input) const {
  return table_[state * num_input_words() + input_index(input)];
}

MealyMachine::Transition& MealyMachine::transition_entry(
    std::uint32_t state, std::size_t input_index) {
  return table_[state * num_input_words() + input_index];
}

const MealyMachine::Transition& MealyMachine::transition_entry(
    std::uint32_t state, std::size_t input_index) const {
  return table_[state * num_input_words() + input_index];
}

void MealyMachine::check_total() const {
  for (std::size_t state = 0; state < num_states_; ++state)
    for (std::size_t w = 0; w < num_input_words(); ++w)
      if (!defined_[state * num_input_words() + w])
        throw Error("state " + std::to_string(state) +
                    " has no transition for input '" +
                    input_word(w).to_string(inputs_) + "'");
}

MealyMachine MealyMachine::parse(std::string_view text) {
  std::vector<std::string> input_names, output_names;
  bool saw_inputs = false, saw_outputs = false, saw_init = false;
  std::uint32_t init = 0;
  // Transition rows kept as raw tokens until the declarations are settled.
  std::vector<std::pair<std::vector<std::string>, std::uint32_t>> rows;

  std::uint32_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++lineno;
    std::size_t resume = end + 1;

    std::string_view line = raw.substr(0, raw.find('#'));
    std::vector<std::string> tokens = tokenize(line);
    if (!tokens.empty()) {
      if (tokens[0] == ".inputs") {
        if (saw_inputs)
          throw ParseError("duplicate .inputs directive", lineno, 1);
        saw_inputs = true;
        input_names.assign(tokens.begin() + 1, tokens.end());
        if (input_names.empty())
          throw ParseError(".inputs needs at least one identifier", lineno, 1);
      } else if (tokens[0] == ".outputs") {
        if (saw_outputs)
          throw ParseError("duplicate .outputs directive", lineno, 1);
        saw_outputs = true;
        output_names.assign(tokens.begin() + 1, tokens.end());
        if (output_names.empty())
          throw ParseError(".outputs needs at least one identifier", lineno,
                           1);
      } else if (tokens[0] == ".init") {
        if (saw_init) throw ParseError("duplicate .init directive", lineno, 1);
        if (tokens.size() != 2)
          throw ParseError(".init takes exactly one state", lineno, 1);
        saw_init = true;
        init = parse_state(tokens[1], lineno);
      } else {
        rows.emplace_back(std::move(tokens), lineno);
      }
    }
    if (end == text.size()) break;
    start = resume;
  }

  if (!saw_inputs) throw Error("mealy machine has no .inputs declaration");
  if (!saw_outputs) throw Error("mealy machine has no .outputs declaration");
  if (!saw_init) throw Error("mealy machine has no .init declaration");
  if (rows.empty()) throw Error("mealy machine has no transitions");

  VarTable inputs, outputs;
  for (const std::string& n : input_names) inputs.add(n);
  for (const std::string& n : output_names) {
    if (inputs.find(n))
      throw Error("variable '" + n + "' declared as both input and output");
    outputs.add(n);
  }

  // The state count is the highest id mentioned anywhere; totality per
  // state is enforced below.
  std::uint32_t max_state = init;
  struct Row {
    std::uint32_t src, dst, lineno;
    Assignment input, output;
  };
  std::vector<Row> parsed;
  for (auto& [tokens, rowline] : rows) {
    auto arrow = std::find(tokens.begin(), tokens.end(), "->");
    auto bar1 = std::find(tokens.begin(), tokens.end(), "|");
    if (tokens.size() < 5 || bar1 == tokens.end() || arrow == tokens.end() ||
        bar1 > arrow)
      throw ParseError("expected '<state> | <inputs> -> <state> | <outputs>'",
                       rowline, 1);
    auto bar2 = std::find(arrow + 1, tokens.end(), "|");
    if (bar2 == tokens.end() || bar1 != tokens.begin() + 1 ||
        arrow + 2 != bar2)
      throw ParseError("expected '<state> | <inputs> -> <state> | <outputs>'",
                       rowline, 1);

    Row row;
    row.lineno = rowline;
    row.src = parse_state(tokens[0], rowline);
    row.dst = parse_state(*(arrow + 1), rowline);
    std::size_t in_begin = 2;
    std::size_t in_end = static_cast<std::size_t>(arrow - tokens.begin());
    std::size_t out_begin = static_cast<std::size_t>(bar2 - tokens.begin()) + 1;
    row.input = parse_assignment(tokens, in_begin, in_end, inputs, rowline);
    row.output =
        parse_assignment(tokens, out_begin, tokens.size(), outputs, rowline);
    max_state = std::max({max_state, row.src, row.dst});
    parsed.push_back(std::move(row));
  }

  MealyMachine machine(std::move(inputs), std::move(outputs), max_state + 1,
                       init);
  std::vector<bool> filled(machine.num_states() * machine.num_input_words(),
                           false);
  for (const Row& row : parsed) {
    std::size_t slot =
        row.src * machine.num_input_words() + machine.input_index(row.input);
    if (filled[slot])
      throw ParseError("duplicate transition for state " +
                           std::to_string(row.src) + " input '" +
                           row.input.to_string(machine.inputs()) + "'",
                       row.lineno, 1);
    filled[slot] = true;
    machine.set_transition(row.src, row.input, row.dst, row.output);
  }
  machine.check_total();
  return machine;
}

MealyMachine MealyMachine::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open mealy file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string MealyMachine::to_string() const {
  std::string out = ".inputs";
  for (const std::string& n : inputs_.names()) out += " " + n;
  out += "\n.outputs";
  for (const std::string& n : outputs_.names()) out += " " + n;
  out += "\n.init " + std::to_string(init_) + "\n";
  for (std::size_t state = 0; state < num_states_; ++state) {
    for (std::size_t w = 0; w < num_input_words(); ++w) {
      const Transition& t = table_[state * num_input_words() + w];
      out += std::to_string(state) + " | " + input_word(w).to_string(inputs_) +
             " -> " + std::to_string(t.next) + " | " +
             t.output.to_string(outputs_) + "\n";
    }
  }
  return out;
}

std::string Mutation::describe(const MealyMachine& machine) const {
  std::string entry = "state " + std::to_string(state) + " on '" +
                      machine.input_word(input_index).to_string(
                          machine.inputs()) +
                      "'";
  if (kind == Kind::RetargetTransition)
    return "retarget " + entry + ": " + std::to_string(old_target) + " -> " +
           std::to_string(new_target);
  return "flip output " + machine.outputs().name(output_var) + " at " + entry;
}

std::pair<MealyMachine, Mutation> mutate(const MealyMachine& machine,
                                         std::uint64_t seed) {
  Rng rng(seed);
  const bool can_retarget = machine.num_states() >= 2;
  const bool can_flip = machine.outputs().size() >= 1;
  if (!can_retarget && !can_flip)
    throw Error("no applicable mutation for this machine");

  Mutation::Kind kind;
  if (can_retarget && can_flip)
    kind = rng.coin() ? Mutation::Kind::RetargetTransition
                      : Mutation::Kind::FlipOutputBit;
  else
    kind = can_retarget ? Mutation::Kind::RetargetTransition
                        : Mutation::Kind::FlipOutputBit;

  const std::size_t entries = machine.num_states() * machine.num_input_words();
  const std::size_t slot = rng.below(entries);

  Mutation mutation;
  mutation.kind = kind;
  mutation.state = static_cast<std::uint32_t>(slot / machine.num_input_words());
  mutation.input_index = slot % machine.num_input_words();

  MealyMachine mutant = machine;
  MealyMachine::Transition& t =
      mutant.transition_entry(mutation.state, mutation.input_index);

  if (kind == Mutation::Kind::RetargetTransition) {
    // Uniform over the other states; identity retargets are excluded.
    std::uint32_t pick =
        static_cast<std::uint32_t>(rng.below(machine.num_states() - 1));
    if (pick >= t.next) ++pick;
    mutation.old_target = t.next;
    mutation.new_target = pick;
    t.next = pick;
  } else {
    mutation.output_var = static_cast<VarId>(rng.below(machine.outputs().size()));
    t.output.set(mutation.output_var, !t.output.get(mutation.output_var));
  }
  return {std::move(mutant), mutation};
}

}  // namespace ltltest
