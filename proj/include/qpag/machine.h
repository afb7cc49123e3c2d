// Copyright 2026 The qpag Authors
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

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "qpag/stack_op.h"
#include "qpag/symbols.h"

namespace qpag {

inline constexpr double kDefaultTolerance = 1e-9;

struct InputAlphabet {
  Alphabet symbols;
  SymbolId left_endmarker = 0;
  SymbolId right_endmarker = 0;

  bool is_endmarker(SymbolId s) const {
    return s == left_endmarker || s == right_endmarker;
  }
  bool operator==(const InputAlphabet&) const = default;
};

struct StackAlphabet {
  Alphabet symbols;
  SymbolId bottom = 0;

  bool operator==(const StackAlphabet&) const = default;
};

// Fields shared by every machine kind: states, alphabets and the halting
// partition. State ids index into `states`.
struct MachineBase {
  std::vector<std::string> states;
  InputAlphabet input;
  StackAlphabet stack;
  StateId initial = 0;
  std::vector<StateId> accepting;
  std::vector<StateId> rejecting;
  // Optional declared G. When present it must contain every push string the
  // transitions use.
  std::optional<std::vector<SymbolString>> declared_push_strings;

  std::size_t num_states() const { return states.size(); }
  std::optional<StateId> find_state(std::string_view name) const;
  // Throws InvariantError for unknown names.
  StateId state_id(std::string_view name) const;
  const std::string& state_name(StateId q) const { return states.at(q); }

  bool is_accepting(StateId q) const {
    return std::find(accepting.begin(), accepting.end(), q) != accepting.end();
  }
  bool is_rejecting(StateId q) const {
    return std::find(rejecting.begin(), rejecting.end(), q) != rejecting.end();
  }
  bool is_halting(StateId q) const { return is_accepting(q) || is_rejecting(q); }

  bool operator==(const MachineBase&) const = default;
};

struct TransitionQPAG {
  StateId from = 0;
  SymbolId read = 0;
  SymbolId top = 0;
  StateId to = 0;
  StackOp op;
  Move move = Move::kRight;
  Amplitude amp;

  auto column_key() const { return std::tie(from, read, top); }
  auto target_key() const { return std::tie(to, op, move); }
  bool operator==(const TransitionQPAG&) const = default;
};

struct TransitionQCPDA {
  StateId from = 0;
  SymbolId read = 0;
  SymbolId top = 0;
  StateId to = 0;
  Move move = Move::kRight;
  Amplitude amp;

  auto column_key() const { return std::tie(from, read, top); }
  auto target_key() const { return std::tie(to, move); }
  bool operator==(const TransitionQCPDA&) const = default;
};

struct TransitionPPA {
  StateId from = 0;
  SymbolId read = 0;
  SymbolId top = 0;
  StateId to = 0;
  StackOp op;
  Move move = Move::kRight;
  double prob = 0.0;

  auto column_key() const { return std::tie(from, read, top); }
  auto target_key() const { return std::tie(to, op, move); }
  bool operator==(const TransitionPPA&) const = default;
};

struct MachineQPAG : MachineBase {
  std::vector<TransitionQPAG> transitions;

  bool operator==(const MachineQPAG&) const = default;
};

struct MachineQCPDA : MachineBase {
  std::vector<TransitionQCPDA> transitions;
  // Stack operation performed after the measurement lands on a state. Total
  // on non-halting states.
  std::map<StateId, StackOp> sigma;

  bool operator==(const MachineQCPDA&) const = default;
};

struct MachinePPA : MachineBase {
  std::vector<TransitionPPA> transitions;

  bool operator==(const MachinePPA&) const = default;
};

// The push strings used by the machine, sorted and deduplicated.
std::vector<SymbolString> inferred_push_strings(const MachineQPAG& m);
std::vector<SymbolString> inferred_push_strings(const MachineQCPDA& m);
std::vector<SymbolString> inferred_push_strings(const MachinePPA& m);

// Structural validation. Throws InvariantError naming the violated rule.
// Pop on the bottom marker is rejected for all three kinds.
void validate(const MachineQPAG& m);
void validate(const MachineQCPDA& m);
void validate(const MachinePPA& m);

// Input word wrapped by the endmarkers. Cell 0 holds the left endmarker.
struct Tape {
  std::vector<SymbolId> cells;

  std::size_t size() const { return cells.size(); }
  SymbolId operator[](std::size_t k) const { return cells[k]; }
};

// Throws UnknownSymbol or EndmarkerInWord.
Tape make_tape(const MachineBase& m, std::span<const std::string> word);

// Componentwise comparison: |re(a-b)| <= tol and |im(a-b)| <= tol.
bool amplitude_close(Amplitude a, Amplitude b, double tol);

// The default step cap for a word of `word_length` symbols.
inline std::int64_t default_max_steps(std::size_t word_length) {
  return 10 * (static_cast<std::int64_t>(word_length) + 2) + 10;
}

// Transitions grouped by column (from, read, top) and sorted by target inside
// each column. Lookup is O(1).
template <class Transition>
class ColumnIndex {
 public:
  ColumnIndex(const MachineBase& m, std::span<const Transition> transitions)
      : num_inputs_(m.input.symbols.size()),
        num_stack_(m.stack.symbols.size()),
        sorted_(transitions.begin(), transitions.end()) {
    std::sort(sorted_.begin(), sorted_.end(), [](const auto& a, const auto& b) {
      if (a.column_key() != b.column_key()) return a.column_key() < b.column_key();
      return a.target_key() < b.target_key();
    });
    offsets_.assign(m.num_states() * num_inputs_ * num_stack_ + 1, 0);
    for (const auto& t : sorted_) ++offsets_[slot(t.from, t.read, t.top) + 1];
    for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
  }

  std::span<const Transition> column(StateId q, SymbolId a, SymbolId b) const {
    const std::size_t s = slot(q, a, b);
    return std::span<const Transition>(sorted_.data() + offsets_[s],
                                       offsets_[s + 1] - offsets_[s]);
  }

  std::span<const Transition> all() const { return sorted_; }

 private:
  std::size_t slot(StateId q, SymbolId a, SymbolId b) const {
    return (static_cast<std::size_t>(q) * num_inputs_ + a) * num_stack_ + b;
  }

  std::size_t num_inputs_;
  std::size_t num_stack_;
  std::vector<Transition> sorted_;
  std::vector<std::size_t> offsets_;
};

// Halting classification cached per state.
class HaltingTable {
 public:
  explicit HaltingTable(const MachineBase& m);

  bool accepting(StateId q) const { return kind_[q] == 1; }
  bool rejecting(StateId q) const { return kind_[q] == 2; }
  bool halting(StateId q) const { return kind_[q] != 0; }

 private:
  std::vector<std::uint8_t> kind_;
};

}  // namespace qpag
