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

#include <compare>
#include <cstdint>
#include <utility>

#include "qpag/symbols.h"

namespace qpag {

// The stack-operation slot of a transition: push a nonempty string, leave the
// stack alone, or pop the top symbol onto the garbage tape.
struct StackOp {
  enum class Kind : std::uint8_t { kPush, kEpsilon, kPop };

  Kind kind = Kind::kEpsilon;
  SymbolString payload;  // nonempty iff kind == kPush

  static StackOp push(SymbolString s) { return {Kind::kPush, std::move(s)}; }
  static StackOp epsilon() { return {Kind::kEpsilon, {}}; }
  static StackOp pop() { return {Kind::kPop, {}}; }

  bool is_push() const { return kind == Kind::kPush; }
  bool is_epsilon() const { return kind == Kind::kEpsilon; }
  bool is_pop() const { return kind == Kind::kPop; }

  auto operator<=>(const StackOp&) const = default;
};

enum class Move : std::uint8_t { kStay = 0, kRight = 1 };

inline std::uint32_t offset(Move m) { return static_cast<std::uint32_t>(m); }

struct StackUpdate {
  SymbolString stack;
  SymbolString garbage_delta;
};

// Applies `op` to a stack whose first symbol is the bottom marker. A pop moves
// the top symbol into the returned garbage delta. Throws PopOnBottom when only
// the bottom marker is left.
StackUpdate apply_stack_op(const SymbolString& stack, const StackOp& op);

// Human-readable form: "push(ab)", "ε", "pop".
std::string describe(const StackOp& op, const Alphabet& stack_symbols);

}  // namespace qpag
