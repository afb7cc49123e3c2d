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

#include "qpag/stack_op.h"

#include "qpag/errors.h"

namespace qpag {

StackUpdate apply_stack_op(const SymbolString& stack, const StackOp& op) {
  switch (op.kind) {
    case StackOp::Kind::kPush:
      return {stack + op.payload, {}};
    case StackOp::Kind::kEpsilon:
      return {stack, {}};
    case StackOp::Kind::kPop:
      if (stack.size() <= 1) throw PopOnBottom("pop on the bottom marker");
      return {stack.substr(0, stack.size() - 1), stack.substr(stack.size() - 1)};
  }
  return {stack, {}};
}

std::string describe(const StackOp& op, const Alphabet& stack_symbols) {
  switch (op.kind) {
    case StackOp::Kind::kPush:
      return "push(" + stack_symbols.format(op.payload) + ")";
    case StackOp::Kind::kEpsilon:
      return "ε";
    case StackOp::Kind::kPop:
      return "pop";
  }
  return "?";
}

}  // namespace qpag
