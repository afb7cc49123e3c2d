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

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qpag/machine.h"

namespace qpag {

// Bookkeeping for a QCPDA compiled into a QPAG. Original states keep their
// ids; aux states and label symbols are appended.
struct CompileMap {
  struct AuxPair {
    StateId push_state = 0;  // q_a(q'): pushes the label
    StateId pop_state = 0;   // q_b(q'): pops the label onto the garbage tape
  };
  struct Counts {
    std::uint64_t original = 0;
    std::uint64_t first_step = 0;
    std::uint64_t label_push = 0;
    std::uint64_t label_pop = 0;
    std::uint64_t total = 0;
  };

  // Original state id -> image state id (identity on ids).
  std::vector<StateId> state_map;
  // Keyed by the original target state q'.
  std::map<StateId, AuxPair> aux_states;
  // Stack operation -> fresh stack symbol in the compiled machine.
  std::vector<std::pair<StackOp, SymbolId>> labels;
  Counts counts;
};

struct Compiled {
  MachineQPAG machine;
  CompileMap map;
};

// Each transition q -> q' becomes three micro-steps: the original move with
// stack op σ(q'), a stationary push of the label for σ(q'), and a stationary
// pop that moves the label to the garbage tape. Halting targets are reached
// directly. Throws NonWellFormedInput if the QCPDA fails check_qcpda.
Compiled compile(const MachineQCPDA& m);

struct WordDelta {
  std::vector<std::string> word;
  double p_acc_original = 0.0;
  double p_acc_compiled = 0.0;
  double p_rej_original = 0.0;
  double p_rej_compiled = 0.0;
  double delta_acc = 0.0;
  double delta_rej = 0.0;
};

struct EquivReport {
  bool passed = true;
  double tolerance = kDefaultTolerance;
  double max_delta = 0.0;
  std::vector<WordDelta> words;
  // Macro-step boundaries where two configurations share garbage but not
  // stack contents.
  std::uint64_t decoherence_violations = 0;
  std::uint64_t decoherence_checks = 0;
};

// Runs both machines on every word (the compiled one with three times the
// step budget) and compares acceptance and rejection probabilities.
EquivReport equiv_check(const MachineQCPDA& original, const MachineQPAG& compiled,
                        std::span<const std::vector<std::string>> words,
                        std::int64_t max_steps, double tol = kDefaultTolerance);

}  // namespace qpag
