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
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qpag/machine.h"
#include "qpag/state.h"

namespace qpag {

// Configuration (q, k) of the quantum portion.
struct QuantumConfiguration {
  StateId state = 0;
  std::uint32_t head = 0;

  auto operator<=>(const QuantumConfiguration&) const = default;
};

using QuantumState = std::map<QuantumConfiguration, Amplitude>;

// One classical stack with the quantum state conditioned on it.
struct Branch {
  double prob = 1.0;
  SymbolString stack;
  QuantumState psi;  // unit norm
  std::int64_t steps = 0;
};

struct Outcome {
  enum class Kind : std::uint8_t { kAccept, kReject, kStackOp };

  Kind kind = Kind::kStackOp;
  StackOp op;

  auto operator<=>(const Outcome&) const = default;
};

struct QcpdaStepResult {
  std::vector<std::pair<Outcome, Branch>> children;
  double p_acc_delta = 0.0;
  double p_rej_delta = 0.0;
  // Probability mass with the head past the right endmarker.
  double parked = 0.0;
  // Probability mass lost to undefined columns or pruning.
  double truncated = 0.0;
};

// Applies U_a for the branch's stack top, measures with respect to the
// outcome decomposition (acc, rej, one class per stack operation) and
// returns one renormalized child per nonzero outcome, stack updated.
QcpdaStepResult qcpda_step(const MachineQCPDA& m, const ColumnIndex<TransitionQCPDA>& index,
                           const Tape& tape, const Branch& branch);
QcpdaStepResult qcpda_step(const MachineQCPDA& m, const Tape& tape, const Branch& branch);

Branch initial_branch(const MachineQCPDA& m);

struct QcpdaRunOptions {
  std::optional<std::int64_t> max_steps;
  double prune_prob = 0.0;
  std::size_t max_branches = 100'000;
  // Called after every frontier expansion.
  std::function<void(std::int64_t, const std::vector<Branch>&, const RunResult&)> on_step;
};

// Breadth-first expansion of the branch tree. Identical branches (same stack,
// amplitudes equal after rounding to 1e-10) are merged.
RunResult run_qcpda(const MachineQCPDA& m, std::span<const std::string> word,
                    const QcpdaRunOptions& options = {});

}  // namespace qpag
