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
#include <optional>
#include <span>
#include <string>

#include "qpag/machine.h"
#include "qpag/state.h"

namespace qpag {

inline constexpr double kPruneThreshold = 1e-12;
inline constexpr std::size_t kDefaultStateCap = 1'000'000;

// |q0, 0, Z, ε> with amplitude 1.
StateVector initial_vector(const MachineQPAG& m);

// Image of one basis configuration under U^x, as (configuration, amplitude)
// pairs in column order. Empty when the column is undefined or the head is
// past the right endmarker.
std::vector<std::pair<Configuration, Amplitude>> evolve_basis(
    const MachineQPAG& m, const ColumnIndex<TransitionQPAG>& index, const Tape& tape,
    const Configuration& c);

struct StepResult {
  StateVector next;
  // Input configurations with no readable symbol. They are not evolved.
  StateVector parked;
  // Squared amplitude of input configurations whose column is undefined.
  double vanished = 0.0;
  // Squared amplitude removed by pruning.
  double pruned = 0.0;
};

// One application of U^x. Contributions to the same configuration are summed
// in configuration order. Throws StateSpaceOverflow when `next` grows past
// `max_configurations`.
StepResult step(const MachineQPAG& m, const ColumnIndex<TransitionQPAG>& index,
                const Tape& tape, const StateVector& psi, double prune = kPruneThreshold,
                std::size_t max_configurations = kDefaultStateCap);
StepResult step(const MachineQPAG& m, const Tape& tape, const StateVector& psi);

struct Measurement {
  StateVector non_halting;  // unnormalized remainder
  double p_acc = 0.0;
  double p_rej = 0.0;
};

// Projective measurement onto E_non ⊕ E_acc ⊕ E_rej.
Measurement measure(const MachineQPAG& m, const StateVector& psi);

struct QpagRunOptions {
  std::optional<std::int64_t> max_steps;  // default_max_steps(|word|)
  std::size_t trace_depth = 0;            // 0 disables the trace
  double prune = kPruneThreshold;
  std::size_t max_configurations = kDefaultStateCap;
  // Called after every measurement with the step number, the unnormalized
  // non-halting vector and the running totals.
  std::function<void(std::int64_t, const StateVector&, const RunResult&)> on_step;
};

// Alternates step and measure from |ψ0> until the non-halting mass falls
// below 1e-12 or `max_steps` is reached. Throws std::invalid_argument when
// max_steps < 1.
RunResult run(const MachineQPAG& m, std::span<const std::string> word,
              const QpagRunOptions& options = {});

}  // namespace qpag
