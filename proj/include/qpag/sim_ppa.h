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

#include "qpag/machine.h"
#include "qpag/state.h"

namespace qpag {

struct ClassicalConfiguration {
  StateId state = 0;
  std::uint32_t head = 0;
  SymbolString stack;

  auto operator<=>(const ClassicalConfiguration&) const = default;
};

using ClassicalDist = std::map<ClassicalConfiguration, double>;

struct PpaRunOptions {
  std::optional<std::int64_t> max_steps;
  std::size_t max_configurations = 1'000'000;
  std::function<void(std::int64_t, const ClassicalDist&, const RunResult&)> on_step;
};

// Exact propagation of the configuration distribution. Mass on undefined
// columns or past the right endmarker is kept as non-halting.
RunResult run_ppa(const MachinePPA& m, std::span<const std::string> word,
                  const PpaRunOptions& options = {});

enum class DpdaVerdict { kAccept, kReject, kLoop, kBlock };

const char* to_string(DpdaVerdict v);

struct DpdaOutcome {
  DpdaVerdict verdict = DpdaVerdict::kBlock;
  std::int64_t steps = 0;
};

// Follows the unique computation path. Throws NotDeterministic if a column
// has more than one transition or a probability other than 1.
DpdaOutcome run_dpda(const MachinePPA& m, std::span<const std::string> word,
                     std::optional<std::int64_t> max_steps = std::nullopt);

// Amplitude-1 QPAG with the same transitions. Requires all probabilities in
// {0, 1}; zero-probability rows are dropped.
MachineQPAG to_qpag(const MachinePPA& m);

}  // namespace qpag
