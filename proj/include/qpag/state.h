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
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qpag/machine.h"

namespace qpag {

// Basis vector (q, k, w_s, w_g) of the QPAG evolution space. The stack starts
// with the bottom marker; the garbage tape never contains it.
struct Configuration {
  StateId state = 0;
  std::uint32_t head = 0;
  SymbolString stack;
  SymbolString garbage;

  auto operator<=>(const Configuration&) const = default;
};

// Sparse amplitude map. std::map keeps iteration in configuration order, which
// fixes the floating-point summation order of every engine.
struct StateVector {
  std::map<Configuration, Amplitude> entries;

  double norm_squared() const;
  std::size_t size() const { return entries.size(); }
  bool empty() const { return entries.empty(); }
};

struct StepSnapshot {
  std::int64_t step = 0;
  // Largest surviving non-halting amplitudes, by magnitude then configuration.
  std::vector<std::pair<Configuration, Amplitude>> survivors;
  double p_acc_delta = 0.0;
  double p_rej_delta = 0.0;
};

struct RunResult {
  double p_acc = 0.0;
  double p_rej = 0.0;
  double p_non = 0.0;
  double truncation_loss = 0.0;
  std::int64_t steps = 0;
  std::vector<StepSnapshot> trace;
  std::vector<std::string> warnings;

  double total() const { return p_acc + p_rej + p_non + truncation_loss; }
};

// Top-k entries ordered by descending magnitude, ties by configuration.
std::vector<std::pair<Configuration, Amplitude>> top_entries(const StateVector& v,
                                                             std::size_t k);

std::string describe(const Configuration& c, const MachineBase& m);

}  // namespace qpag
