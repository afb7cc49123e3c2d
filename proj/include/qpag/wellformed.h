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

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qpag/machine.h"
#include "qpag/state.h"

namespace qpag {

// Partial treats columns with no transitions as unconstrained, so a machine
// whose specified columns are orthonormal passes. Total requires every column
// of Q x Σ x Γ to be normalized.
enum class CheckMode { kPartial, kTotal };

const char* to_string(CheckMode mode);
// Accepts "partial" and "total". Throws std::invalid_argument.
CheckMode parse_check_mode(std::string_view text);

// A (state, input symbol, stack top) triple: one column of δ.
struct ColumnRef {
  StateId state = 0;
  SymbolId read = 0;
  SymbolId top = 0;

  auto operator<=>(const ColumnRef&) const = default;
};

struct Witness {
  ColumnRef first;
  std::optional<ColumnRef> second;
  // Stack operations of the two factors, when the condition fixes them.
  std::optional<StackOp> first_op;
  std::optional<StackOp> second_op;
  // Head moves of the two factors, when the condition fixes them.
  std::optional<Move> first_move;
  std::optional<Move> second_move;
  // Offending target state for per-transition checks.
  std::optional<StateId> target;

  auto operator<=>(const Witness&) const = default;
};

struct Violation {
  // One of 1, 2, 3a, 3b, 4, 5a, 5b for quantum machines; stochastic, range,
  // pop_on_bottom for PPAs.
  std::string condition;
  Witness witness;
  // The evaluated sum: squared norm, |inner product| or probability mass.
  double residual = 0.0;
  // Distance of the sum from its required value; always above tolerance.
  double deviation = 0.0;
};

struct WfReport {
  bool passed = true;
  CheckMode mode = CheckMode::kPartial;
  double tolerance = kDefaultTolerance;
  std::vector<Violation> violations;
  // Number of nontrivial sums evaluated per condition, in the order
  // 1, 2, 3a, 3b, 4, 5a, 5b.
  std::array<std::uint64_t, 7> evaluations{};
  std::vector<std::string> notes;

  std::uint64_t evaluations_for(std::string_view condition) const;
  bool has_violation(std::string_view condition) const;
};

// Sufficient conditions for U^x to be unitary on every input, evaluated over
// all column pairs whose images can share a basis configuration.
WfReport check_qpag(const MachineQPAG& m, CheckMode mode = CheckMode::kPartial,
                    double tol = kDefaultTolerance);

// Per stack symbol, the columns (q, input) of U_a over targets (q', D) must be
// normalized, orthogonal at equal head and orthogonal at adjacent heads.
WfReport check_qcpda(const MachineQCPDA& m, CheckMode mode = CheckMode::kPartial,
                     double tol = kDefaultTolerance);

// Every specified column is a probability distribution and never pops Z.
WfReport check_ppa(const MachinePPA& m, double tol = kDefaultTolerance);

struct AuditWitness {
  std::string kind;  // "norm" or "overlap"
  Configuration first;
  std::optional<Configuration> second;
  double value = 0.0;
};

struct AuditReport {
  bool passed = true;
  CheckMode mode = CheckMode::kPartial;
  std::int64_t depth = 0;
  std::uint64_t reachable = 0;
  std::uint64_t checked = 0;
  std::uint64_t undefined_columns = 0;
  std::uint64_t overlapping_pairs = 0;
  std::vector<AuditWitness> witnesses;
  std::vector<std::string> warnings;
};

struct AuditOptions {
  CheckMode mode = CheckMode::kPartial;
  double tol = kDefaultTolerance;
  std::size_t max_configurations = 1'000'000;
  std::size_t max_witnesses = 16;
};

// Direct unitarity check of one evolution step on the configurations reachable
// from the initial one within `depth` steps. Halting configurations and those
// with the head past the right endmarker are outside the evolving subspace and
// are not audited. Throws StateSpaceOverflow.
AuditReport audit_unitarity(const MachineQPAG& m, std::span<const std::string> word,
                            std::int64_t depth, const AuditOptions& options = {});

}  // namespace qpag
