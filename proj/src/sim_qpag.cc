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

#include "qpag/sim_qpag.h"

#include <cstdio>
#include <stdexcept>

#include "qpag/errors.h"

namespace qpag {

namespace {

constexpr double kHaltMass = 1e-12;

std::string format_mass(const char* what, double mass) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%s %.3g of probability mass", what, mass);
  return buf;
}

}  // namespace

StateVector initial_vector(const MachineQPAG& m) {
  StateVector v;
  v.entries.emplace(Configuration{m.initial, 0, single_symbol(m.stack.bottom), {}}, Amplitude{1.0});
  return v;
}

std::vector<std::pair<Configuration, Amplitude>> evolve_basis(
    const MachineQPAG& m, const ColumnIndex<TransitionQPAG>& index, const Tape& tape,
    const Configuration& c) {
  std::vector<std::pair<Configuration, Amplitude>> out;
  if (c.head >= tape.size() || c.stack.empty()) return out;
  (void)m;
  for (const auto& t : index.column(c.state, tape[c.head], back_symbol(c.stack))) {
    auto update = apply_stack_op(c.stack, t.op);
    out.push_back({Configuration{t.to, c.head + offset(t.move), std::move(update.stack),
                                 c.garbage + update.garbage_delta},
                   t.amp});
  }
  return out;
}

StepResult step(const MachineQPAG& m, const ColumnIndex<TransitionQPAG>& index,
                const Tape& tape, const StateVector& psi, double prune,
                std::size_t max_configurations) {
  StepResult r;
  for (const auto& [c, alpha] : psi.entries) {
    if (c.head >= tape.size()) {
      r.parked.entries.emplace(c, alpha);
      continue;
    }
    auto image = evolve_basis(m, index, tape, c);
    if (image.empty()) {
      r.vanished += std::norm(alpha);
      continue;
    }
    for (auto& [next, beta] : image) {
      r.next.entries[std::move(next)] += alpha * beta;
    }
    if (r.next.size() > max_configurations) {
      throw StateSpaceOverflow("state vector exceeded " + std::to_string(max_configurations) +
                               " configurations");
    }
  }
  for (auto it = r.next.entries.begin(); it != r.next.entries.end();) {
    if (std::abs(it->second) < prune) {
      r.pruned += std::norm(it->second);
      it = r.next.entries.erase(it);
    } else {
      ++it;
    }
  }
  return r;
}

StepResult step(const MachineQPAG& m, const Tape& tape, const StateVector& psi) {
  const ColumnIndex<TransitionQPAG> index(m, m.transitions);
  return step(m, index, tape, psi);
}

Measurement measure(const MachineQPAG& m, const StateVector& psi) {
  const HaltingTable halting(m);
  Measurement out;
  for (const auto& [c, alpha] : psi.entries) {
    if (halting.accepting(c.state)) {
      out.p_acc += std::norm(alpha);
    } else if (halting.rejecting(c.state)) {
      out.p_rej += std::norm(alpha);
    } else {
      out.non_halting.entries.emplace(c, alpha);
    }
  }
  return out;
}

RunResult run(const MachineQPAG& m, std::span<const std::string> word,
              const QpagRunOptions& options) {
  const std::int64_t max_steps = options.max_steps.value_or(default_max_steps(word.size()));
  if (max_steps < 1) throw std::invalid_argument("max_steps must be at least 1");
  const Tape tape = make_tape(m, word);
  const ColumnIndex<TransitionQPAG> index(m, m.transitions);

  RunResult result;
  StateVector psi = initial_vector(m);
  double parked = 0.0;
  double vanished = 0.0;
  double pruned = 0.0;
  while (result.steps < max_steps && psi.norm_squared() >= kHaltMass) {
    const double mass_in = psi.norm_squared();
    StepResult r = step(m, index, tape, psi, options.prune, options.max_configurations);
    const double mass_out = r.next.norm_squared() + r.parked.norm_squared();
    result.truncation_loss += mass_in - mass_out;
    vanished += r.vanished;
    pruned += r.pruned;
    parked += r.parked.norm_squared();

    Measurement meas = measure(m, r.next);
    ++result.steps;
    result.p_acc += meas.p_acc;
    result.p_rej += meas.p_rej;
    psi = std::move(meas.non_halting);
    result.p_non = psi.norm_squared() + parked;

    if (options.trace_depth > 0) {
      result.trace.push_back({result.steps, top_entries(psi, options.trace_depth), meas.p_acc,
                              meas.p_rej});
    }
    if (options.on_step) options.on_step(result.steps, psi, result);
  }
  result.p_non = psi.norm_squared() + parked;

  if (vanished > 0.0) result.warnings.push_back(format_mass("undefined columns absorbed", vanished));
  if (pruned > 0.0) result.warnings.push_back(format_mass("pruning removed", pruned));
  if (parked > 0.0) result.warnings.push_back(format_mass("head past the right endmarker parked", parked));
  if (psi.norm_squared() >= kHaltMass) {
    result.warnings.push_back(format_mass("step cap reached with non-halting", psi.norm_squared()));
  }
  return result;
}

}  // namespace qpag
