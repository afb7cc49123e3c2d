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

#include "qpag/sim_ppa.h"

#include <cstdio>
#include <stdexcept>

#include "qpag/errors.h"

namespace qpag {

RunResult run_ppa(const MachinePPA& m, std::span<const std::string> word,
                  const PpaRunOptions& options) {
  const std::int64_t max_steps = options.max_steps.value_or(default_max_steps(word.size()));
  if (max_steps < 1) throw std::invalid_argument("max_steps must be at least 1");
  const Tape tape = make_tape(m, word);
  const ColumnIndex<TransitionPPA> index(m, m.transitions);
  const HaltingTable halting(m);

  RunResult result;
  ClassicalDist dist;
  dist[{m.initial, 0, single_symbol(m.stack.bottom)}] = 1.0;
  double stuck = 0.0;
  double leaked = 0.0;
  auto mass = [](const ClassicalDist& d) {
    double s = 0.0;
    for (const auto& [c, p] : d) s += p;
    return s;
  };

  while (result.steps < max_steps && mass(dist) >= 1e-12) {
    const double mass_in = mass(dist);
    ClassicalDist next;
    double out = 0.0;
    for (const auto& [c, p] : dist) {
      if (c.head >= tape.size()) {
        stuck += p;
        out += p;
        continue;
      }
      auto column = index.column(c.state, tape[c.head], back_symbol(c.stack));
      if (column.empty()) {
        stuck += p;
        leaked += p;
        out += p;
        continue;
      }
      for (const auto& t : column) {
        if (t.prob == 0.0) continue;
        auto update = apply_stack_op(c.stack, t.op);
        next[{t.to, c.head + offset(t.move), std::move(update.stack)}] += p * t.prob;
      }
      if (next.size() > options.max_configurations) {
        throw StateSpaceOverflow("distribution exceeded " +
                                 std::to_string(options.max_configurations) + " configurations");
      }
    }
    ++result.steps;
    out += mass(next);
    result.truncation_loss += mass_in - out;
    dist.clear();
    for (auto& [c, p] : next) {
      if (halting.accepting(c.state)) {
        result.p_acc += p;
      } else if (halting.rejecting(c.state)) {
        result.p_rej += p;
      } else {
        dist.emplace(c, p);
      }
    }
    result.p_non = mass(dist) + stuck;
    if (options.on_step) options.on_step(result.steps, dist, result);
  }
  result.p_non = mass(dist) + stuck;
  if (leaked > 0.0) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "undefined columns held %.3g of probability mass", leaked);
    result.warnings.push_back(buf);
  }
  return result;
}

const char* to_string(DpdaVerdict v) {
  switch (v) {
    case DpdaVerdict::kAccept: return "accept";
    case DpdaVerdict::kReject: return "reject";
    case DpdaVerdict::kLoop: return "loop";
    case DpdaVerdict::kBlock: return "block";
  }
  return "?";
}

DpdaOutcome run_dpda(const MachinePPA& m, std::span<const std::string> word,
                     std::optional<std::int64_t> max_steps) {
  const std::int64_t cap = max_steps.value_or(default_max_steps(word.size()));
  const Tape tape = make_tape(m, word);
  const ColumnIndex<TransitionPPA> index(m, m.transitions);
  const HaltingTable halting(m);

  ClassicalConfiguration c{m.initial, 0, single_symbol(m.stack.bottom)};
  DpdaOutcome out;
  while (true) {
    if (halting.accepting(c.state)) return {DpdaVerdict::kAccept, out.steps};
    if (halting.rejecting(c.state)) return {DpdaVerdict::kReject, out.steps};
    if (out.steps >= cap) return {DpdaVerdict::kLoop, out.steps};
    if (c.head >= tape.size()) return {DpdaVerdict::kBlock, out.steps};
    const TransitionPPA* chosen = nullptr;
    for (const auto& t : index.column(c.state, tape[c.head], back_symbol(c.stack))) {
      if (t.prob == 0.0) continue;
      if (chosen != nullptr || t.prob != 1.0) {
        throw NotDeterministic("column of state '" + m.state_name(c.state) +
                               "' is not a single probability-1 transition");
      }
      chosen = &t;
    }
    if (chosen == nullptr) return {DpdaVerdict::kBlock, out.steps};
    auto update = apply_stack_op(c.stack, chosen->op);
    c = {chosen->to, c.head + offset(chosen->move), std::move(update.stack)};
    ++out.steps;
  }
}

MachineQPAG to_qpag(const MachinePPA& m) {
  MachineQPAG q;
  static_cast<MachineBase&>(q) = m;
  for (const auto& t : m.transitions) {
    if (t.prob == 0.0) continue;
    if (t.prob != 1.0) {
      throw InvariantError("invariant violated: probabilities ∈ {0, 1} (state '" +
                           m.state_name(t.from) + "')");
    }
    q.transitions.push_back({t.from, t.read, t.top, t.to, t.op, t.move, Amplitude{1.0}});
  }
  return q;
}

}  // namespace qpag
