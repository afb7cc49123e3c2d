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

#include "qpag/sim_qcpda.h"

#include <cmath>
#include <stdexcept>
#include <tuple>

#include "qpag/errors.h"

namespace qpag {

namespace {

constexpr double kEntryFloor = 1e-24;

using BranchKey =
    std::pair<SymbolString, std::vector<std::tuple<StateId, std::uint32_t, long long, long long>>>;

BranchKey key_of(const Branch& b) {
  BranchKey key{b.stack, {}};
  for (const auto& [c, amp] : b.psi) {
    key.second.emplace_back(c.state, c.head, std::llround(amp.real() * 1e10),
                            std::llround(amp.imag() * 1e10));
  }
  return key;
}

}  // namespace

Branch initial_branch(const MachineQCPDA& m) {
  Branch b;
  b.stack = single_symbol(m.stack.bottom);
  b.psi[{m.initial, 0}] = 1.0;
  return b;
}

QcpdaStepResult qcpda_step(const MachineQCPDA& m, const ColumnIndex<TransitionQCPDA>& index,
                           const Tape& tape, const Branch& branch) {
  QcpdaStepResult r;
  const SymbolId top = back_symbol(branch.stack);
  QuantumState evolved;
  for (const auto& [c, alpha] : branch.psi) {
    if (c.head >= tape.size()) {
      r.parked += branch.prob * std::norm(alpha);
      continue;
    }
    for (const auto& t : index.column(c.state, tape[c.head], top)) {
      evolved[{t.to, c.head + offset(t.move)}] += alpha * t.amp;
    }
  }

  std::map<Outcome, QuantumState> parts;
  for (const auto& [c, amp] : evolved) {
    if (branch.prob * std::norm(amp) < kEntryFloor) continue;
    Outcome o;
    if (m.is_accepting(c.state)) {
      o.kind = Outcome::Kind::kAccept;
    } else if (m.is_rejecting(c.state)) {
      o.kind = Outcome::Kind::kReject;
    } else {
      o.op = m.sigma.at(c.state);
    }
    parts[o].emplace(c, amp);
  }

  double out = r.parked;
  for (auto& [o, part] : parts) {
    double norm = 0.0;
    for (const auto& [c, amp] : part) norm += std::norm(amp);
    const double p = branch.prob * norm;
    out += p;
    if (o.kind == Outcome::Kind::kAccept) {
      r.p_acc_delta += p;
    } else if (o.kind == Outcome::Kind::kReject) {
      r.p_rej_delta += p;
    } else {
      Branch child;
      child.prob = p;
      child.stack = apply_stack_op(branch.stack, o.op).stack;
      child.steps = branch.steps + 1;
      const double scale = 1.0 / std::sqrt(norm);
      for (auto& [c, amp] : part) child.psi.emplace(c, amp * scale);
      r.children.emplace_back(o, std::move(child));
    }
  }
  r.truncated = branch.prob - out;
  return r;
}

QcpdaStepResult qcpda_step(const MachineQCPDA& m, const Tape& tape, const Branch& branch) {
  const ColumnIndex<TransitionQCPDA> index(m, m.transitions);
  return qcpda_step(m, index, tape, branch);
}

RunResult run_qcpda(const MachineQCPDA& m, std::span<const std::string> word,
                    const QcpdaRunOptions& options) {
  const std::int64_t max_steps = options.max_steps.value_or(default_max_steps(word.size()));
  if (max_steps < 1) throw std::invalid_argument("max_steps must be at least 1");
  if (!(options.prune_prob >= 0.0 && options.prune_prob < 1e-6)) {
    throw std::invalid_argument("prune_prob must lie in [0, 1e-6)");
  }
  const Tape tape = make_tape(m, word);
  const ColumnIndex<TransitionQCPDA> index(m, m.transitions);

  RunResult result;
  std::vector<Branch> frontier{initial_branch(m)};
  double parked = 0.0;
  auto live = [](const std::vector<Branch>& f) {
    double s = 0.0;
    for (const auto& b : f) s += b.prob;
    return s;
  };

  while (result.steps < max_steps && live(frontier) >= 1e-12) {
    std::map<BranchKey, std::size_t> seen;
    std::vector<Branch> next;
    for (const auto& b : frontier) {
      auto r = qcpda_step(m, index, tape, b);
      result.p_acc += r.p_acc_delta;
      result.p_rej += r.p_rej_delta;
      parked += r.parked;
      result.truncation_loss += r.truncated;
      for (auto& [o, child] : r.children) {
        if (child.prob < options.prune_prob) {
          result.truncation_loss += child.prob;
          continue;
        }
        auto [it, fresh] = seen.emplace(key_of(child), next.size());
        if (fresh) {
          next.push_back(std::move(child));
        } else {
          next[it->second].prob += child.prob;
        }
      }
      if (next.size() > options.max_branches) {
        throw StateSpaceOverflow("branch frontier exceeded " +
                                 std::to_string(options.max_branches) + " branches");
      }
    }
    ++result.steps;
    frontier = std::move(next);
    result.p_non = live(frontier) + parked;
    if (options.on_step) options.on_step(result.steps, frontier, result);
  }
  result.p_non = live(frontier) + parked;
  return result;
}

}  // namespace qpag
