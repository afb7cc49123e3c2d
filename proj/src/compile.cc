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

#include "qpag/compile.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "qpag/errors.h"
#include "qpag/sim_qcpda.h"
#include "qpag/sim_qpag.h"
#include "qpag/wellformed.h"

namespace qpag {

namespace {

std::string fresh(std::string name, const auto& taken) {
  while (taken(name)) name += "'";
  return name;
}

std::string label_name(const StackOp& op, const Alphabet& stack) {
  switch (op.kind) {
    case StackOp::Kind::kEpsilon: return "ℓ_eps";
    case StackOp::Kind::kPop: return "ℓ_pop";
    case StackOp::Kind::kPush: break;
  }
  std::string name = "ℓ_push_";
  for (std::size_t i = 0; i < op.payload.size(); ++i) name += stack.token(symbol_at(op.payload, i));
  return name;
}

}  // namespace

Compiled compile(const MachineQCPDA& m) {
  const WfReport wf = check_qcpda(m, CheckMode::kPartial);
  if (!wf.passed) {
    throw NonWellFormedInput("QCPDA fails the well-formedness check (" +
                             std::to_string(wf.violations.size()) + " violations, first on condition " +
                             wf.violations.front().condition + ")");
  }

  Compiled out;
  MachineQPAG& q = out.machine;
  CompileMap& map = out.map;
  static_cast<MachineBase&>(q) = static_cast<const MachineBase&>(m);
  q.declared_push_strings.reset();
  const std::size_t original_stack = m.stack.symbols.size();

  for (StateId s = 0; s < m.num_states(); ++s) map.state_map.push_back(s);

  std::set<StackOp> ops;
  for (const auto& [state, op] : m.sigma) ops.insert(op);
  for (const auto& op : ops) {
    const std::string name = fresh(label_name(op, m.stack.symbols),
                                   [&](const std::string& n) { return q.stack.symbols.find(n).has_value(); });
    map.labels.emplace_back(op, q.stack.symbols.add(name));
  }
  auto label_of = [&](const StackOp& op) {
    for (const auto& [o, id] : map.labels) {
      if (o == op) return id;
    }
    throw InvariantError("invariant violated: σ(q') has a label");
  };

  std::set<StateId> targets;
  for (const auto& t : m.transitions) {
    if (!m.is_halting(t.to)) targets.insert(t.to);
  }
  auto taken = [&](const std::string& n) { return q.find_state(n).has_value(); };
  for (StateId target : targets) {
    CompileMap::AuxPair pair;
    pair.push_state = static_cast<StateId>(q.states.size());
    q.states.push_back(fresh("q_a(" + m.state_name(target) + ")", taken));
    pair.pop_state = static_cast<StateId>(q.states.size());
    q.states.push_back(fresh("q_b(" + m.state_name(target) + ")", taken));
    map.aux_states.emplace(target, pair);
  }

  for (const auto& t : m.transitions) {
    if (m.is_halting(t.to)) {
      q.transitions.push_back({t.from, t.read, t.top, t.to, StackOp::epsilon(), t.move, t.amp});
    } else {
      q.transitions.push_back(
          {t.from, t.read, t.top, map.aux_states.at(t.to).push_state, m.sigma.at(t.to), t.move, t.amp});
    }
  }
  map.counts.original = m.transitions.size();
  map.counts.first_step = q.transitions.size();

  const auto n_inputs = static_cast<SymbolId>(m.input.symbols.size());
  for (const auto& [target, pair] : map.aux_states) {
    const SymbolId label = label_of(m.sigma.at(target));
    for (SymbolId x = 0; x < n_inputs; ++x) {
      for (SymbolId b = 0; b < original_stack; ++b) {
        q.transitions.push_back({pair.push_state, x, b, pair.pop_state, StackOp::push(single_symbol(label)),
                                 Move::kStay, Amplitude{1.0}});
        ++map.counts.label_push;
      }
    }
    for (SymbolId x = 0; x < n_inputs; ++x) {
      q.transitions.push_back({pair.pop_state, x, label, target, StackOp::pop(), Move::kStay, Amplitude{1.0}});
      ++map.counts.label_pop;
    }
  }
  map.counts.total = q.transitions.size();
  return out;
}

EquivReport equiv_check(const MachineQCPDA& original, const MachineQPAG& compiled,
                        std::span<const std::vector<std::string>> words,
                        std::int64_t max_steps, double tol) {
  EquivReport report;
  report.tolerance = tol;
  for (const auto& word : words) {
    QcpdaRunOptions qo;
    qo.max_steps = max_steps;
    const RunResult a = run_qcpda(original, word, qo);

    QpagRunOptions po;
    po.max_steps = 3 * max_steps;
    po.on_step = [&](std::int64_t step, const StateVector& psi, const RunResult&) {
      if (step % 3 != 0) return;
      std::map<SymbolString, const SymbolString*> stack_by_garbage;
      for (const auto& [c, amp] : psi.entries) {
        auto [it, fresh_group] = stack_by_garbage.emplace(c.garbage, &c.stack);
        if (fresh_group) {
          ++report.decoherence_checks;
        } else if (*it->second != c.stack) {
          ++report.decoherence_violations;
        }
      }
    };
    const RunResult b = run(compiled, word, po);

    WordDelta d;
    d.word = word;
    d.p_acc_original = a.p_acc;
    d.p_acc_compiled = b.p_acc;
    d.p_rej_original = a.p_rej;
    d.p_rej_compiled = b.p_rej;
    d.delta_acc = std::abs(a.p_acc - b.p_acc);
    d.delta_rej = std::abs(a.p_rej - b.p_rej);
    report.max_delta = std::max({report.max_delta, d.delta_acc, d.delta_rej});
    report.words.push_back(std::move(d));
  }
  report.passed = report.max_delta <= tol && report.decoherence_violations == 0;
  return report;
}

}  // namespace qpag
