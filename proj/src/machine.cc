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

#include "qpag/machine.h"

#include <cmath>
#include <set>

#include "qpag/errors.h"

namespace qpag {

namespace {

[[noreturn]] void fail(const std::string& rule, const std::string& detail) {
  throw InvariantError("invariant violated: " + rule + (detail.empty() ? "" : " (" + detail + ")"));
}

void validate_base(const MachineBase& m) {
  if (m.states.empty()) fail("Q nonempty", "");
  if (m.states.size() > 0xFFFF) fail("|Q| <= 65535", "");
  std::set<std::string> names;
  for (const auto& s : m.states) {
    if (s.empty()) fail("state names nonempty", "");
    if (!names.insert(s).second) fail("state names unique", s);
  }
  if (m.initial >= m.num_states()) fail("q0 ∈ Q", "");
  for (StateId q : m.accepting) {
    if (q >= m.num_states()) fail("Q_acc ⊆ Q", "");
  }
  for (StateId q : m.rejecting) {
    if (q >= m.num_states()) fail("Q_rej ⊆ Q", "");
    if (m.is_accepting(q)) fail("Q_acc ∩ Q_rej = ∅", m.state_name(q));
  }
  const auto sigma_size = m.input.symbols.size();
  if (m.input.left_endmarker >= sigma_size || m.input.right_endmarker >= sigma_size) {
    fail("endmarkers ∈ Σ", "");
  }
  if (m.input.left_endmarker == m.input.right_endmarker) {
    fail("left and right endmarkers differ", "");
  }
  if (m.stack.bottom >= m.stack.symbols.size()) fail("Z ∈ Γ", "");
}

void validate_push(const MachineBase& m, const StackOp& op) {
  if (!op.is_push()) {
    if (!op.payload.empty()) fail("only push operations carry a string", "");
    return;
  }
  if (op.payload.empty()) fail("G ⊆ (Γ\\{Z})⁺", "empty push string");
  for (std::size_t i = 0; i < op.payload.size(); ++i) {
    const SymbolId s = symbol_at(op.payload, i);
    if (s >= m.stack.symbols.size()) fail("transition symbols ∈ Γ", "push string");
    if (s == m.stack.bottom) {
      fail("G ⊆ (Γ\\{Z})⁺", "push string contains " + m.stack.symbols.token(s));
    }
  }
}

template <class Transition>
void validate_transition_shape(const MachineBase& m, const Transition& t) {
  if (t.from >= m.num_states() || t.to >= m.num_states()) fail("transition states ∈ Q", "");
  if (t.read >= m.input.symbols.size()) fail("transition input symbols ∈ Σ", "");
  if (t.top >= m.stack.symbols.size()) fail("transition stack symbols ∈ Γ", "");
  if (t.move != Move::kStay && t.move != Move::kRight) fail("D ∈ {0, 1}", "");
}

template <class Transition>
void validate_unique(const std::vector<Transition>& ts) {
  std::vector<const Transition*> sorted;
  sorted.reserve(ts.size());
  for (const auto& t : ts) sorted.push_back(&t);
  auto key = [](const Transition* t) { return std::tuple_cat(t->column_key(), t->target_key()); };
  std::sort(sorted.begin(), sorted.end(),
            [&](const Transition* a, const Transition* b) { return key(a) < key(b); });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (key(sorted[i - 1]) == key(sorted[i])) fail("transition tuples unique", "");
  }
}

void validate_amplitude(Amplitude a) {
  if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) fail("amplitudes finite", "");
  if (std::abs(a) > 1.0 + 1e-9) fail("|amplitude| <= 1", "");
}

template <class M>
void validate_declared_push_strings(const M& m) {
  if (!m.declared_push_strings) return;
  for (const auto& p : *m.declared_push_strings) validate_push(m, StackOp::push(p));
  for (const auto& p : inferred_push_strings(m)) {
    if (std::find(m.declared_push_strings->begin(), m.declared_push_strings->end(), p) ==
        m.declared_push_strings->end()) {
      fail("declared G ⊇ inferred G", m.stack.symbols.format(p));
    }
  }
}

template <class Range, class Project>
std::vector<SymbolString> collect_pushes(const Range& items, Project project) {
  std::set<SymbolString> seen;
  for (const auto& item : items) {
    const StackOp& op = project(item);
    if (op.is_push()) seen.insert(op.payload);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

std::optional<StateId> MachineBase::find_state(std::string_view name) const {
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i] == name) return static_cast<StateId>(i);
  }
  return std::nullopt;
}

StateId MachineBase::state_id(std::string_view name) const {
  if (auto q = find_state(name)) return *q;
  throw InvariantError("unknown state '" + std::string(name) + "'");
}

std::vector<SymbolString> inferred_push_strings(const MachineQPAG& m) {
  return collect_pushes(m.transitions, [](const TransitionQPAG& t) -> const StackOp& { return t.op; });
}

std::vector<SymbolString> inferred_push_strings(const MachineQCPDA& m) {
  return collect_pushes(m.sigma, [](const auto& kv) -> const StackOp& { return kv.second; });
}

std::vector<SymbolString> inferred_push_strings(const MachinePPA& m) {
  return collect_pushes(m.transitions, [](const TransitionPPA& t) -> const StackOp& { return t.op; });
}

void validate(const MachineQPAG& m) {
  validate_base(m);
  for (const auto& t : m.transitions) {
    validate_transition_shape(m, t);
    validate_push(m, t.op);
    validate_amplitude(t.amp);
    if (t.op.is_pop() && t.top == m.stack.bottom) fail("no pop on Z", m.state_name(t.from));
  }
  validate_unique(m.transitions);
  validate_declared_push_strings(m);
}

void validate(const MachineQCPDA& m) {
  validate_base(m);
  for (StateId q = 0; q < m.num_states(); ++q) {
    const bool has_sigma = m.sigma.count(q) != 0;
    if (m.is_halting(q) && has_sigma) {
      fail("σ defined only on Q \\ (Q_acc ∪ Q_rej)", m.state_name(q));
    }
    if (!m.is_halting(q) && !has_sigma) {
      fail("σ total on Q \\ (Q_acc ∪ Q_rej)", m.state_name(q));
    }
  }
  for (const auto& [q, op] : m.sigma) {
    if (q >= m.num_states()) fail("σ domain ⊆ Q", "");
    validate_push(m, op);
  }
  for (const auto& t : m.transitions) {
    validate_transition_shape(m, t);
    validate_amplitude(t.amp);
    if (t.top == m.stack.bottom && t.amp != Amplitude{}) {
      auto it = m.sigma.find(t.to);
      if (it != m.sigma.end() && it->second.is_pop()) {
        fail("σ(q')=pop ⇒ δ(q,a,Z,q',D)=0", m.state_name(t.to));
      }
    }
  }
  validate_unique(m.transitions);
  validate_declared_push_strings(m);
}

void validate(const MachinePPA& m) {
  validate_base(m);
  for (const auto& t : m.transitions) {
    validate_transition_shape(m, t);
    validate_push(m, t.op);
    if (!std::isfinite(t.prob) || t.prob < 0.0 || t.prob > 1.0) {
      fail("probabilities ∈ [0, 1]", m.state_name(t.from));
    }
    if (t.op.is_pop() && t.top == m.stack.bottom) fail("no pop on Z", m.state_name(t.from));
  }
  validate_unique(m.transitions);
  validate_declared_push_strings(m);
}

Tape make_tape(const MachineBase& m, std::span<const std::string> word) {
  Tape tape;
  tape.cells.reserve(word.size() + 2);
  tape.cells.push_back(m.input.left_endmarker);
  for (const auto& token : word) {
    const SymbolId s = m.input.symbols.at(token);
    if (m.input.is_endmarker(s)) {
      throw EndmarkerInWord("word contains the endmarker '" + token + "'");
    }
    tape.cells.push_back(s);
  }
  tape.cells.push_back(m.input.right_endmarker);
  return tape;
}

bool amplitude_close(Amplitude a, Amplitude b, double tol) {
  const Amplitude d = a - b;
  return std::abs(d.real()) <= tol && std::abs(d.imag()) <= tol;
}

HaltingTable::HaltingTable(const MachineBase& m) : kind_(m.num_states(), 0) {
  for (StateId q : m.accepting) kind_.at(q) = 1;
  for (StateId q : m.rejecting) kind_.at(q) = 2;
}

}  // namespace qpag
