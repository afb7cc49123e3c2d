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
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qpag/machine.h"
#include "qpag/problem1.h"

namespace qpag::testing {

// Machine skeleton with named states; the input alphabet gets ¢ and $
// appended as endmarkers and the stack alphabet gets Z appended.
template <class M>
M skeleton(std::vector<std::string> states, std::vector<std::string> inputs,
           std::vector<std::string> stack, std::vector<std::string> accepting = {},
           std::vector<std::string> rejecting = {}) {
  M m;
  m.states = std::move(states);
  inputs.push_back("¢");
  inputs.push_back("$");
  m.input.symbols = Alphabet(inputs);
  m.input.left_endmarker = m.input.symbols.at("¢");
  m.input.right_endmarker = m.input.symbols.at("$");
  stack.push_back("Z");
  m.stack.symbols = Alphabet(stack);
  m.stack.bottom = m.stack.symbols.at("Z");
  m.initial = 0;
  for (const auto& s : accepting) m.accepting.push_back(m.state_id(s));
  for (const auto& s : rejecting) m.rejecting.push_back(m.state_id(s));
  return m;
}

StackOp push(const MachineBase& m, std::string_view text);

void add(MachineQPAG& m, std::string_view from, std::string_view read, std::string_view top,
         std::string_view to, StackOp op, int move, Amplitude amp);
void add(MachineQCPDA& m, std::string_view from, std::string_view read, std::string_view top,
         std::string_view to, int move, Amplitude amp);
void add(MachinePPA& m, std::string_view from, std::string_view read, std::string_view top,
         std::string_view to, StackOp op, int move, double prob);

// Splits a word of single-character symbols.
std::vector<std::string> word(std::string_view text);
// Every word over `symbols` of length at most `max_length`, shortest first.
std::vector<std::vector<std::string>> all_words(const std::vector<std::string>& symbols,
                                                std::size_t max_length);
std::vector<std::string> random_word(std::mt19937_64& rng, const std::vector<std::string>& symbols,
                                     std::size_t length);

// q0 reads a and splits into q1 and q2 with amplitude 1 each: norm 2.
MachineQPAG norm_two_machine();
// q0 stays on ¢ forever.
MachineQPAG self_loop_machine();
MachineQPAG empty_machine();
// Deterministic reversible machine: moves right and accepts on $.
MachineQPAG right_mover();

// Deterministic PDA for { w c wᴿ : w ∈ {a,b}* }. Every column it can reach is
// defined, and anything outside the language goes to qrej.
MachinePPA wcwr_dpda();
bool in_wcwr(std::string_view w);
MachinePPA coin_flip_ppa();

// On ¢, q0 goes to (q_push + q_eps)/√2 with σ(q_push) = push a and
// σ(q_eps) = ε. On $, q_push accepts; q_eps accepts or rejects.
MachineQCPDA hadamard_qcpda(bool eps_accepts);
// q0 --¢--> q0 --$--> q_acc.
MachineQCPDA empty_word_acceptor();

// Random QCPDA that passes check_qcpda by construction: at most four states
// (two non-halting), Γ = {A, Z}, at most two push strings, Σ = {x, y}.
MachineQCPDA random_qcpda(std::uint64_t seed);
// Random fully specified QPAG that passes the Total-mode check by
// construction: no pops, stack op and head move fixed by the target state
// (stationary targets never push),
// a random unitary per (input, top).
MachineQPAG random_total_qpag(std::uint64_t seed);

struct Mutant {
  std::string name;
  MachineQPAG machine;
  std::string condition;  // the condition the checker must report
};
// Hand mutations of the Problem I machine.
std::vector<Mutant> mutation_corpus();

// Brute-force unitarity oracle independent of the library engines: builds
// the image of every configuration on `tape_word` with stack height at most
// `max_stack` and garbage length at most `max_garbage` (above Z), then
// compares all image norms and pairwise inner products. Sources whose column
// is undefined are skipped. Returns true when every check passes.
bool bounded_unitarity_oracle(const MachineQPAG& m, const std::vector<std::string>& tape_word,
                              std::size_t max_stack, std::size_t max_garbage, double tol);

// Amplitudes after the $ step computed from the distinction parities alone.
struct Problem1Amplitudes {
  double accept = 0.0;
  double reject = 0.0;
  double neutral0 = 0.0;
  double neutral1 = 0.0;
};
Problem1Amplitudes problem1_oracle(const problem1::Instance& inst);

}  // namespace qpag::testing
