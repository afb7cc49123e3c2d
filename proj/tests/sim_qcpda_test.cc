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

#include <gtest/gtest.h>

#include <cmath>

#include "qpag/errors.h"
#include "qpag/sim_qcpda.h"
#include "qpag/wellformed.h"
#include "test_machines.h"

namespace qpag {
namespace {

using testing::add;
using testing::push;
using testing::skeleton;
using testing::word;

TEST(QcpdaStep, EmptyWordAcceptor) {
  const auto m = testing::empty_word_acceptor();
  const Tape tape = make_tape(m, {});
  auto r = qcpda_step(m, tape, initial_branch(m));
  ASSERT_EQ(r.children.size(), 1u);
  EXPECT_EQ(r.p_acc_delta, 0.0);
  r = qcpda_step(m, tape, r.children[0].second);
  EXPECT_TRUE(r.children.empty());
  EXPECT_DOUBLE_EQ(r.p_acc_delta, 1.0);
}

TEST(QcpdaStep, HadamardSplitsStack) {
  const auto m = testing::hadamard_qcpda(true);
  const Tape tape = make_tape(m, {});
  const auto r = qcpda_step(m, tape, initial_branch(m));
  ASSERT_EQ(r.children.size(), 2u);
  std::vector<std::string> stacks;
  for (const auto& [o, b] : r.children) {
    EXPECT_NEAR(b.prob, 0.5, 1e-15);
    double norm = 0.0;
    for (const auto& [c, a] : b.psi) norm += std::norm(a);
    EXPECT_NEAR(norm, 1.0, 1e-12);
    stacks.push_back(m.stack.symbols.format(b.stack));
  }
  std::sort(stacks.begin(), stacks.end());
  EXPECT_EQ(stacks, (std::vector<std::string>{"Z", "Za"}));
}

TEST(QcpdaStep, AcceptingBranchHasNoChildren) {
  auto m = testing::empty_word_acceptor();
  const Tape tape = make_tape(m, {});
  Branch b;
  b.prob = 0.25;
  b.stack = single_symbol(m.stack.bottom);
  b.psi[{m.state_id("q0"), 1}] = 1.0;
  const auto r = qcpda_step(m, tape, b);
  EXPECT_TRUE(r.children.empty());
  EXPECT_DOUBLE_EQ(r.p_acc_delta, 0.25);
}

TEST(RunQcpda, EmptyWordAcceptor) {
  const auto r = run_qcpda(testing::empty_word_acceptor(), {});
  EXPECT_DOUBLE_EQ(r.p_acc, 1.0);
  EXPECT_EQ(r.steps, 2);
}

TEST(RunQcpda, BothBranchesAccept) {
  std::vector<double> leaves;
  QcpdaRunOptions o;
  o.on_step = [&](std::int64_t s, const std::vector<Branch>& f, const RunResult&) {
    if (s == 1) {
      for (const auto& b : f) leaves.push_back(b.prob);
    }
  };
  const auto r = run_qcpda(testing::hadamard_qcpda(true), {}, o);
  EXPECT_NEAR(r.p_acc, 1.0, 1e-12);
  ASSERT_EQ(leaves.size(), 2u);
  EXPECT_NEAR(leaves[0], 0.5, 1e-12);
  EXPECT_NEAR(leaves[1], 0.5, 1e-12);
}

TEST(RunQcpda, AcceptAndRejectEvenly) {
  const auto r = run_qcpda(testing::hadamard_qcpda(false), {});
  EXPECT_NEAR(r.p_acc, 0.5, 1e-12);
  EXPECT_NEAR(r.p_rej, 0.5, 1e-12);
}

TEST(RunQcpda, IdenticalBranchesMerge) {
  // Za and Zb both pop to Z on the way into q3, so the two branches coincide.
  auto m = skeleton<MachineQCPDA>({"q0", "q1", "q2", "q3", "acc"}, {"a"}, {"a", "b"}, {"acc"});
  const double h = 1.0 / std::sqrt(2.0);
  add(m, "q0", "¢", "Z", "q1", 1, h);
  add(m, "q0", "¢", "Z", "q2", 1, h);
  add(m, "q1", "a", "a", "q3", 1, 1.0);
  add(m, "q2", "a", "b", "q3", 1, 1.0);
  add(m, "q3", "$", "Z", "acc", 1, 1.0);
  m.sigma[m.state_id("q0")] = StackOp::epsilon();
  m.sigma[m.state_id("q1")] = push(m, "a");
  m.sigma[m.state_id("q2")] = push(m, "b");
  m.sigma[m.state_id("q3")] = StackOp::pop();
  ASSERT_TRUE(check_qcpda(m).passed);
  std::vector<std::size_t> frontier;
  QcpdaRunOptions o;
  o.on_step = [&](std::int64_t, const std::vector<Branch>& f, const RunResult&) { frontier.push_back(f.size()); };
  const auto r = run_qcpda(m, word("a"), o);
  ASSERT_GE(frontier.size(), 2u);
  EXPECT_EQ(frontier[0], 2u);
  EXPECT_EQ(frontier[1], 1u);
  EXPECT_NEAR(r.p_acc, 1.0, 1e-12);
}

TEST(RunQcpda, ConservationOnRandomMachines) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto m = testing::random_qcpda(seed);
    for (const auto& w : testing::all_words({"x", "y"}, 3)) {
      QcpdaRunOptions o;
      o.max_steps = static_cast<std::int64_t>(w.size()) + 5;
      o.on_step = [&](std::int64_t, const std::vector<Branch>& f, const RunResult& partial) {
        EXPECT_NEAR(partial.total(), 1.0, 1e-9);
        for (const auto& b : f) {
          EXPECT_EQ(symbol_at(b.stack, 0), m.stack.bottom);
          double norm = 0.0;
          for (const auto& [c, a] : b.psi) norm += std::norm(a);
          EXPECT_NEAR(norm, 1.0, 1e-9);
        }
      };
      const auto r = run_qcpda(m, w, o);
      EXPECT_NEAR(r.total(), 1.0, 1e-9) << seed;
    }
  }
}

TEST(RunQcpda, PruneBounds) {
  QcpdaRunOptions o;
  o.prune_prob = 1e-3;
  EXPECT_THROW(run_qcpda(testing::empty_word_acceptor(), {}, o), std::invalid_argument);
}

TEST(RunQcpda, BranchCap) {
  QcpdaRunOptions o;
  o.max_branches = 1;
  EXPECT_THROW(run_qcpda(testing::hadamard_qcpda(true), {}, o), StateSpaceOverflow);
}

}  // namespace
}  // namespace qpag
