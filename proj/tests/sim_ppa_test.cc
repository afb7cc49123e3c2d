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

#include <random>

#include "qpag/errors.h"
#include "qpag/sim_ppa.h"
#include "qpag/sim_qpag.h"
#include "qpag/wellformed.h"
#include "test_machines.h"

namespace qpag {
namespace {

using testing::word;

TEST(RunPpa, WcwrMember) {
  const auto r = run_ppa(testing::wcwr_dpda(), word("abcba"));
  EXPECT_DOUBLE_EQ(r.p_acc, 1.0);
  EXPECT_EQ(r.p_rej, 0.0);
}

TEST(RunPpa, WcwrNonMemberRejects) {
  const auto r = run_ppa(testing::wcwr_dpda(), word("abcab"));
  EXPECT_DOUBLE_EQ(r.p_rej, 1.0);
  EXPECT_EQ(r.p_acc, 0.0);
}

TEST(RunPpa, CoinFlip) {
  const auto r = run_ppa(testing::coin_flip_ppa(), {});
  EXPECT_NEAR(r.p_acc, 0.5, 1e-12);
  EXPECT_NEAR(r.p_rej, 0.5, 1e-12);
  EXPECT_EQ(r.steps, 1);
}

TEST(RunPpa, UndefinedColumnsLeakIntoNonHalting) {
  auto m = testing::coin_flip_ppa();
  m.transitions.clear();
  const auto r = run_ppa(m, {});
  EXPECT_DOUBLE_EQ(r.p_non, 1.0);
  EXPECT_EQ(r.truncation_loss, 0.0);
  EXPECT_EQ(r.warnings.size(), 1u);
}

TEST(RunPpa, LabeledCorpusAndConservation) {
  const auto m = testing::wcwr_dpda();
  std::mt19937_64 rng(41);
  for (int i = 0; i < 200; ++i) {
    std::string w;
    if (i % 2 == 0) {
      const auto half = testing::random_word(rng, {"a", "b"}, rng() % 6);
      for (const auto& s : half) w += s;
      w += "c";
      for (auto it = half.rbegin(); it != half.rend(); ++it) w += *it;
    } else {
      for (const auto& s : testing::random_word(rng, {"a", "b", "c"}, rng() % 9)) w += s;
    }
    const bool member = testing::in_wcwr(w);
    PpaRunOptions o;
    o.on_step = [](std::int64_t, const ClassicalDist&, const RunResult& partial) {
      EXPECT_NEAR(partial.total(), 1.0, 1e-9);
    };
    const auto r = run_ppa(m, word(w), o);
    EXPECT_EQ(r.p_acc, member ? 1.0 : 0.0) << w;
    EXPECT_EQ(r.p_rej, member ? 0.0 : 1.0) << w;
    EXPECT_NEAR(r.total(), 1.0, 1e-9);
    const auto d = run_dpda(m, word(w));
    EXPECT_EQ(d.verdict, member ? DpdaVerdict::kAccept : DpdaVerdict::kReject) << w;
  }
}

TEST(RunDpda, Examples) {
  const auto m = testing::wcwr_dpda();
  EXPECT_EQ(run_dpda(m, word("aca")).verdict, DpdaVerdict::kAccept);
  EXPECT_EQ(run_dpda(m, {}).verdict, DpdaVerdict::kReject);
  EXPECT_EQ(run_dpda(m, word("c")).verdict, DpdaVerdict::kAccept);
  EXPECT_THROW(run_dpda(testing::coin_flip_ppa(), {}), NotDeterministic);
}

TEST(RunDpda, LoopAndBlock) {
  auto m = testing::coin_flip_ppa();
  m.transitions.clear();
  EXPECT_EQ(run_dpda(m, {}).verdict, DpdaVerdict::kBlock);
  testing::add(m, "q0", "¢", "Z", "q0", StackOp::epsilon(), 0, 1.0);
  const auto r = run_dpda(m, {}, 40);
  EXPECT_EQ(r.verdict, DpdaVerdict::kLoop);
  EXPECT_EQ(r.steps, 40);
}

TEST(RunPpa, AgreesWithQuantumEngineOnReversibleMachines) {
  // The wcwᴿ machine is not reversible, but the right mover is, and so is
  // its PPA re-encoding.
  MachinePPA p;
  const auto q = testing::right_mover();
  static_cast<MachineBase&>(p) = q;
  for (const auto& t : q.transitions) p.transitions.push_back({t.from, t.read, t.top, t.to, t.op, t.move, 1.0});
  ASSERT_TRUE(check_qpag(to_qpag(p)).passed);
  for (const auto& w : testing::all_words({"a", "b"}, 4)) {
    EXPECT_NEAR(run_ppa(p, w).p_acc, run(to_qpag(p), w).p_acc, 1e-9);
    EXPECT_NEAR(run_ppa(p, w).p_acc, run(q, w).p_acc, 1e-9);
  }
}

TEST(ToQpag, RequiresZeroOneProbabilities) {
  EXPECT_THROW(to_qpag(testing::coin_flip_ppa()), InvariantError);
  const auto q = to_qpag(testing::wcwr_dpda());
  EXPECT_EQ(q.transitions.size(), testing::wcwr_dpda().transitions.size());
}

}  // namespace
}  // namespace qpag
