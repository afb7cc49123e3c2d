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

#include <algorithm>
#include <map>
#include <stdexcept>

#include "qpag/errors.h"
#include "qpag/problem1.h"
#include "qpag/sim_qpag.h"
#include "qpag/wellformed.h"
#include "test_machines.h"

namespace qpag::problem1 {
namespace {

std::string reversed(std::string s) {
  std::reverse(s.begin(), s.end());
  return s;
}

int distinctions(const std::string& u, const std::string& v) {
  int d = 0;
  for (std::size_t i = 0; i < u.size(); ++i) d += u[i] != v[i];
  return d;
}

TEST(EvenDistinct, Examples) {
  EXPECT_TRUE(even_distinct("1100", "1111"));
  EXPECT_FALSE(even_distinct("1000", "1111"));
  EXPECT_TRUE(even_distinct("", ""));
  EXPECT_TRUE(even_distinct("abcd", "abcd"));
  EXPECT_THROW(even_distinct("ab", "abc"), LengthMismatch);
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(Instance("a", "a", "d")), PromiseClass::kYes);
  EXPECT_EQ(classify(Instance("a", "b", "d")), PromiseClass::kNo);
  EXPECT_EQ(classify(Instance("ab", "ba", "dd")), PromiseClass::kNo);
}

TEST(Classify, PermutationInvariant) {
  std::mt19937_64 rng(5);
  const std::string perm = "bca";
  auto apply = [&](std::string w) {
    for (auto& c : w) {
      if (c != 'd') c = perm[c - 'a'];
    }
    return w;
  };
  for (int i = 0; i < 300; ++i) {
    const auto inst = generate(1 + i % 6, i % 2 ? PromiseClass::kYes : PromiseClass::kNo, rng());
    const Instance p(apply(inst.w1()), apply(inst.w2()), apply(inst.w3()));
    EXPECT_EQ(classify(p), classify(inst));
  }
}

TEST(Classify, AnClassDependsOnParity) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::string a(n, 'a');
    const Instance inst(a, a, std::string(n, 'd'));
    EXPECT_EQ(classify(inst), n % 2 ? PromiseClass::kYes : PromiseClass::kNo);
    std::string w2 = a;
    w2[0] = 'b';
    EXPECT_NE(classify(Instance(a, w2, std::string(n, 'd'))), classify(inst));
  }
}

TEST(Instance, Validation) {
  EXPECT_THROW(Instance("", "", ""), InvalidInstance);
  EXPECT_THROW(Instance("a", "ab", "a"), InvalidInstance);
  EXPECT_THROW(Instance("d", "a", "a"), InvalidInstance);
  EXPECT_THROW(Instance("a", "d", "a"), InvalidInstance);
  EXPECT_THROW(Instance("a", "a", "e"), InvalidInstance);
  EXPECT_NO_THROW(Instance("c", "c", "d"));
}

TEST(Encode, Examples) {
  EXPECT_EQ(encode(Instance("a", "a", "d")), testing::word("a#a#d"));
  EXPECT_EQ(encode(Instance("ab", "ca", "dd")), testing::word("ab#ca#dd"));
}

TEST(Machine, Shape) {
  const auto m = build_machine();
  EXPECT_EQ(m.num_states(), 13u);
  EXPECT_EQ(m.input.symbols.tokens(), (std::vector<std::string>{"a", "b", "c", "d", "#", "¢", "$"}));
  EXPECT_EQ(m.stack.symbols.tokens(), (std::vector<std::string>{"a", "b", "c", "Z"}));
  EXPECT_NO_THROW(validate(m));
  // Table rows with wildcards count four times.
  const int stage1 = 1 + 3 * 4 + 4 * 4;
  const int m1 = 2 * (3 * 3 + 4 + 4);
  const int m2 = 2 * (3 * 4 + 4 + 4 * 3);
  const int stage3 = 4 * 4;
  EXPECT_EQ(m.transitions.size(), static_cast<std::size_t>(stage1 + m1 + m2 + stage3));
  EXPECT_EQ(m.transitions.size(), 135u);
  for (const auto& t : m.transitions) EXPECT_EQ(t.move, Move::kRight);
  EXPECT_EQ(m.accepting, std::vector<StateId>{m.state_id("qf_acc")});
  EXPECT_EQ(m.rejecting, std::vector<StateId>{m.state_id("qf_rej")});
}

TEST(Machine, HashSplitAmplitudes) {
  const auto m = build_machine();
  const auto hash = m.input.symbols.at("#");
  std::map<std::string, double> amp;
  for (const auto& t : m.transitions) {
    if (t.from == m.initial && t.read == hash) amp[m.state_name(t.to)] += t.amp.real();
  }
  EXPECT_DOUBLE_EQ(amp["q1_I0"], 4 * 0.5);
  EXPECT_DOUBLE_EQ(amp["q1_I1"], 4 * -0.5);
  EXPECT_DOUBLE_EQ(amp["q2_I0"], 4 * 0.5);
  EXPECT_DOUBLE_EQ(amp["q2_I1"], 4 * -0.5);
}

TEST(Generate, DeterministicAndClassed) {
  EXPECT_EQ(generate(3, PromiseClass::kYes, 42), generate(3, PromiseClass::kYes, 42));
  EXPECT_EQ(classify(generate(3, PromiseClass::kYes, 42)), PromiseClass::kYes);
  EXPECT_EQ(classify(generate(1, PromiseClass::kNo, 7)), PromiseClass::kNo);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto y = generate(4, PromiseClass::kYes, seed);
    EXPECT_EQ(y.n(), 4u);
    EXPECT_EQ(classify(y), PromiseClass::kYes);
    EXPECT_EQ(classify(generate(4, PromiseClass::kNo, seed)), PromiseClass::kNo);
  }
  EXPECT_THROW(generate(0, PromiseClass::kYes, 1), InvalidInstance);
}

TEST(Classify, AgreesWithPositionCount) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + rng() % 6;
    const auto w1 = testing::random_word(rng, {"a", "b", "c"}, n);
    const auto w2 = testing::random_word(rng, {"a", "b", "c"}, n);
    const auto w3 = testing::random_word(rng, {"a", "b", "c", "d"}, n);
    auto join = [](const std::vector<std::string>& w) {
      std::string s;
      for (const auto& x : w) s += x;
      return s;
    };
    const Instance inst(join(w1), join(w2), join(w3));
    const int d2 = distinctions(inst.w1(), reversed(inst.w2()));
    const int d3 = distinctions(inst.w1(), reversed(inst.w3()));
    EXPECT_EQ(classify(inst) == PromiseClass::kYes, (d2 % 2) != (d3 % 2));
  }
}

TEST(Sweep, ExhaustiveSmall) {
  SweepOptions o;
  o.exhaustive = true;
  const auto r1 = sweep(1, o);
  EXPECT_EQ(r1.checked, 36u);
  EXPECT_TRUE(r1.passed());
  EXPECT_LT(r1.max_deviation, 1e-9);
  EXPECT_EQ(r1.mode, "exhaustive");
  // By hand: Yes iff exactly one of w2 = w1 and w3 = w1 holds.
  EXPECT_EQ(r1.yes_instances, 3u * (1 * 3 + 2 * 1));
  const auto r2 = sweep(2, o);
  EXPECT_EQ(r2.checked, 1296u);
  EXPECT_TRUE(r2.passed());
}

TEST(Sweep, Sampled) {
  SweepOptions o;
  o.samples = 500;
  o.seed = 3;
  const auto r = sweep(6, o);
  EXPECT_EQ(r.checked, 500u);
  EXPECT_EQ(r.mode, "sample");
  EXPECT_TRUE(r.passed());
  EXPECT_LT(r.max_deviation, 1e-9);
  EXPECT_GT(r.yes_instances, 0u);
  EXPECT_LT(r.yes_instances, 500u);
}

TEST(Sweep, WorkerCountDoesNotMatter) {
  SweepOptions a;
  a.samples = 200;
  a.workers = 1;
  SweepOptions b = a;
  b.workers = 4;
  const auto ra = sweep(3, a);
  const auto rb = sweep(3, b);
  EXPECT_EQ(ra.checked, rb.checked);
  EXPECT_EQ(ra.yes_instances, rb.yes_instances);
  EXPECT_EQ(ra.max_deviation, rb.max_deviation);
}

TEST(Sweep, DetectsBrokenMachineViaTightCap) {
  SweepOptions o;
  o.exhaustive = true;
  o.max_steps = 3;
  const auto r = sweep(1, o);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.failures.size(), 36u);
}

TEST(Sweep, Limits) {
  SweepOptions o;
  o.exhaustive = true;
  EXPECT_THROW(sweep(4, o), std::invalid_argument);
  EXPECT_THROW(sweep(0, o), std::invalid_argument);
}

}  // namespace
}  // namespace qpag::problem1
