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

#include "qpag/problem1.h"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <mutex>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

#include "qpag/errors.h"
#include "qpag/sim_qpag.h"

namespace qpag::problem1 {

namespace {

bool over(std::string_view w, std::string_view alphabet) {
  return std::all_of(w.begin(), w.end(), [&](char c) { return alphabet.find(c) != std::string_view::npos; });
}

std::string reversed(std::string_view s) { return std::string(s.rbegin(), s.rend()); }

std::string random_word(std::mt19937_64& rng, std::size_t n, std::string_view alphabet) {
  std::string w(n, ' ');
  for (auto& c : w) c = alphabet[rng() % alphabet.size()];
  return w;
}

Instance random_instance(std::mt19937_64& rng, std::size_t n) {
  std::string w1 = random_word(rng, n, "abc");
  std::string w2 = random_word(rng, n, "abc");
  std::string w3 = random_word(rng, n, "abcd");
  return Instance(std::move(w1), std::move(w2), std::move(w3));
}

// Instance number `index` in lexicographic order of (w1, w2, w3).
Instance nth_instance(std::size_t n, std::uint64_t index) {
  std::string w1(n, 'a'), w2(n, 'a'), w3(n, 'a');
  for (std::size_t i = n; i-- > 0;) {
    w3[i] = "abcd"[index % 4];
    index /= 4;
  }
  for (std::size_t i = n; i-- > 0;) {
    w2[i] = "abc"[index % 3];
    index /= 3;
  }
  for (std::size_t i = n; i-- > 0;) {
    w1[i] = "abc"[index % 3];
    index /= 3;
  }
  return Instance(std::move(w1), std::move(w2), std::move(w3));
}

}  // namespace

const char* to_string(PromiseClass c) { return c == PromiseClass::kYes ? "yes" : "no"; }

PromiseClass parse_class(std::string_view text) {
  if (text == "yes") return PromiseClass::kYes;
  if (text == "no") return PromiseClass::kNo;
  throw std::invalid_argument("class must be 'yes' or 'no'");
}

Instance::Instance(std::string w1, std::string w2, std::string w3)
    : w1_(std::move(w1)), w2_(std::move(w2)), w3_(std::move(w3)) {
  if (w1_.empty()) throw InvalidInstance("instance needs n >= 1");
  if (w2_.size() != w1_.size() || w3_.size() != w1_.size()) {
    throw InvalidInstance("w1, w2 and w3 must have the same length");
  }
  if (!over(w1_, "abc") || !over(w2_, "abc")) throw InvalidInstance("w1 and w2 must be over {a,b,c}");
  if (!over(w3_, "abcd")) throw InvalidInstance("w3 must be over {a,b,c,d}");
}

bool even_distinct(std::string_view u, std::string_view v) {
  if (u.size() != v.size()) {
    throw LengthMismatch("strings of length " + std::to_string(u.size()) + " and " +
                         std::to_string(v.size()) + " cannot be compared");
  }
  std::size_t d = 0;
  for (std::size_t i = 0; i < u.size(); ++i) d += u[i] != v[i];
  return d % 2 == 0;
}

PromiseClass classify(const Instance& inst) {
  const bool first = even_distinct(inst.w1(), reversed(inst.w2()));
  const bool second = even_distinct(inst.w1(), reversed(inst.w3()));
  return first != second ? PromiseClass::kYes : PromiseClass::kNo;
}

std::vector<std::string> encode(const Instance& inst) {
  std::vector<std::string> out;
  auto put = [&](const std::string& w) {
    for (char c : w) out.emplace_back(1, c);
  };
  put(inst.w1());
  out.emplace_back("#");
  put(inst.w2());
  out.emplace_back("#");
  put(inst.w3());
  return out;
}

MachineQPAG build_machine() {
  MachineQPAG m;
  m.states = {"q0",    "q1_I0",  "q1_I1",  "q1_O0", "q1_O1", "q2_I0", "q2_I1",
              "q2_O0", "q2_O1",  "qf_acc", "qf_rej", "qf_-0", "qf_-1"};
  m.input.symbols = Alphabet({"a", "b", "c", "d", "#", "¢", "$"});
  m.input.left_endmarker = m.input.symbols.at("¢");
  m.input.right_endmarker = m.input.symbols.at("$");
  m.stack.symbols = Alphabet({"a", "b", "c", "Z"});
  m.stack.bottom = m.stack.symbols.at("Z");
  m.initial = m.state_id("q0");
  m.accepting = {m.state_id("qf_acc")};
  m.rejecting = {m.state_id("qf_rej")};

  const std::vector<std::string> wild = {"a", "b", "c", "Z"};
  auto add = [&](std::string_view from, std::string_view read, std::string_view top,
                 std::string_view to, StackOp op, double amp) {
    m.transitions.push_back({m.state_id(from), m.input.symbols.at(read), m.stack.symbols.at(top),
                             m.state_id(to), std::move(op), Move::kRight, Amplitude{amp}});
  };
  auto push = [&](std::string_view s) { return StackOp::push(single_symbol(m.stack.symbols.at(s))); };
  const StackOp eps = StackOp::epsilon();
  const StackOp pop = StackOp::pop();
  const std::vector<std::string> abc = {"a", "b", "c"};

  // Stage I: push w1, then split into the two sub-automata.
  add("q0", "¢", "Z", "q0", eps, 1.0);
  for (const auto& x : abc) {
    for (const auto& s : wild) add("q0", x, s, "q0", push(x), 1.0);
  }
  for (const auto& s : wild) {
    add("q0", "#", s, "q1_I0", eps, 0.5);
    add("q0", "#", s, "q1_I1", eps, -0.5);
    add("q0", "#", s, "q2_I0", eps, 0.5);
    add("q0", "#", s, "q2_I1", eps, -0.5);
  }

  // Stage II, M1: compare w2 against the stack, then skip w3.
  for (int j = 0; j < 2; ++j) {
    const std::string self = "q1_I" + std::to_string(j);
    const std::string flip = "q1_I" + std::to_string(1 - j);
    for (const auto& x : abc) {
      for (const auto& s : abc) add(self, x, s, x == s ? self : flip, pop, 1.0);
    }
    for (const auto& s : wild) add(self, "#", s, "q1_O" + std::to_string(j), eps, 1.0);
    for (const auto& x : {"a", "b", "c", "d"}) {
      add("q1_O" + std::to_string(j), x, "Z", "q1_O" + std::to_string(j), eps, 1.0);
    }
  }

  // Stage II, M2: skip w2, then compare w3 against the stack.
  for (int j = 0; j < 2; ++j) {
    const std::string in = "q2_I" + std::to_string(j);
    for (const auto& x : abc) {
      for (const auto& s : wild) add(in, x, s, in, eps, 1.0);
    }
    for (const auto& s : wild) add(in, "#", s, "q2_O" + std::to_string(j), eps, 1.0);
    const std::string self = "q2_O" + std::to_string(j);
    const std::string flip = "q2_O" + std::to_string(1 - j);
    for (const auto& x : {"a", "b", "c", "d"}) {
      for (const auto& s : abc) add(self, x, s, x == s ? self : flip, pop, 1.0);
    }
  }

  // Stage III: Hadamard on the right endmarker.
  const std::vector<std::string> finals = {"qf_-0", "qf_acc", "qf_-1", "qf_rej"};
  const std::vector<std::pair<std::string, std::array<double, 4>>> columns = {
      {"q1_O0", {0.5, 0.5, 0.5, 0.5}},
      {"q1_O1", {0.5, -0.5, 0.5, -0.5}},
      {"q2_O0", {-0.5, -0.5, 0.5, 0.5}},
      {"q2_O1", {-0.5, 0.5, 0.5, -0.5}},
  };
  for (const auto& [from, amps] : columns) {
    for (std::size_t i = 0; i < finals.size(); ++i) add(from, "$", "Z", finals[i], eps, amps[i]);
  }
  return m;
}

Instance generate(std::size_t n, PromiseClass cls, std::uint64_t seed) {
  if (n == 0) throw InvalidInstance("instance needs n >= 1");
  std::mt19937_64 rng(seed);
  while (true) {
    Instance inst = random_instance(rng, n);
    if (classify(inst) == cls) return inst;
  }
}

SweepReport sweep(std::size_t n, const SweepOptions& options) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  std::vector<Instance> instances;
  SweepReport report;
  report.n = n;
  if (options.exhaustive) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
      total *= 36;
      if (total > kExhaustiveLimit) {
        throw std::invalid_argument("exhaustive sweep at n = " + std::to_string(n) +
                                    " exceeds " + std::to_string(kExhaustiveLimit) + " instances");
      }
    }
    report.mode = "exhaustive";
    instances.reserve(total);
    for (std::uint64_t i = 0; i < total; ++i) instances.push_back(nth_instance(n, i));
  } else {
    report.mode = "sample";
    std::mt19937_64 rng(options.seed);
    for (std::size_t i = 0; i < options.samples; ++i) instances.push_back(random_instance(rng, n));
  }

  const MachineQPAG machine = build_machine();
  struct Outcome {
    double p_acc = 0.0;
    double p_rej = 0.0;
  };
  std::vector<Outcome> outcomes(instances.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    QpagRunOptions ro;
    ro.max_steps = options.max_steps;
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      try {
        const RunResult r = run(machine, encode(instances[i]), ro);
        outcomes[i] = {r.p_acc, r.p_rej};
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  unsigned workers = options.workers != 0 ? options.workers : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1, 64);
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  for (std::size_t i = 0; i < instances.size(); ++i) {
    const PromiseClass expected = classify(instances[i]);
    const bool yes = expected == PromiseClass::kYes;
    const auto [p_acc, p_rej] = outcomes[i];
    const double deviation = std::max(std::abs(p_acc - (yes ? 1.0 : 0.0)), std::abs(p_rej - (yes ? 0.0 : 1.0)));
    report.max_deviation = std::max(report.max_deviation, deviation);
    ++report.checked;
    report.yes_instances += yes;
    if ((yes ? p_acc : p_rej) < 1.0 - options.tol) {
      std::string word;
      for (const auto& s : encode(instances[i])) word += s;
      report.failures.push_back({std::move(word), expected, p_acc, p_rej});
    }
  }
  std::sort(report.failures.begin(), report.failures.end(),
            [](const SweepFailure& a, const SweepFailure& b) { return a.word < b.word; });
  return report;
}

}  // namespace qpag::problem1
