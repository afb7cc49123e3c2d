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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qpag/machine.h"

namespace qpag::problem1 {

enum class PromiseClass { kYes, kNo };

const char* to_string(PromiseClass c);
// Accepts "yes" and "no". Throws std::invalid_argument.
PromiseClass parse_class(std::string_view text);

// Input w1 # w2 # w3 with w1, w2 over {a,b,c} and w3 over {a,b,c,d}, all of
// the same length n >= 1.
class Instance {
 public:
  // Throws InvalidInstance.
  Instance(std::string w1, std::string w2, std::string w3);

  const std::string& w1() const { return w1_; }
  const std::string& w2() const { return w2_; }
  const std::string& w3() const { return w3_; }
  std::size_t n() const { return w1_.size(); }

  bool operator==(const Instance&) const = default;

 private:
  std::string w1_, w2_, w3_;
};

// True iff u and v differ at an even number of positions. Throws
// LengthMismatch.
bool even_distinct(std::string_view u, std::string_view v);

PromiseClass classify(const Instance& inst);

// w1 # w2 # w3 as single-character tokens.
std::vector<std::string> encode(const Instance& inst);

// The 13-state exact machine. Wildcard rows are expanded over {a,b,c,Z}.
MachineQPAG build_machine();

// Rejection-samples a uniform instance of the requested class. Deterministic
// for a fixed seed.
Instance generate(std::size_t n, PromiseClass cls, std::uint64_t seed);

struct SweepFailure {
  std::string word;
  PromiseClass expected = PromiseClass::kYes;
  double p_acc = 0.0;
  double p_rej = 0.0;
};

struct SweepReport {
  std::size_t n = 0;
  std::string mode;  // "exhaustive" or "sample"
  std::uint64_t checked = 0;
  std::uint64_t yes_instances = 0;
  std::vector<SweepFailure> failures;
  double max_deviation = 0.0;

  bool passed() const { return failures.empty(); }
};

// 3^n * 3^n * 4^n must not exceed this for an exhaustive sweep.
inline constexpr std::uint64_t kExhaustiveLimit = 1'000'000;

struct SweepOptions {
  bool exhaustive = false;
  std::size_t samples = 500;
  std::uint64_t seed = 1;
  std::optional<std::int64_t> max_steps;
  double tol = 1e-9;
  unsigned workers = 0;  // 0 = hardware concurrency
};

// Runs the exact machine on every (or sampled) instance and compares with
// classify. Throws std::invalid_argument when an exhaustive sweep is too big.
SweepReport sweep(std::size_t n, const SweepOptions& options);

}  // namespace qpag::problem1
