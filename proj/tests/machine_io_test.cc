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

#include "qpag/compile.h"
#include "qpag/errors.h"
#include "qpag/machine_io.h"
#include "qpag/problem1.h"
#include "test_machines.h"

namespace qpag {
namespace {

std::vector<AnyMachine> corpus() {
  std::vector<AnyMachine> out;
  out.push_back(problem1::build_machine());
  out.push_back(testing::norm_two_machine());
  out.push_back(testing::self_loop_machine());
  out.push_back(testing::empty_machine());
  out.push_back(testing::right_mover());
  out.push_back(testing::wcwr_dpda());
  out.push_back(testing::coin_flip_ppa());
  out.push_back(testing::hadamard_qcpda(true));
  out.push_back(testing::empty_word_acceptor());
  // Mutants with an amplitude above 1 are not valid machine files.
  for (const auto& mu : testing::mutation_corpus()) {
    try {
      validate(mu.machine);
      out.push_back(mu.machine);
    } catch (const InvariantError&) {
    }
  }
  for (std::uint64_t s = 1; s <= 10; ++s) {
    out.push_back(testing::random_qcpda(s));
    out.push_back(testing::random_total_qpag(s));
    out.push_back(compile(testing::random_qcpda(s)).machine);
  }
  return out;
}

Json problem1_json() { return machine_to_json(AnyMachine(problem1::build_machine())); }

void expect_schema_error(const Json& j, const std::string& pointer) {
  try {
    parse_machine(j.dump());
    ADD_FAILURE() << "no error for " << pointer;
  } catch (const SchemaError& e) {
    EXPECT_EQ(std::string(e.what()).rfind(pointer + ":", 0), 0u) << e.what();
  }
}

TEST(MachineIo, RoundTripCorpus) {
  for (const auto& m : corpus()) {
    const std::string text = serialize_machine(m);
    const AnyMachine back = parse_machine(text);
    EXPECT_TRUE(back == m) << kind_of(m);
    EXPECT_EQ(serialize_machine(back), text);
  }
}

TEST(MachineIo, FullPrecisionAmplitudes) {
  auto m = testing::right_mover();
  m.transitions[0].amp = Amplitude{0.1 + 0.2, -1.0 / 3.0};
  const auto back = std::get<MachineQPAG>(parse_machine(serialize_machine(m)));
  EXPECT_EQ(back.transitions[0].amp, m.transitions[0].amp);
}

TEST(MachineIo, ProblemOneShape) {
  const auto m = std::get<MachineQPAG>(parse_machine(problem1_json().dump()));
  EXPECT_EQ(m.num_states(), 13u);
  EXPECT_EQ(m.transitions.size(), 135u);
  EXPECT_EQ(kind_of(AnyMachine(m)), "qpag");
}

TEST(MachineIo, PushStringForms) {
  auto m = testing::random_total_qpag(3);
  Json j = machine_to_json(AnyMachine(m));
  bool found = false;
  for (auto& t : j["transitions"]) {
    if (t["op"]["op"] == "push" && t["op"]["string"].get<std::string>().size() == 2) {
      // "AB" and ["A","B"] mean the same thing.
      const std::string s = t["op"]["string"];
      t["op"]["string"] = Json::array({s.substr(0, 1), s.substr(1, 1)});
      found = true;
    }
  }
  if (found) EXPECT_TRUE(parse_machine(j.dump()) == AnyMachine(m));
}

TEST(MachineIo, PlainNumberAmplitude) {
  Json j = problem1_json();
  j["transitions"][0]["amp"] = 1;
  EXPECT_TRUE(parse_machine(j.dump()) == AnyMachine(problem1::build_machine()));
}

TEST(MachineIo, ParseError) {
  EXPECT_THROW(parse_machine("{\"kind\": "), ParseError);
  EXPECT_THROW(parse_machine(""), ParseError);
}

TEST(MachineIo, SchemaErrorsCarryPointer) {
  Json j = problem1_json();
  j.erase("stack_bottom");
  expect_schema_error(j, "/");

  j = problem1_json();
  j["extra"] = 1;
  expect_schema_error(j, "/");

  j = problem1_json();
  j["transitions"][4]["amp"] = "one";
  expect_schema_error(j, "/transitions/4/amp");

  j = problem1_json();
  j["transitions"][2].erase("to");
  expect_schema_error(j, "/transitions/2");

  j = problem1_json();
  j["transitions"][0]["op"] = Json{{"op", "swap"}};
  expect_schema_error(j, "/transitions/0/op/op");

  j = problem1_json();
  j["transitions"][7]["from"] = "nowhere";
  expect_schema_error(j, "/transitions/7/from");

  j = problem1_json();
  j["kind"] = "dfa";
  expect_schema_error(j, "/kind");

  j = problem1_json();
  j["transitions"][1]["move"] = 2;
  expect_schema_error(j, "/transitions/1/move");
}

TEST(MachineIo, InvariantErrors) {
  Json j = problem1_json();
  j["rejecting"] = Json::array({"qf_acc"});
  EXPECT_THROW(parse_machine(j.dump()), InvariantError);

  j = problem1_json();
  j["transitions"][1]["op"] = Json{{"op", "push"}, {"string", "aZ"}};
  EXPECT_THROW(parse_machine(j.dump()), InvariantError);

  j = problem1_json();
  j["transitions"].push_back(j["transitions"][0]);
  EXPECT_THROW(parse_machine(j.dump()), InvariantError);

  j = machine_to_json(AnyMachine(testing::hadamard_qcpda(true)));
  j["sigma"].erase("q_eps");
  EXPECT_THROW(parse_machine(j.dump()), InvariantError);
}

}  // namespace
}  // namespace qpag
