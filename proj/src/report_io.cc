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

#include "qpag/report_io.h"

#include <cstdio>
#include <cstdlib>

namespace qpag {

namespace {

Json column_json(const ColumnRef& c, const MachineBase& m) {
  Json j = Json::object();
  j["state"] = m.state_name(c.state);
  j["read"] = m.input.symbols.token(c.read);
  j["top"] = m.stack.symbols.token(c.top);
  return j;
}

Json witness_json(const Witness& w, const MachineBase& m) {
  Json j = Json::object();
  j["first"] = column_json(w.first, m);
  if (w.second) j["second"] = column_json(*w.second, m);
  if (w.first_op) j["first_op"] = describe(*w.first_op, m.stack.symbols);
  if (w.second_op) j["second_op"] = describe(*w.second_op, m.stack.symbols);
  if (w.first_move) j["first_move"] = offset(*w.first_move);
  if (w.second_move) j["second_move"] = offset(*w.second_move);
  if (w.target) j["target"] = m.state_name(*w.target);
  return j;
}

Json config_json(const Configuration& c, const MachineBase& m) {
  Json j = Json::object();
  j["state"] = m.state_name(c.state);
  j["head"] = c.head;
  j["stack"] = m.stack.symbols.format(c.stack);
  j["garbage"] = m.stack.symbols.format(c.garbage);
  return j;
}

Json amp_json(Amplitude a) { return Json::array({report_number(a.real()), report_number(a.imag())}); }

}  // namespace

double report_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

Json to_json(const WfReport& r, const MachineBase& m) {
  Json j = Json::object();
  j["passed"] = r.passed;
  j["mode"] = to_string(r.mode);
  j["tolerance"] = r.tolerance;
  Json vs = Json::array();
  for (const auto& v : r.violations) {
    Json e = Json::object();
    e["condition"] = v.condition;
    e["witness"] = witness_json(v.witness, m);
    e["residual"] = report_number(v.residual);
    e["deviation"] = report_number(v.deviation);
    vs.push_back(std::move(e));
  }
  j["violations"] = std::move(vs);
  Json ev = Json::object();
  const char* ids[] = {"1", "2", "3a", "3b", "4", "5a", "5b"};
  for (std::size_t i = 0; i < r.evaluations.size(); ++i) ev[ids[i]] = r.evaluations[i];
  j["evaluations"] = std::move(ev);
  j["notes"] = r.notes;
  return j;
}

Json to_json(const AuditReport& r, const MachineBase& m) {
  Json j = Json::object();
  j["passed"] = r.passed;
  j["mode"] = to_string(r.mode);
  j["depth"] = r.depth;
  j["reachable"] = r.reachable;
  j["checked"] = r.checked;
  j["undefined_columns"] = r.undefined_columns;
  j["overlapping_pairs"] = r.overlapping_pairs;
  Json ws = Json::array();
  for (const auto& w : r.witnesses) {
    Json e = Json::object();
    e["kind"] = w.kind;
    e["first"] = config_json(w.first, m);
    if (w.second) e["second"] = config_json(*w.second, m);
    e["value"] = report_number(w.value);
    ws.push_back(std::move(e));
  }
  j["witnesses"] = std::move(ws);
  j["warnings"] = r.warnings;
  return j;
}

Json to_json(const RunResult& r, const MachineBase& m) {
  Json j = Json::object();
  j["p_acc"] = report_number(r.p_acc);
  j["p_rej"] = report_number(r.p_rej);
  j["p_non"] = report_number(r.p_non);
  j["truncation_loss"] = report_number(r.truncation_loss);
  j["steps"] = r.steps;
  if (!r.trace.empty()) {
    Json trace = Json::array();
    for (const auto& s : r.trace) {
      Json e = Json::object();
      e["step"] = s.step;
      e["p_acc_delta"] = report_number(s.p_acc_delta);
      e["p_rej_delta"] = report_number(s.p_rej_delta);
      Json survivors = Json::array();
      for (const auto& [c, amp] : s.survivors) {
        Json x = config_json(c, m);
        x["amp"] = amp_json(amp);
        survivors.push_back(std::move(x));
      }
      e["survivors"] = std::move(survivors);
      trace.push_back(std::move(e));
    }
    j["trace"] = std::move(trace);
  }
  j["warnings"] = r.warnings;
  return j;
}

Json to_json(const CompileMap& map, const MachineBase& compiled) {
  Json j = Json::object();
  Json states = Json::object();
  for (std::size_t q = 0; q < map.state_map.size(); ++q) {
    states[compiled.state_name(static_cast<StateId>(q))] = compiled.state_name(map.state_map[q]);
  }
  j["state_map"] = std::move(states);
  Json aux = Json::object();
  for (const auto& [target, pair] : map.aux_states) {
    Json e = Json::object();
    e["push"] = compiled.state_name(pair.push_state);
    e["pop"] = compiled.state_name(pair.pop_state);
    aux[compiled.state_name(target)] = std::move(e);
  }
  j["aux_states"] = std::move(aux);
  Json labels = Json::array();
  for (const auto& [op, symbol] : map.labels) {
    Json e = Json::object();
    e["op"] = describe(op, compiled.stack.symbols);
    e["symbol"] = compiled.stack.symbols.token(symbol);
    labels.push_back(std::move(e));
  }
  j["labels"] = std::move(labels);
  Json counts = Json::object();
  counts["original"] = map.counts.original;
  counts["first_step"] = map.counts.first_step;
  counts["label_push"] = map.counts.label_push;
  counts["label_pop"] = map.counts.label_pop;
  counts["total"] = map.counts.total;
  j["counts"] = std::move(counts);
  return j;
}

Json to_json(const EquivReport& r) {
  Json j = Json::object();
  j["passed"] = r.passed;
  j["tolerance"] = r.tolerance;
  j["max_delta"] = report_number(r.max_delta);
  j["decoherence_checks"] = r.decoherence_checks;
  j["decoherence_violations"] = r.decoherence_violations;
  Json words = Json::array();
  for (const auto& w : r.words) {
    Json e = Json::object();
    e["word"] = w.word;
    e["p_acc_original"] = report_number(w.p_acc_original);
    e["p_acc_compiled"] = report_number(w.p_acc_compiled);
    e["p_rej_original"] = report_number(w.p_rej_original);
    e["p_rej_compiled"] = report_number(w.p_rej_compiled);
    e["delta_acc"] = report_number(w.delta_acc);
    e["delta_rej"] = report_number(w.delta_rej);
    words.push_back(std::move(e));
  }
  j["words"] = std::move(words);
  return j;
}

Json to_json(const problem1::SweepReport& r) {
  Json j = Json::object();
  j["n"] = r.n;
  j["mode"] = r.mode;
  j["checked"] = r.checked;
  j["yes_instances"] = r.yes_instances;
  j["passed"] = r.passed();
  j["max_deviation"] = report_number(r.max_deviation);
  Json fs = Json::array();
  for (const auto& f : r.failures) {
    Json e = Json::object();
    e["word"] = f.word;
    e["expected"] = problem1::to_string(f.expected);
    e["p_acc"] = report_number(f.p_acc);
    e["p_rej"] = report_number(f.p_rej);
    fs.push_back(std::move(e));
  }
  j["failures"] = std::move(fs);
  return j;
}

Json to_json(const problem1::Instance& inst) {
  Json j = Json::object();
  j["w1"] = inst.w1();
  j["w2"] = inst.w2();
  j["w3"] = inst.w3();
  std::string word;
  for (const auto& s : problem1::encode(inst)) word += s;
  j["word"] = word;
  j["class"] = problem1::to_string(problem1::classify(inst));
  return j;
}

Json to_json(const DpdaOutcome& o) {
  Json j = Json::object();
  j["verdict"] = to_string(o.verdict);
  j["steps"] = o.steps;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace qpag
