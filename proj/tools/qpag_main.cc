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

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qpag/compile.h"
#include "qpag/errors.h"
#include "qpag/machine_io.h"
#include "qpag/problem1.h"
#include "qpag/report_io.h"
#include "qpag/sim_ppa.h"
#include "qpag/sim_qcpda.h"
#include "qpag/sim_qpag.h"
#include "qpag/wellformed.h"

namespace {

using namespace qpag;

// Exit codes.
constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

AnyMachine load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_machine(buf.str());
}

void save(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

const MachineBase& base_of(const AnyMachine& m) {
  return std::visit([](const auto& x) -> const MachineBase& { return x; }, m);
}

std::vector<std::string> word_of(const std::string& text, bool tokens) {
  return tokens ? split_tokens(text, ',') : split_graphemes(text);
}

std::vector<std::vector<std::string>> words_of(const std::string& text, bool tokens) {
  std::vector<std::vector<std::string>> out;
  for (const auto& w : split_tokens(text, tokens ? ';' : ',')) out.push_back(word_of(w, tokens));
  return out;
}

void emit(const Json& j) { std::cout << dump(j); }

struct CheckArgs {
  std::string file;
  std::string mode = "partial";
  double tol = kDefaultTolerance;
};

int do_check(const CheckArgs& a) {
  const AnyMachine m = load(a.file);
  const CheckMode mode = parse_check_mode(a.mode);
  WfReport r;
  if (const auto* q = std::get_if<MachineQPAG>(&m)) {
    r = check_qpag(*q, mode, a.tol);
  } else if (const auto* c = std::get_if<MachineQCPDA>(&m)) {
    r = check_qcpda(*c, mode, a.tol);
  } else {
    r = check_ppa(std::get<MachinePPA>(m), a.tol);
  }
  emit(to_json(r, base_of(m)));
  return r.passed ? kOk : kFailed;
}

struct AuditArgs {
  std::string file;
  std::string input;
  std::int64_t depth = 10;
  std::string mode = "partial";
  double tol = kDefaultTolerance;
  bool tokens = false;
};

int do_audit(const AuditArgs& a) {
  const AnyMachine m = load(a.file);
  const auto* q = std::get_if<MachineQPAG>(&m);
  if (q == nullptr) throw UsageError("audit needs a qpag machine");
  AuditOptions options;
  options.mode = parse_check_mode(a.mode);
  options.tol = a.tol;
  const auto word = word_of(a.input, a.tokens);
  const AuditReport r = audit_unitarity(*q, word, a.depth, options);
  emit(to_json(r, *q));
  return r.passed ? kOk : kFailed;
}

struct RunArgs {
  std::string file;
  std::string input;
  std::optional<std::int64_t> max_steps;
  std::size_t trace = 0;
  bool tokens = false;
};

int do_run(const RunArgs& a) {
  const AnyMachine m = load(a.file);
  const auto word = word_of(a.input, a.tokens);
  RunResult r;
  std::optional<DpdaOutcome> dpda;
  if (const auto* q = std::get_if<MachineQPAG>(&m)) {
    QpagRunOptions o;
    o.max_steps = a.max_steps;
    o.trace_depth = a.trace;
    r = run(*q, word, o);
  } else if (const auto* c = std::get_if<MachineQCPDA>(&m)) {
    QcpdaRunOptions o;
    o.max_steps = a.max_steps;
    r = run_qcpda(*c, word, o);
  } else {
    PpaRunOptions o;
    o.max_steps = a.max_steps;
    const auto& p = std::get<MachinePPA>(m);
    r = run_ppa(p, word, o);
    try {
      dpda = run_dpda(p, word, a.max_steps);
    } catch (const NotDeterministic&) {
    }
  }
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
  Json j = to_json(r, base_of(m));
  if (dpda) j["dpda"] = to_json(*dpda);
  emit(j);
  return kOk;
}

struct CompileArgs {
  std::string file;
  std::string output;
  std::string equiv_words;
  bool has_equiv = false;
  std::optional<std::int64_t> max_steps;
  double tol = kDefaultTolerance;
  bool tokens = false;
};

int do_compile(const CompileArgs& a) {
  const AnyMachine m = load(a.file);
  const auto* q = std::get_if<MachineQCPDA>(&m);
  if (q == nullptr) throw UsageError("compile needs a qcpda machine");
  const Compiled c = compile(*q);
  save(a.output, serialize_machine(c.machine));
  Json j = Json::object();
  j["output"] = a.output;
  j["map"] = to_json(c.map, c.machine);
  bool ok = true;
  if (a.has_equiv) {
    const auto words = words_of(a.equiv_words, a.tokens);
    std::size_t longest = 0;
    for (const auto& w : words) longest = std::max(longest, w.size());
    const EquivReport r =
        equiv_check(*q, c.machine, words, a.max_steps.value_or(default_max_steps(longest)), a.tol);
    j["equiv"] = to_json(r);
    ok = r.passed;
  }
  emit(j);
  return ok ? kOk : kFailed;
}

struct Problem1Args {
  std::string output;
  std::size_t n = 1;
  std::string cls = "yes";
  std::uint64_t seed = 1;
  bool exhaustive = false;
  std::size_t samples = 500;
  unsigned workers = 0;
};

int do_build(const Problem1Args& a) {
  const std::string text = serialize_machine(problem1::build_machine());
  if (a.output.empty() || a.output == "-") {
    std::cout << text;
  } else {
    save(a.output, text);
  }
  return kOk;
}

int do_gen(const Problem1Args& a) {
  emit(to_json(problem1::generate(a.n, problem1::parse_class(a.cls), a.seed)));
  return kOk;
}

int do_sweep(const Problem1Args& a) {
  problem1::SweepOptions o;
  o.exhaustive = a.exhaustive;
  o.samples = a.samples;
  o.seed = a.seed;
  o.workers = a.workers;
  const auto r = problem1::sweep(a.n, o);
  emit(to_json(r));
  return r.passed() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulate and verify quantum pushdown automata with a garbage tape"};
  app.require_subcommand(1);
  int code = kOk;
  std::function<int()> action;

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Check the well-formedness conditions of a machine");
  c->add_option("file", check.file, "Machine file")->required();
  c->add_option("--mode", check.mode, "partial or total")->check(CLI::IsMember({"partial", "total"}));
  c->add_option("--tol", check.tol, "Tolerance");
  c->callback([&] { action = [&] { return do_check(check); }; });

  AuditArgs audit;
  auto* au = app.add_subcommand("audit", "Check unitarity of one step on reachable configurations");
  au->add_option("file", audit.file, "Machine file")->required();
  au->add_option("--input", audit.input, "Input word")->required();
  au->add_option("--depth", audit.depth, "Reachability depth")->check(CLI::NonNegativeNumber);
  au->add_option("--mode", audit.mode, "partial or total")->check(CLI::IsMember({"partial", "total"}));
  au->add_option("--tol", audit.tol, "Tolerance");
  au->add_flag("--tokens", audit.tokens, "Input is comma-separated tokens");
  au->callback([&] { action = [&] { return do_audit(audit); }; });

  RunArgs runa;
  std::int64_t run_steps = 0;
  auto* r = app.add_subcommand("run", "Run a machine on one input word");
  r->add_option("file", runa.file, "Machine file")->required();
  r->add_option("--input", runa.input, "Input word")->required();
  auto* rs = r->add_option("--max-steps", run_steps, "Step cap")->check(CLI::PositiveNumber);
  r->add_option("--trace", runa.trace, "Trace the K largest survivors per step");
  r->add_flag("--tokens", runa.tokens, "Input is comma-separated tokens");
  r->callback([&] {
    if (rs->count() > 0) runa.max_steps = run_steps;
    action = [&] { return do_run(runa); };
  });

  CompileArgs comp;
  std::int64_t comp_steps = 0;
  auto* co = app.add_subcommand("compile", "Compile a QCPDA into a QPAG");
  co->add_option("file", comp.file, "QCPDA machine file")->required();
  co->add_option("-o,--output", comp.output, "Output machine file")->required();
  auto* ew = co->add_option("--equiv-words", comp.equiv_words,
                            "Words to compare, comma-separated (semicolon-separated with --tokens)");
  auto* cs = co->add_option("--max-steps", comp_steps, "Step cap of the original machine")
                 ->check(CLI::PositiveNumber);
  co->add_option("--tol", comp.tol, "Tolerance");
  co->add_flag("--tokens", comp.tokens, "Words are comma-separated tokens");
  co->callback([&] {
    comp.has_equiv = ew->count() > 0;
    if (cs->count() > 0) comp.max_steps = comp_steps;
    action = [&] { return do_compile(comp); };
  });

  Problem1Args p1;
  auto* p = app.add_subcommand("problem1", "Problem I toolkit");
  p->require_subcommand(1);
  auto* build = p->add_subcommand("build", "Write the exact QPAG for Problem I");
  build->add_option("-o,--output", p1.output, "Output machine file (stdout if omitted)");
  build->callback([&] { action = [&] { return do_build(p1); }; });
  auto* gen = p->add_subcommand("gen", "Generate an instance of a promise class");
  gen->add_option("-n", p1.n, "Block length")->required()->check(CLI::PositiveNumber);
  gen->add_option("--class", p1.cls, "yes or no")->required()->check(CLI::IsMember({"yes", "no"}));
  gen->add_option("--seed", p1.seed, "Random seed");
  gen->callback([&] { action = [&] { return do_gen(p1); }; });
  auto* sw = p->add_subcommand("sweep", "Run the exact QPAG against the classifier");
  sw->add_option("-n", p1.n, "Block length")->required()->check(CLI::PositiveNumber);
  auto* ex = sw->add_flag("--exhaustive", p1.exhaustive, "Every instance of length n");
  sw->add_option("--samples", p1.samples, "Number of random instances")->excludes(ex);
  sw->add_option("--seed", p1.seed, "Random seed")->excludes(ex);
  sw->add_option("--workers", p1.workers, "Worker threads (0 = all cores)");
  sw->callback([&] { action = [&] { return do_sweep(p1); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    code = action();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const StateSpaceOverflow& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  } catch (const NonWellFormedInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return code;
}
