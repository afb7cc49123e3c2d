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

#include "qpag/machine_io.h"

#include <set>

#include "qpag/errors.h"

namespace qpag {

namespace {

// Cursor into the document that remembers its JSON pointer for messages.
class Node {
 public:
  Node(const Json& j, std::string path) : j_(j), path_(std::move(path)) {}

  const Json& json() const { return j_; }
  const std::string& path() const { return path_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw SchemaError((path_.empty() ? std::string("/") : path_) + ": " + what);
  }

  Node field(const std::string& key) const {
    if (!j_.is_object()) fail("expected an object");
    auto it = j_.find(key);
    if (it == j_.end()) fail("missing field '" + key + "'");
    return Node(*it, path_ + "/" + key);
  }
  bool has(const std::string& key) const { return j_.contains(key); }

  void only(std::initializer_list<const char*> allowed) const {
    if (!j_.is_object()) fail("expected an object");
    for (const auto& [key, value] : j_.items()) {
      bool known = false;
      for (const char* a : allowed) known = known || key == a;
      if (!known) fail("unexpected field '" + key + "'");
    }
  }

  std::string str() const {
    if (!j_.is_string()) fail("expected a string");
    return j_.get<std::string>();
  }
  double number() const {
    if (!j_.is_number()) fail("expected a number");
    return j_.get<double>();
  }
  std::vector<Node> list() const {
    if (!j_.is_array()) fail("expected an array");
    std::vector<Node> out;
    for (std::size_t i = 0; i < j_.size(); ++i) out.emplace_back(j_[i], path_ + "/" + std::to_string(i));
    return out;
  }
  std::vector<std::string> strings() const {
    std::vector<std::string> out;
    for (const auto& n : list()) out.push_back(n.str());
    return out;
  }

 private:
  const Json& j_;
  std::string path_;
};

StateId state_ref(const MachineBase& m, const Node& n) {
  const std::string name = n.str();
  auto id = m.find_state(name);
  if (!id) n.fail("unknown state '" + name + "'");
  return *id;
}

SymbolId symbol_ref(const Alphabet& a, const Node& n) {
  const std::string token = n.str();
  auto id = a.find(token);
  if (!id) n.fail("unknown symbol '" + token + "'");
  return *id;
}

SymbolString push_string(const MachineBase& m, const Node& n) {
  try {
    if (n.json().is_string()) return m.stack.symbols.parse(n.str());
    SymbolString s;
    for (const auto& t : n.list()) append_symbol(s, symbol_ref(m.stack.symbols, t));
    return s;
  } catch (const UnknownSymbol& e) {
    n.fail(e.what());
  }
}

StackOp stack_op(const MachineBase& m, const Node& n) {
  const std::string kind = n.field("op").str();
  if (kind == "push") {
    n.only({"op", "string"});
    return StackOp::push(push_string(m, n.field("string")));
  }
  n.only({"op"});
  if (kind == "epsilon") return StackOp::epsilon();
  if (kind == "pop") return StackOp::pop();
  n.field("op").fail("expected 'push', 'epsilon' or 'pop'");
}

Move move_of(const Node& n) {
  if (!n.json().is_number_integer()) n.fail("expected 0 or 1");
  const auto v = n.json().get<std::int64_t>();
  if (v != 0 && v != 1) n.fail("expected 0 or 1");
  return v == 0 ? Move::kStay : Move::kRight;
}

Amplitude amplitude(const Node& n) {
  if (n.json().is_number()) return {n.number(), 0.0};
  auto parts = n.list();
  if (parts.size() != 2) n.fail("expected [re, im]");
  return {parts[0].number(), parts[1].number()};
}

void parse_base(MachineBase& m, const Node& root) {
  m.states = root.field("states").strings();
  const Node sigma = root.field("input_alphabet");
  const Node gamma = root.field("stack_alphabet");
  try {
    m.input.symbols = Alphabet(sigma.strings());
    m.stack.symbols = Alphabet(gamma.strings());
  } catch (const InvariantError& e) {
    throw InvariantError(std::string("invariant violated: alphabet tokens unique and nonempty (") +
                         e.what() + ")");
  }
  m.input.left_endmarker = symbol_ref(m.input.symbols, root.field("left_endmarker"));
  m.input.right_endmarker = symbol_ref(m.input.symbols, root.field("right_endmarker"));
  m.stack.bottom = symbol_ref(m.stack.symbols, root.field("stack_bottom"));
  m.initial = state_ref(m, root.field("initial"));
  for (const auto& n : root.field("accepting").list()) m.accepting.push_back(state_ref(m, n));
  for (const auto& n : root.field("rejecting").list()) m.rejecting.push_back(state_ref(m, n));
  if (root.has("push_strings")) {
    std::vector<SymbolString> g;
    for (const auto& n : root.field("push_strings").list()) g.push_back(push_string(m, n));
    m.declared_push_strings = std::move(g);
  }
}

template <class T>
void parse_column(const MachineBase& m, const Node& n, T& t) {
  t.from = state_ref(m, n.field("from"));
  t.read = symbol_ref(m.input.symbols, n.field("read"));
  t.top = symbol_ref(m.stack.symbols, n.field("top"));
  t.to = state_ref(m, n.field("to"));
  t.move = move_of(n.field("move"));
}

constexpr std::initializer_list<const char*> kBaseFields = {
    "kind", "states", "input_alphabet", "left_endmarker", "right_endmarker", "stack_alphabet",
    "stack_bottom", "initial", "accepting", "rejecting", "push_strings", "transitions"};

std::initializer_list<const char*> fields_with_sigma() {
  static const std::initializer_list<const char*> kFields = {
      "kind", "states", "input_alphabet", "left_endmarker", "right_endmarker", "stack_alphabet",
      "stack_bottom", "initial", "accepting", "rejecting", "push_strings", "transitions", "sigma"};
  return kFields;
}

Json op_json(const StackOp& op, const Alphabet& gamma) {
  Json j = Json::object();
  switch (op.kind) {
    case StackOp::Kind::kPush: {
      j["op"] = "push";
      if (gamma.single_graphemes()) {
        j["string"] = gamma.format(op.payload);
      } else {
        Json tokens = Json::array();
        for (std::size_t i = 0; i < op.payload.size(); ++i) tokens.push_back(gamma.token(symbol_at(op.payload, i)));
        j["string"] = tokens;
      }
      break;
    }
    case StackOp::Kind::kEpsilon: j["op"] = "epsilon"; break;
    case StackOp::Kind::kPop: j["op"] = "pop"; break;
  }
  return j;
}

Json base_json(std::string_view kind, const MachineBase& m) {
  Json j = Json::object();
  j["kind"] = kind;
  j["states"] = m.states;
  j["input_alphabet"] = m.input.symbols.tokens();
  j["left_endmarker"] = m.input.symbols.token(m.input.left_endmarker);
  j["right_endmarker"] = m.input.symbols.token(m.input.right_endmarker);
  j["stack_alphabet"] = m.stack.symbols.tokens();
  j["stack_bottom"] = m.stack.symbols.token(m.stack.bottom);
  j["initial"] = m.state_name(m.initial);
  Json acc = Json::array(), rej = Json::array();
  for (StateId q : m.accepting) acc.push_back(m.state_name(q));
  for (StateId q : m.rejecting) rej.push_back(m.state_name(q));
  j["accepting"] = acc;
  j["rejecting"] = rej;
  if (m.declared_push_strings) {
    Json g = Json::array();
    for (const auto& s : *m.declared_push_strings) g.push_back(op_json(StackOp::push(s), m.stack.symbols)["string"]);
    j["push_strings"] = g;
  }
  return j;
}

template <class T>
Json column_json(const MachineBase& m, const T& t) {
  Json j = Json::object();
  j["from"] = m.state_name(t.from);
  j["read"] = m.input.symbols.token(t.read);
  j["top"] = m.stack.symbols.token(t.top);
  j["to"] = m.state_name(t.to);
  return j;
}

}  // namespace

AnyMachine parse_machine(std::string_view document) {
  Json doc;
  try {
    doc = Json::parse(document.begin(), document.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  const Node root(doc, "");
  const std::string kind = root.field("kind").str();

  if (kind == "qpag" || kind == "ppa") {
    root.only(kBaseFields);
  } else if (kind == "qcpda") {
    root.only(fields_with_sigma());
  } else {
    root.field("kind").fail("expected 'qpag', 'qcpda' or 'ppa'");
  }

  if (kind == "qpag") {
    MachineQPAG m;
    parse_base(m, root);
    for (const auto& n : root.field("transitions").list()) {
      n.only({"from", "read", "top", "to", "op", "move", "amp"});
      TransitionQPAG t;
      parse_column(m, n, t);
      t.op = stack_op(m, n.field("op"));
      t.amp = amplitude(n.field("amp"));
      m.transitions.push_back(std::move(t));
    }
    validate(m);
    return m;
  }
  if (kind == "qcpda") {
    MachineQCPDA m;
    parse_base(m, root);
    for (const auto& n : root.field("transitions").list()) {
      n.only({"from", "read", "top", "to", "move", "amp"});
      TransitionQCPDA t;
      parse_column(m, n, t);
      t.amp = amplitude(n.field("amp"));
      m.transitions.push_back(t);
    }
    const Node sigma = root.field("sigma");
    if (!sigma.json().is_object()) sigma.fail("expected an object");
    for (const auto& [name, value] : sigma.json().items()) {
      const Node entry(value, sigma.path() + "/" + name);
      auto id = m.find_state(name);
      if (!id) entry.fail("unknown state '" + name + "'");
      m.sigma[*id] = stack_op(m, entry);
    }
    validate(m);
    return m;
  }
  MachinePPA m;
  parse_base(m, root);
  for (const auto& n : root.field("transitions").list()) {
    n.only({"from", "read", "top", "to", "op", "move", "prob"});
    TransitionPPA t;
    parse_column(m, n, t);
    t.op = stack_op(m, n.field("op"));
    t.prob = n.field("prob").number();
    m.transitions.push_back(std::move(t));
  }
  validate(m);
  return m;
}

std::string_view kind_of(const AnyMachine& m) {
  switch (m.index()) {
    case 0: return "qpag";
    case 1: return "qcpda";
    default: return "ppa";
  }
}

Json machine_to_json(const AnyMachine& any) {
  return std::visit(
      [&](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        Json j = base_json(kind_of(any), m);
        if constexpr (std::is_same_v<M, MachineQCPDA>) {
          Json sigma = Json::object();
          for (const auto& [q, op] : m.sigma) sigma[m.state_name(q)] = op_json(op, m.stack.symbols);
          j["sigma"] = sigma;
        }
        Json ts = Json::array();
        for (const auto& t : m.transitions) {
          Json e = column_json(m, t);
          if constexpr (!std::is_same_v<M, MachineQCPDA>) e["op"] = op_json(t.op, m.stack.symbols);
          e["move"] = static_cast<int>(offset(t.move));
          if constexpr (std::is_same_v<M, MachinePPA>) {
            e["prob"] = t.prob;
          } else {
            e["amp"] = Json::array({t.amp.real(), t.amp.imag()});
          }
          ts.push_back(std::move(e));
        }
        j["transitions"] = std::move(ts);
        return j;
      },
      any);
}

std::string serialize_machine(const AnyMachine& m) { return machine_to_json(m).dump(2) + "\n"; }

}  // namespace qpag
