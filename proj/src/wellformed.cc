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

#include "qpag/wellformed.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace qpag {

namespace {

constexpr std::array<const char*, 7> kConditionIds = {"1", "2", "3a", "3b", "4", "5a", "5b"};

enum Cond : std::size_t { kNorm = 0, kSameStack, kPushOverlap, kPopOverlap, kShift, kShiftPush, kShiftPop };

using Target = std::pair<StateId, Move>;

// One defined column of a QPAG, pre-sliced the ways the conditions need.
struct QpagColumn {
  ColumnRef ref;
  std::span<const TransitionQPAG> entries;                          // by (q', b', D)
  std::map<StackOp, std::vector<std::pair<Target, Amplitude>>> by_op;  // by (q', D)
  std::map<std::pair<StackOp, Move>, std::vector<std::pair<StateId, Amplitude>>> by_op_move;
  std::array<std::vector<std::pair<std::pair<StateId, StackOp>, Amplitude>>, 2> by_move;
};

// Σ conj(a_k) b_k over keys present in both sorted lists.
template <class Key>
Amplitude overlap(const std::vector<std::pair<Key, Amplitude>>& a,
                  const std::vector<std::pair<Key, Amplitude>>& b) {
  Amplitude sum{};
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      sum += std::conj(i->second) * j->second;
      ++i;
      ++j;
    }
  }
  return sum;
}

Amplitude overlap_full(std::span<const TransitionQPAG> a, std::span<const TransitionQPAG> b) {
  Amplitude sum{};
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const auto ka = a[i].target_key();
    const auto kb = b[j].target_key();
    if (ka < kb) {
      ++i;
    } else if (kb < ka) {
      ++j;
    } else {
      sum += std::conj(a[i].amp) * b[j].amp;
      ++i;
      ++j;
    }
  }
  return sum;
}

// True iff p2 = v·b1·p1 for some (possibly empty) v.
bool extends(const SymbolString& p2, SymbolId b1, const SymbolString& p1) {
  if (p2.size() < p1.size() + 1) return false;
  if (p2.compare(p2.size() - p1.size(), p1.size(), p1) != 0) return false;
  return symbol_at(p2, p2.size() - p1.size() - 1) == b1;
}

class Recorder {
 public:
  Recorder(WfReport& report, double tol) : report_(report), tol_(tol) {}

  void sum_should_vanish(Cond c, Amplitude sum, Witness w) {
    ++report_.evaluations[c];
    const double r = std::abs(sum);
    if (r > tol_) report_.violations.push_back({kConditionIds[c], std::move(w), r, r});
  }

  void norm(double sum, bool total_mode, Witness w) {
    ++report_.evaluations[kNorm];
    const double deviation = total_mode ? std::abs(sum - 1.0) : sum - 1.0;
    if (deviation > tol_) report_.violations.push_back({kConditionIds[kNorm], std::move(w), sum, deviation});
  }

 private:
  WfReport& report_;
  double tol_;
};

void finish(WfReport& report) {
  std::stable_sort(report.violations.begin(), report.violations.end(),
                   [](const Violation& a, const Violation& b) {
                     if (a.condition != b.condition) return a.condition < b.condition;
                     return a.witness < b.witness;
                   });
  report.passed = report.violations.empty();
}

Witness column_witness(const ColumnRef& c) {
  Witness w;
  w.first = c;
  return w;
}

Witness pair_witness(const ColumnRef& a, const ColumnRef& b) {
  Witness w;
  w.first = a;
  w.second = b;
  return w;
}

}  // namespace

const char* to_string(CheckMode mode) {
  return mode == CheckMode::kPartial ? "partial" : "total";
}

CheckMode parse_check_mode(std::string_view text) {
  if (text == "partial") return CheckMode::kPartial;
  if (text == "total") return CheckMode::kTotal;
  throw std::invalid_argument("mode must be 'partial' or 'total'");
}

std::uint64_t WfReport::evaluations_for(std::string_view condition) const {
  for (std::size_t i = 0; i < kConditionIds.size(); ++i) {
    if (condition == kConditionIds[i]) return evaluations[i];
  }
  return 0;
}

bool WfReport::has_violation(std::string_view condition) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.condition == condition; });
}

WfReport check_qpag(const MachineQPAG& m, CheckMode mode, double tol) {
  WfReport report;
  report.mode = mode;
  report.tolerance = tol;
  report.notes = {
      "condition 4 sums over the stack-operation slot b' (printed as b∈G∪{ε, pop})",
      "conditions 3a and 3b also cover pairs with b1 = b2, which condition 2 covers too",
      "conditions 3a and 5a cover every push p2 = v·b1·p1 that realigns with the first factor",
      "conditions 3a-5b include equal column tuples, whose configurations differ in stack or head",
  };
  Recorder rec(report, tol);

  const ColumnIndex<TransitionQPAG> index(m, m.transitions);
  const auto n_in = m.input.symbols.size();
  const auto n_st = m.stack.symbols.size();

  std::vector<QpagColumn> cols;
  for (StateId q = 0; q < m.num_states(); ++q) {
    for (SymbolId a = 0; a < n_in; ++a) {
      for (SymbolId b = 0; b < n_st; ++b) {
        auto entries = index.column(q, a, b);
        if (entries.empty()) {
          if (mode == CheckMode::kTotal) rec.norm(0.0, true, column_witness(ColumnRef{q, a, b}));
          continue;
        }
        QpagColumn c;
        c.ref = {q, a, b};
        c.entries = entries;
        double norm = 0.0;
        for (const auto& t : entries) {
          norm += std::norm(t.amp);
          c.by_op[t.op].push_back({{t.to, t.move}, t.amp});
          c.by_op_move[{t.op, t.move}].push_back({t.to, t.amp});
          c.by_move[offset(t.move)].push_back({{t.to, t.op}, t.amp});
        }
        rec.norm(norm, mode == CheckMode::kTotal, column_witness(c.ref));
        cols.push_back(std::move(c));
      }
    }
  }

  // Push strings p2 that realign with a first factor (top b1, op p1).
  const auto pushes = inferred_push_strings(m);
  auto realigning = [&](SymbolId b1, const StackOp& p1) {
    std::vector<StackOp> out;
    const SymbolString& tail = p1.payload;
    for (const auto& p2 : pushes) {
      if (extends(p2, b1, tail)) out.push_back(StackOp::push(p2));
    }
    return out;
  };

  // Column lookups by (read, op) and by (op, move).
  std::map<std::pair<SymbolId, StackOp>, std::vector<std::size_t>> by_read_op;
  std::map<std::pair<StackOp, Move>, std::vector<std::size_t>> by_op_move;
  std::map<std::pair<SymbolId, SymbolId>, std::vector<std::size_t>> by_read_top;
  std::vector<std::vector<std::size_t>> by_top(n_st);
  for (std::size_t i = 0; i < cols.size(); ++i) {
    const auto& c = cols[i];
    for (const auto& [op, v] : c.by_op) by_read_op[{c.ref.read, op}].push_back(i);
    for (const auto& [key, v] : c.by_op_move) by_op_move[key].push_back(i);
    by_read_top[{c.ref.read, c.ref.top}].push_back(i);
    by_top[c.ref.top].push_back(i);
  }
  auto lookup = [](const auto& map, const auto& key) -> const std::vector<std::size_t>& {
    static const std::vector<std::size_t> kEmpty;
    auto it = map.find(key);
    return it == map.end() ? kEmpty : it->second;
  };

  // (2) same head, same stack: columns differing only in state.
  for (const auto& [key, group] : by_read_top) {
    for (std::size_t x = 0; x < group.size(); ++x) {
      for (std::size_t y = x + 1; y < group.size(); ++y) {
        const auto& c1 = cols[group[x]];
        const auto& c2 = cols[group[y]];
        rec.sum_should_vanish(kSameStack, overlap_full(c1.entries, c2.entries),
                              pair_witness(c1.ref, c2.ref));
      }
    }
  }

  for (const auto& c1 : cols) {
    const SymbolId b1 = c1.ref.top;

    // (3a) same head: ε or push p1 against a longer push that lands on the
    // same stack.
    for (const auto& [p1, entries1] : c1.by_op) {
      if (p1.is_pop()) continue;
      for (const auto& p2 : realigning(b1, p1)) {
        for (std::size_t j : lookup(by_read_op, std::make_pair(c1.ref.read, p2))) {
          const auto& c2 = cols[j];
          Witness w = pair_witness(c1.ref, c2.ref);
          w.first_op = p1;
          w.second_op = p2;
          rec.sum_should_vanish(kPushOverlap, overlap(entries1, c2.by_op.at(p2)), std::move(w));
        }
      }
    }

    // (3b) same head: a pop against any non-pop operation.
    if (auto pops = c1.by_op.find(StackOp::pop()); pops != c1.by_op.end()) {
      for (const auto& [key, group] : by_read_op) {
        if (key.first != c1.ref.read || key.second.is_pop()) continue;
        for (std::size_t j : group) {
          const auto& c2 = cols[j];
          Witness w = pair_witness(c1.ref, c2.ref);
          w.first_op = StackOp::pop();
          w.second_op = key.second;
          rec.sum_should_vanish(kPopOverlap, overlap(pops->second, c2.by_op.at(key.second)),
                                std::move(w));
        }
      }
    }

    // (4) heads one apart, same stack and operation.
    if (!c1.by_move[0].empty()) {
      for (std::size_t j : by_top[b1]) {
        const auto& c2 = cols[j];
        if (c2.by_move[1].empty()) continue;
        Witness w = pair_witness(c1.ref, c2.ref);
        w.first_move = Move::kStay;
        w.second_move = Move::kRight;
        rec.sum_should_vanish(kShift, overlap(c1.by_move[0], c2.by_move[1]), std::move(w));
      }
    }

    // (5a) and (5b): heads one apart and different stacks.
    for (const auto& [key1, entries1] : c1.by_op_move) {
      const auto& [p1, d1] = key1;
      const Move d2 = d1 == Move::kStay ? Move::kRight : Move::kStay;
      if (!p1.is_pop()) {
        for (const auto& p2 : realigning(b1, p1)) {
          for (std::size_t j : lookup(by_op_move, std::make_pair(p2, d2))) {
            const auto& c2 = cols[j];
            Witness w = pair_witness(c1.ref, c2.ref);
            w.first_op = p1;
            w.second_op = p2;
            w.first_move = d1;
            w.second_move = d2;
            rec.sum_should_vanish(kShiftPush, overlap(entries1, c2.by_op_move.at({p2, d2})),
                                  std::move(w));
          }
        }
      } else {
        for (const auto& [key2, group] : by_op_move) {
          if (key2.second != d2 || key2.first.is_pop()) continue;
          for (std::size_t j : group) {
            const auto& c2 = cols[j];
            Witness w = pair_witness(c1.ref, c2.ref);
            w.first_op = p1;
            w.second_op = key2.first;
            w.first_move = d1;
            w.second_move = d2;
            rec.sum_should_vanish(kShiftPop, overlap(entries1, c2.by_op_move.at(key2)),
                                  std::move(w));
          }
        }
      }
    }
  }

  finish(report);
  return report;
}

WfReport check_qcpda(const MachineQCPDA& m, CheckMode mode, double tol) {
  WfReport report;
  report.mode = mode;
  report.tolerance = tol;
  report.notes = {"columns of U_a are indexed by (q, input symbol) for each stack symbol a"};
  Recorder rec(report, tol);

  const ColumnIndex<TransitionQCPDA> index(m, m.transitions);
  struct Column {
    ColumnRef ref;
    std::vector<std::pair<Target, Amplitude>> all;
    std::array<std::vector<std::pair<StateId, Amplitude>>, 2> by_move;
  };
  std::vector<Column> cols;
  for (StateId q = 0; q < m.num_states(); ++q) {
    for (SymbolId a = 0; a < m.input.symbols.size(); ++a) {
      for (SymbolId b = 0; b < m.stack.symbols.size(); ++b) {
        auto entries = index.column(q, a, b);
        if (entries.empty()) {
          if (mode == CheckMode::kTotal) rec.norm(0.0, true, column_witness(ColumnRef{q, a, b}));
          continue;
        }
        Column c;
        c.ref = {q, a, b};
        double norm = 0.0;
        for (const auto& t : entries) {
          norm += std::norm(t.amp);
          c.all.push_back({{t.to, t.move}, t.amp});
          c.by_move[offset(t.move)].push_back({t.to, t.amp});
        }
        rec.norm(norm, mode == CheckMode::kTotal, column_witness(c.ref));
        cols.push_back(std::move(c));
      }
    }
  }

  for (std::size_t i = 0; i < cols.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const auto& c1 = cols[i];
      const auto& c2 = cols[j];
      if (c1.ref.top != c2.ref.top) continue;
      // Same head position: U_a columns (q1, k) and (q2, k).
      if (i < j && c1.ref.read == c2.ref.read) {
        rec.sum_should_vanish(kSameStack, overlap(c1.all, c2.all), pair_witness(c1.ref, c2.ref));
      }
      // (q1, k) staying and (q2, k-1) moving right meet at head k.
      if (!c1.by_move[0].empty() && !c2.by_move[1].empty()) {
        Witness w = pair_witness(c1.ref, c2.ref);
        w.first_move = Move::kStay;
        w.second_move = Move::kRight;
        rec.sum_should_vanish(kShift, overlap(c1.by_move[0], c2.by_move[1]), std::move(w));
      }
    }
  }

  finish(report);
  return report;
}

WfReport check_ppa(const MachinePPA& m, double tol) {
  WfReport report;
  report.mode = CheckMode::kPartial;
  report.tolerance = tol;
  const ColumnIndex<TransitionPPA> index(m, m.transitions);
  for (StateId q = 0; q < m.num_states(); ++q) {
    for (SymbolId a = 0; a < m.input.symbols.size(); ++a) {
      for (SymbolId b = 0; b < m.stack.symbols.size(); ++b) {
        auto entries = index.column(q, a, b);
        if (entries.empty()) continue;
        const ColumnRef ref{q, a, b};
        double sum = 0.0;
        for (const auto& t : entries) {
          sum += t.prob;
          Witness w = column_witness(ref);
          w.target = t.to;
          w.first_op = t.op;
          w.first_move = t.move;
          if (!(t.prob >= 0.0 && t.prob <= 1.0)) {
            const double dev = t.prob < 0.0 ? -t.prob : t.prob - 1.0;
            report.violations.push_back({"range", w, t.prob, std::isfinite(dev) ? dev : 1.0});
          }
          if (t.op.is_pop() && b == m.stack.bottom && t.prob > 0.0) {
            report.violations.push_back({"pop_on_bottom", w, t.prob, t.prob});
          }
        }
        if (std::abs(sum - 1.0) > tol) {
          report.violations.push_back({"stochastic", column_witness(ref), sum, std::abs(sum - 1.0)});
        }
      }
    }
  }
  finish(report);
  return report;
}

}  // namespace qpag
