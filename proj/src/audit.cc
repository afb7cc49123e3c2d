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

#include <cstdio>
#include <map>
#include <set>

#include "qpag/errors.h"
#include "qpag/sim_qpag.h"
#include "qpag/wellformed.h"

namespace qpag {

AuditReport audit_unitarity(const MachineQPAG& m, std::span<const std::string> word,
                            std::int64_t depth, const AuditOptions& options) {
  AuditReport report;
  report.mode = options.mode;
  report.depth = depth;

  const Tape tape = make_tape(m, word);
  const ColumnIndex<TransitionQPAG> index(m, m.transitions);
  const HaltingTable halting(m);
  auto evolving = [&](const Configuration& c) {
    return !halting.halting(c.state) && c.head < tape.size();
  };

  // Breadth-first structural reachability: every nonzero transition counts,
  // regardless of interference.
  std::set<Configuration> reached;
  std::vector<Configuration> frontier;
  {
    Configuration start = initial_vector(m).entries.begin()->first;
    reached.insert(start);
    frontier.push_back(std::move(start));
  }
  for (std::int64_t level = 0; level < depth && !frontier.empty(); ++level) {
    std::vector<Configuration> next;
    for (const auto& c : frontier) {
      if (!evolving(c)) continue;
      for (auto& [d, amp] : evolve_basis(m, index, tape, c)) {
        if (amp == Amplitude{} || reached.contains(d)) continue;
        reached.insert(d);
        next.push_back(std::move(d));
        if (reached.size() > options.max_configurations) {
          throw StateSpaceOverflow("reachable set exceeded " +
                                   std::to_string(options.max_configurations) + " configurations");
        }
      }
    }
    frontier = std::move(next);
  }
  report.reachable = reached.size();

  std::vector<const Configuration*> sources;
  std::map<Configuration, std::vector<std::pair<std::uint32_t, Amplitude>>> preimages;
  auto add_witness = [&](AuditWitness w) {
    report.passed = false;
    if (report.witnesses.size() < options.max_witnesses) report.witnesses.push_back(std::move(w));
  };

  for (const auto& c : reached) {
    if (!evolving(c)) continue;
    auto image = evolve_basis(m, index, tape, c);
    if (image.empty()) {
      ++report.undefined_columns;
      if (options.mode == CheckMode::kPartial) continue;
    }
    ++report.checked;
    double norm = 0.0;
    for (const auto& [d, amp] : image) norm += std::norm(amp);
    if (std::abs(norm - 1.0) > options.tol) add_witness({"norm", c, std::nullopt, norm});
    const auto id = static_cast<std::uint32_t>(sources.size());
    sources.push_back(&c);
    for (auto& [d, amp] : image) preimages[std::move(d)].push_back({id, amp});
  }

  std::map<std::pair<std::uint32_t, std::uint32_t>, Amplitude> overlaps;
  for (const auto& [d, from] : preimages) {
    for (std::size_t i = 0; i < from.size(); ++i) {
      for (std::size_t j = i + 1; j < from.size(); ++j) {
        auto [a, b] = std::minmax(from[i].first, from[j].first);
        const Amplitude x = a == from[i].first ? from[i].second : from[j].second;
        const Amplitude y = a == from[i].first ? from[j].second : from[i].second;
        overlaps[{a, b}] += std::conj(x) * y;
      }
    }
  }
  report.overlapping_pairs = overlaps.size();
  for (const auto& [key, value] : overlaps) {
    if (std::abs(value) > options.tol) {
      add_witness({"overlap", *sources[key.first], *sources[key.second], std::abs(value)});
    }
  }

  if (options.mode == CheckMode::kPartial && report.undefined_columns > 0) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "%llu reachable configurations have undefined columns and were skipped",
                  static_cast<unsigned long long>(report.undefined_columns));
    report.warnings.push_back(buf);
  }
  return report;
}

}  // namespace qpag
