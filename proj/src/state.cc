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

#include "qpag/state.h"

#include <algorithm>
#include <cmath>

namespace qpag {

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const auto& [c, a] : entries) total += std::norm(a);
  return total;
}

std::vector<std::pair<Configuration, Amplitude>> top_entries(const StateVector& v,
                                                             std::size_t k) {
  std::vector<std::pair<Configuration, Amplitude>> all(v.entries.begin(), v.entries.end());
  // Stable sort on a map-ordered sequence breaks magnitude ties by configuration.
  std::stable_sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
    return std::abs(x.second) > std::abs(y.second);
  });
  if (all.size() > k) all.resize(k);
  return all;
}

std::string describe(const Configuration& c, const MachineBase& m) {
  return "(" + m.state_name(c.state) + ", " + std::to_string(c.head) + ", " +
         m.stack.symbols.format(c.stack) + ", " + m.stack.symbols.format(c.garbage) + ")";
}

}  // namespace qpag
