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

#include <string>

#include "qpag/compile.h"
#include "qpag/problem1.h"
#include "qpag/sim_ppa.h"
#include "qpag/state.h"
#include "qpag/vendor_json.h"
#include "qpag/wellformed.h"

namespace qpag {

// Reports use 12 significant digits for every real number.
double report_number(double x);

Json to_json(const WfReport& r, const MachineBase& m);
Json to_json(const AuditReport& r, const MachineBase& m);
Json to_json(const RunResult& r, const MachineBase& m);
Json to_json(const CompileMap& map, const MachineBase& compiled);
Json to_json(const EquivReport& r);
Json to_json(const problem1::SweepReport& r);
Json to_json(const problem1::Instance& inst);
Json to_json(const DpdaOutcome& o);

// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

}  // namespace qpag
