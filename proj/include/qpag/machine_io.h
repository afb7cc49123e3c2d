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
#include <string_view>
#include <variant>

#include "qpag/vendor_json.h"
#include "qpag/machine.h"

namespace qpag {

using AnyMachine = std::variant<MachineQPAG, MachineQCPDA, MachinePPA>;

// Parses a machine document. Throws ParseError for malformed JSON, SchemaError
// for missing, extra or mistyped fields (with the JSON pointer of the field)
// and InvariantError for structural rule violations.
AnyMachine parse_machine(std::string_view document);

// Full-precision JSON. parse_machine(serialize_machine(m)) == m.
std::string serialize_machine(const AnyMachine& m);
Json machine_to_json(const AnyMachine& m);

std::string_view kind_of(const AnyMachine& m);

}  // namespace qpag
