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

#include <stdexcept>
#include <string>

namespace qpag {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownSymbol : public Error {
 public:
  using Error::Error;
};

class EndmarkerInWord : public Error {
 public:
  using Error::Error;
};

class PopOnBottom : public Error {
 public:
  using Error::Error;
};

// Raised when a sparse state, branch frontier or reachable set exceeds its cap.
class StateSpaceOverflow : public Error {
 public:
  using Error::Error;
};

class NotDeterministic : public Error {
 public:
  using Error::Error;
};

class NonWellFormedInput : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidInstance : public Error {
 public:
  using Error::Error;
};

// Malformed JSON text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed JSON with missing, extra or mistyped fields.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// A machine that violates a structural rule. The message names the rule.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace qpag
