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

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qpag {

using SymbolId = std::uint8_t;
using StateId = std::uint16_t;
using Amplitude = std::complex<double>;

// A string over an alphabet, one byte per symbol index. Using std::string as
// storage keeps small stacks inline and gives ordering and hashing for free.
using SymbolString = std::string;

inline SymbolId symbol_at(const SymbolString& s, std::size_t i) {
  return static_cast<SymbolId>(s[i]);
}

inline SymbolId back_symbol(const SymbolString& s) {
  return static_cast<SymbolId>(s.back());
}

inline void append_symbol(SymbolString& s, SymbolId id) {
  s.push_back(static_cast<char>(id));
}

inline SymbolString single_symbol(SymbolId id) {
  return SymbolString(1, static_cast<char>(id));
}

// An ordered set of text tokens. Tokens are usually single graphemes, but any
// nonempty text works, which lets generated machines use names like "ℓ_pop".
class Alphabet {
 public:
  static constexpr std::size_t kMaxSize = 255;

  Alphabet() = default;
  explicit Alphabet(const std::vector<std::string>& tokens);

  SymbolId add(std::string token);
  std::optional<SymbolId> find(std::string_view token) const;
  // Throws UnknownSymbol.
  SymbolId at(std::string_view token) const;
  const std::string& token(SymbolId id) const { return tokens_.at(id); }
  std::size_t size() const { return tokens_.size(); }
  const std::vector<std::string>& tokens() const { return tokens_; }

  // True when every token is a single UTF-8 code point.
  bool single_graphemes() const;
  // Concatenates tokens when they are single graphemes, comma-joins otherwise.
  std::string format(const SymbolString& s) const;
  // Inverse of format. Throws UnknownSymbol.
  SymbolString parse(std::string_view text) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> tokens_;
};

// Splits UTF-8 text into code points.
std::vector<std::string> split_graphemes(std::string_view text);
// Splits on `sep`. An empty input yields an empty list.
std::vector<std::string> split_tokens(std::string_view text, char sep = ',');

}  // namespace qpag
