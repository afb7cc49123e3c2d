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

#include "qpag/symbols.h"

#include "qpag/errors.h"

namespace qpag {

Alphabet::Alphabet(const std::vector<std::string>& tokens) {
  for (const auto& t : tokens) add(t);
}

SymbolId Alphabet::add(std::string token) {
  if (token.empty()) throw InvariantError("symbol tokens must be nonempty");
  if (find(token)) throw InvariantError("duplicate symbol token '" + token + "'");
  if (tokens_.size() >= kMaxSize) {
    throw InvariantError("alphabet exceeds " + std::to_string(kMaxSize) + " symbols");
  }
  tokens_.push_back(std::move(token));
  return static_cast<SymbolId>(tokens_.size() - 1);
}

std::optional<SymbolId> Alphabet::find(std::string_view token) const {
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (tokens_[i] == token) return static_cast<SymbolId>(i);
  }
  return std::nullopt;
}

SymbolId Alphabet::at(std::string_view token) const {
  if (auto id = find(token)) return *id;
  throw UnknownSymbol("unknown symbol '" + std::string(token) + "'");
}

bool Alphabet::single_graphemes() const {
  for (const auto& t : tokens_) {
    if (split_graphemes(t).size() != 1) return false;
  }
  return true;
}

std::string Alphabet::format(const SymbolString& s) const {
  const bool concat = single_graphemes();
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!concat && i > 0) out += ',';
    out += token(symbol_at(s, i));
  }
  return out;
}

SymbolString Alphabet::parse(std::string_view text) const {
  const auto parts = single_graphemes() ? split_graphemes(text) : split_tokens(text);
  SymbolString out;
  for (const auto& p : parts) append_symbol(out, at(p));
  return out;
}

std::vector<std::string> split_graphemes(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const auto lead = static_cast<unsigned char>(text[i]);
    std::size_t len = 1;
    if (lead >= 0xF0) {
      len = 4;
    } else if (lead >= 0xE0) {
      len = 3;
    } else if (lead >= 0xC0) {
      len = 2;
    }
    len = std::min(len, text.size() - i);
    out.emplace_back(text.substr(i, len));
    i += len;
  }
  return out;
}

std::vector<std::string> split_tokens(std::string_view text, char sep) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace qpag
