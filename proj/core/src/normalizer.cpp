// Copyright 2026 The Sarf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sarf/normalizer.hpp"

#include "sarf/chars.hpp"

namespace sarf {

std::string normalize(std::string_view raw) {
  const std::u32string cps = decode_utf8(raw);
  std::u32string kept;
  kept.reserve(cps.size());
  for (char32_t c : cps) {
    if (is_arabic_diacritic(c) || is_tatweel(c)) continue;
    kept.push_back(c);
  }
  return encode_utf8(kept);
}

std::vector<Token> tokenize(std::string_view text, std::size_t first_position) {
  std::vector<Token> tokens;
  const std::u32string cps = decode_utf8(text);
  std::size_t position = first_position;

  std::size_t i = 0;
  while (i < cps.size()) {
    if (is_whitespace(cps[i])) {
      ++i;
      continue;
    }
    const bool arabic_run = is_arabic_word_char(cps[i]);
    std::size_t j = i + 1;
    while (j < cps.size() && !is_whitespace(cps[j]) &&
           is_arabic_word_char(cps[j]) == arabic_run) {
      ++j;
    }
    Token tok;
    tok.raw = encode_utf8(std::u32string_view(cps).substr(i, j - i));
    tok.position = position++;
    if (arabic_run) {
      tok.normalized = normalize(tok.raw);
      // A run of pure tatweel/diacritics normalizes to nothing; treat it as
      // unanalyzable rather than handing an empty string downstream.
      tok.arabic = !tok.normalized.empty();
      if (!tok.arabic) tok.normalized = tok.raw;
    } else {
      tok.normalized = tok.raw;
      tok.arabic = false;
    }
    tokens.push_back(std::move(tok));
    i = j;
  }
  return tokens;
}

}  // namespace sarf
