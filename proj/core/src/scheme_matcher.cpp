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

#include "sarf/scheme_matcher.hpp"

#include <stdexcept>

#include "sarf/chars.hpp"

namespace sarf {

namespace {

std::u32string extract_root_letters(std::u32string_view base, const SchemeEntry& scheme) {
  std::u32string root;
  root.reserve(3);
  std::size_t next_infix = 0;
  for (std::size_t i = 0; i < base.size(); ++i) {
    const int position = static_cast<int>(i) + 1;  // positions are 1-based
    if (next_infix < scheme.infix_positions.size() &&
        scheme.infix_positions[next_infix] == position) {
      ++next_infix;
      continue;
    }
    root.push_back(base[i]);
  }
  return root;
}

}  // namespace

std::vector<SchemeMatch> match_schemes(std::string_view base, const LexiconSet& lex) {
  const std::u32string letters = decode_utf8(base);
  std::vector<SchemeMatch> matches;
  for (const SchemeEntry* scheme : lex.schemes_of_length(letters.size())) {
    bool fixed_letters_match = true;
    for (int position : scheme->infix_positions) {
      if (letters[position - 1] != scheme->wazn_letters[position - 1]) {
        fixed_letters_match = false;
        break;
      }
    }
    if (!fixed_letters_match) continue;
    std::string root = encode_utf8(extract_root_letters(letters, *scheme));
    // A matching shape whose residue is not a known root is no match at all.
    if (!lex.has_root(root)) continue;
    matches.push_back({scheme, std::move(root), std::string(base)});
  }
  return matches;
}

std::string extract_root(std::string_view base, const SchemeEntry& scheme) {
  const std::u32string letters = decode_utf8(base);
  if (letters.size() != scheme.length()) {
    throw std::invalid_argument("extract_root: base '" + std::string(base) +
                                "' does not match scheme '" + scheme.wazn + "' in length");
  }
  return encode_utf8(extract_root_letters(letters, scheme));
}

std::string apply_scheme(std::string_view root, const SchemeEntry& scheme) {
  const std::u32string root_letters = decode_utf8(root);
  if (root_letters.size() != 3) {
    throw std::invalid_argument("apply_scheme: root '" + std::string(root) +
                                "' is not exactly three letters");
  }
  std::u32string word(scheme.length(), U'\0');
  std::size_t next_infix = 0;
  std::size_t next_root = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const int position = static_cast<int>(i) + 1;
    if (next_infix < scheme.infix_positions.size() &&
        scheme.infix_positions[next_infix] == position) {
      word[i] = scheme.wazn_letters[i];
      ++next_infix;
    } else {
      word[i] = root_letters[next_root++];
    }
  }
  return encode_utf8(word);
}

}  // namespace sarf
