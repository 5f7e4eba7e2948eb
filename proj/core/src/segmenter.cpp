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

#include "sarf/segmenter.hpp"

#include <algorithm>
#include <tuple>

#include "sarf/chars.hpp"

namespace sarf {

namespace {

bool starts_with(std::u32string_view text, std::u32string_view prefix) {
  return text.size() >= prefix.size() && text.substr(0, prefix.size()) == prefix;
}

bool ends_with(std::u32string_view text, std::u32string_view suffix) {
  return text.size() >= suffix.size() && text.substr(text.size() - suffix.size()) == suffix;
}

// Shared search over an outer/inner inventory pair: emits every split
// outer_start + middle + outer_end with non-empty middle that passes
// `compatible`, sorted by the segmentation order contract.
template <typename Compatible, typename Emit>
void enumerate_splits(std::u32string_view word,
                      const std::vector<std::u32string>& starts,
                      const std::vector<std::u32string>& ends,
                      Compatible&& compatible, Emit&& emit) {
  struct Split {
    std::u32string_view start, middle, end;
  };
  std::vector<Split> splits;
  for (const std::u32string& start : starts) {
    if (!starts_with(word, start)) continue;
    for (const std::u32string& end : ends) {
      if (start.size() + end.size() >= word.size()) continue;  // middle must be non-empty
      if (!ends_with(word, end)) continue;
      if (!compatible(start, end)) continue;
      splits.push_back({start, word.substr(start.size(), word.size() - start.size() - end.size()),
                        end});
    }
  }
  std::sort(splits.begin(), splits.end(), [](const Split& a, const Split& b) {
    const std::size_t stripped_a = a.start.size() + a.end.size();
    const std::size_t stripped_b = b.start.size() + b.end.size();
    if (stripped_a != stripped_b) return stripped_a > stripped_b;
    if (a.start.size() != b.start.size()) return a.start.size() > b.start.size();
    return std::tie(a.start, a.end) < std::tie(b.start, b.end);
  });
  for (const Split& split : splits) emit(split.start, split.middle, split.end);
}

}  // namespace

bool clitics_compatible(std::string_view proclitic, std::string_view enclitic,
                        const LexiconSet& lex) {
  return lex.clitics_compatible(proclitic, enclitic);
}

bool affixes_compatible(std::string_view prefix, std::string_view suffix,
                        const LexiconSet& lex) {
  return lex.affixes_compatible(prefix, suffix);
}

std::vector<CliticDecomposition> strip_clitics(std::string_view token,
                                               const LexiconSet& lex) {
  const std::u32string word = decode_utf8(token);
  std::vector<CliticDecomposition> result;
  enumerate_splits(
      word, lex.proclitics(), lex.enclitics(),
      [&](std::u32string_view p, std::u32string_view e) {
        return lex.clitics_compatible(encode_utf8(p), encode_utf8(e));
      },
      [&](std::u32string_view p, std::u32string_view mid, std::u32string_view e) {
        result.push_back({encode_utf8(p), encode_utf8(mid), encode_utf8(e)});
      });
  return result;
}

std::vector<AffixDecomposition> strip_affixes(std::string_view base1,
                                              const LexiconSet& lex) {
  const std::u32string word = decode_utf8(base1);
  std::vector<AffixDecomposition> result;
  enumerate_splits(
      word, lex.prefixes(), lex.suffixes(),
      [&](std::u32string_view p, std::u32string_view s) {
        return lex.affixes_compatible(encode_utf8(p), encode_utf8(s));
      },
      [&](std::u32string_view p, std::u32string_view mid, std::u32string_view s) {
        result.push_back({encode_utf8(p), encode_utf8(mid), encode_utf8(s)});
      });
  return result;
}

std::vector<std::pair<CliticDecomposition, AffixDecomposition>> enumerate_all(
    std::string_view token, const LexiconSet& lex) {
  std::vector<std::pair<CliticDecomposition, AffixDecomposition>> result;
  for (const CliticDecomposition& clitic : strip_clitics(token, lex)) {
    for (const AffixDecomposition& affix : strip_affixes(clitic.base1, lex)) {
      result.emplace_back(clitic, affix);
    }
  }
  return result;
}

}  // namespace sarf
