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

#ifndef SARF_SEGMENTER_HPP_
#define SARF_SEGMENTER_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "sarf/lexicon.hpp"

namespace sarf {

/// Outer stripping layer: token = proclitic + base1 + enclitic, letter-exact.
/// Clitics come from the inventories and the fused proclitic+enclitic string
/// passes the incompatibility check. base1 is never empty.
struct CliticDecomposition {
  std::string proclitic;
  std::string base1;
  std::string enclitic;

  bool operator==(const CliticDecomposition&) const = default;
};

/// Inner stripping layer: base1 = prefix + base + suffix, letter-exact, with
/// a compatible (prefix, suffix) pair and a non-empty base.
struct AffixDecomposition {
  std::string prefix;
  std::string base;
  std::string suffix;

  bool operator==(const AffixDecomposition&) const = default;
};

bool clitics_compatible(std::string_view proclitic, std::string_view enclitic,
                        const LexiconSet& lex);

bool affixes_compatible(std::string_view prefix, std::string_view suffix,
                        const LexiconSet& lex);

/// Every valid proclitic/enclitic split of `token`, ordered by decreasing
/// total clitic length, then longer proclitic, then lexicographically by
/// (proclitic, enclitic). The trivial split is always present, so the result
/// is never empty for a non-empty token.
std::vector<CliticDecomposition> strip_clitics(std::string_view token,
                                               const LexiconSet& lex);

/// Same discipline as strip_clitics, over the prefix/suffix inventories and
/// the affix incompatibility table.
std::vector<AffixDecomposition> strip_affixes(std::string_view base1,
                                              const LexiconSet& lex);

/// The compatibility-filtered cross product of the two layers: for each
/// clitic split (in strip_clitics order), every affix split of its base1 (in
/// strip_affixes order).
std::vector<std::pair<CliticDecomposition, AffixDecomposition>> enumerate_all(
    std::string_view token, const LexiconSet& lex);

}  // namespace sarf

#endif  // SARF_SEGMENTER_HPP_
