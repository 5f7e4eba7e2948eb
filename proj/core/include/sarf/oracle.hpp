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

#ifndef SARF_ORACLE_HPP_
#define SARF_ORACLE_HPP_

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sarf/lexicon.hpp"
#include "sarf/segmenter.hpp"

namespace sarf::oracle {

// Reference implementations used to cross-check the segmenter. Deliberately
// naive: plain nested loops over the full inventories, no ordering, no
// sharing of segmenter code. Test-suite scale only.

/// A full five-part split in canonical comparable form.
using Decomposition =
    std::tuple<std::string, std::string, std::string, std::string, std::string>;

/// Every (proclitic, prefix, base, suffix, enclitic) split of `token` that
/// satisfies the inventory, compatibility and non-empty-base constraints.
std::set<Decomposition> brute_force_decompositions(std::string_view token,
                                                   const LexiconSet& lex);

/// Set difference report between the segmenter's output and the oracle's.
struct OracleReport {
  std::string token;
  std::vector<Decomposition> missing;  // oracle has it, main set does not
  std::vector<Decomposition> extra;    // main set has it, oracle does not

  bool equal() const { return missing.empty() && extra.empty(); }
};

OracleReport compare_with_oracle(
    std::string_view token,
    const std::vector<std::pair<CliticDecomposition, AffixDecomposition>>& main_output,
    const LexiconSet& lex);

/// One pseudo-randomly composed inflected form.
struct ComposedWord {
  std::string word;  // proclitic+prefix+apply_scheme(root, scheme)+suffix+enclitic
  std::string root;
  std::string scheme;  // wazn
  std::string proclitic, prefix, suffix, enclitic;
};

/// Deterministically composes `n` inflected forms from the lexicon using only
/// compatible clitic/affix tuples. Compositions whose base or full surface
/// collides with a whole-word dictionary entry are re-drawn, so every result
/// is guaranteed to reach scheme matching when analyzed. Same seed, same
/// lexicons: same list.
std::vector<ComposedWord> fuzz_generate(const LexiconSet& lex, std::uint64_t seed,
                                        std::size_t n);

}  // namespace sarf::oracle

#endif  // SARF_ORACLE_HPP_
