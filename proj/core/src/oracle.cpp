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

#include "sarf/oracle.hpp"

#include <random>

#include "sarf/chars.hpp"
#include "sarf/scheme_matcher.hpp"

namespace sarf::oracle {

namespace {

bool u32_starts_with(const std::u32string& text, const std::u32string& prefix) {
  return text.size() >= prefix.size() && text.compare(0, prefix.size(), prefix) == 0;
}

bool u32_ends_with(const std::u32string& text, const std::u32string& suffix) {
  return text.size() >= suffix.size() &&
         text.compare(text.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

std::set<Decomposition> brute_force_decompositions(std::string_view token,
                                                   const LexiconSet& lex) {
  const std::u32string word = decode_utf8(token);
  std::set<Decomposition> out;
  for (const std::u32string& pro : lex.proclitics()) {
    if (!u32_starts_with(word, pro)) continue;
    for (const std::u32string& enc : lex.enclitics()) {
      if (pro.size() + enc.size() >= word.size()) continue;
      if (!u32_ends_with(word, enc)) continue;
      if (!lex.clitics_compatible(encode_utf8(pro), encode_utf8(enc))) continue;
      const std::u32string base1 =
          word.substr(pro.size(), word.size() - pro.size() - enc.size());
      for (const std::u32string& pre : lex.prefixes()) {
        if (!u32_starts_with(base1, pre)) continue;
        for (const std::u32string& suf : lex.suffixes()) {
          if (pre.size() + suf.size() >= base1.size()) continue;
          if (!u32_ends_with(base1, suf)) continue;
          if (!lex.affixes_compatible(encode_utf8(pre), encode_utf8(suf))) continue;
          const std::u32string base =
              base1.substr(pre.size(), base1.size() - pre.size() - suf.size());
          out.emplace(encode_utf8(pro), encode_utf8(pre), encode_utf8(base),
                      encode_utf8(suf), encode_utf8(enc));
        }
      }
    }
  }
  return out;
}

OracleReport compare_with_oracle(
    std::string_view token,
    const std::vector<std::pair<CliticDecomposition, AffixDecomposition>>& main_output,
    const LexiconSet& lex) {
  OracleReport report;
  report.token = std::string(token);

  std::set<Decomposition> main_set;
  for (const auto& [clitic, affix] : main_output) {
    main_set.emplace(clitic.proclitic, affix.prefix, affix.base, affix.suffix,
                     clitic.enclitic);
  }
  const std::set<Decomposition> oracle_set = brute_force_decompositions(token, lex);

  for (const Decomposition& d : oracle_set) {
    if (!main_set.contains(d)) report.missing.push_back(d);
  }
  for (const Decomposition& d : main_set) {
    if (!oracle_set.contains(d)) report.extra.push_back(d);
  }
  return report;
}

std::vector<ComposedWord> fuzz_generate(const LexiconSet& lex, std::uint64_t seed,
                                        std::size_t n) {
  std::vector<ComposedWord> out;
  if (n == 0 || lex.roots().empty() || lex.schemes().empty()) return out;
  out.reserve(n);

  std::mt19937_64 rng(seed);
  const auto pick = [&rng](std::size_t size) {
    return static_cast<std::size_t>(rng() % size);
  };

  while (out.size() < n) {
    const std::string& root = lex.roots()[pick(lex.roots().size())];
    const SchemeEntry& scheme = lex.schemes()[pick(lex.schemes().size())];

    std::string base;
    try {
      base = apply_scheme(root, scheme);
    } catch (const std::invalid_argument&) {
      continue;  // root with decorations; leave it to the lexicon validator
    }
    // The analyzer stops at whole-word and base-level dictionary hits, so a
    // colliding composition would never reach the scheme matcher. Redraw.
    if (lex.classify_whole_word(base).kind != WholeWordClass::NotFound) continue;

    const std::u32string& pro = lex.proclitics()[pick(lex.proclitics().size())];
    const std::u32string& enc = lex.enclitics()[pick(lex.enclitics().size())];
    if (!lex.clitics_compatible(encode_utf8(pro), encode_utf8(enc))) continue;
    const std::u32string& pre = lex.prefixes()[pick(lex.prefixes().size())];
    const std::u32string& suf = lex.suffixes()[pick(lex.suffixes().size())];
    if (!lex.affixes_compatible(encode_utf8(pre), encode_utf8(suf))) continue;

    ComposedWord cw;
    cw.root = root;
    cw.scheme = scheme.wazn;
    cw.proclitic = encode_utf8(pro);
    cw.prefix = encode_utf8(pre);
    cw.suffix = encode_utf8(suf);
    cw.enclitic = encode_utf8(enc);
    cw.word = cw.proclitic + cw.prefix + base + cw.suffix + cw.enclitic;
    if (lex.classify_whole_word(cw.word).kind != WholeWordClass::NotFound) continue;
    out.push_back(std::move(cw));
  }
  return out;
}

}  // namespace sarf::oracle
