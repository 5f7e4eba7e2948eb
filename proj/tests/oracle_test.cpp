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

#include <gtest/gtest.h>

#include <set>
#include <string>

#include "sarf/scheme_matcher.hpp"
#include "test_support.hpp"

using sarf::LexiconData;
using sarf::make_lexicons;
using sarf::SchemeEntry;
using sarf::WordCategory;
using sarf::oracle::brute_force_decompositions;
using sarf::oracle::ComposedWord;
using sarf::oracle::Decomposition;
using sarf::oracle::fuzz_generate;
using sarf::testing::seed_lexicons;

TEST(BruteForce, SingleLetterHasOnlyTrivialSplit) {
  const auto set = brute_force_decompositions("ع", seed_lexicons());
  ASSERT_EQ(set.size(), 1u);
  EXPECT_TRUE(set.contains(Decomposition{"", "", "ع", "", ""}));
}

TEST(BruteForce, CompositeWordSplitPresent) {
  const auto set = brute_force_decompositions("فكاتيبهم", seed_lexicons());
  EXPECT_TRUE(set.contains(Decomposition{"ف", "", "كاتيب", "", "هم"}));
}

TEST(BruteForce, DecompositionTableShape) {
  const auto set = brute_force_decompositions("فسأعلنه", seed_lexicons());
  EXPECT_EQ(set.size(), 12u);
  // base1 values of the occupied table cells
  std::set<std::string> base1s;
  for (const auto& [pro, pre, base, suf, enc] : set) {
    base1s.insert(pre + base + suf);
  }
  const std::set<std::string> expected = {"أعلن",  "أعلنه",  "سأعلن",
                                          "سأعلنه", "فسأعلن", "فسأعلنه"};
  EXPECT_EQ(base1s, expected);
  EXPECT_TRUE(set.contains(Decomposition{"فس", "أ", "علن", "", "ه"}));
}

TEST(FuzzGenerate, SameSeedSameOutput) {
  const auto& lex = seed_lexicons();
  const auto a = fuzz_generate(lex, 123, 50);
  const auto b = fuzz_generate(lex, 123, 50);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].word, b[i].word);
    EXPECT_EQ(a[i].root, b[i].root);
    EXPECT_EQ(a[i].scheme, b[i].scheme);
  }
}

TEST(FuzzGenerate, ZeroCount) {
  EXPECT_TRUE(fuzz_generate(seed_lexicons(), 0, 0).empty());
}

TEST(FuzzGenerate, MinimalLexiconComposesParticiple) {
  LexiconData data;
  data.schemes.push_back(
      {.wazn = "فاعل", .infix_positions = {2}, .category = WordCategory::Both});
  data.roots = {"كتب"};
  data.proclitics = std::vector<std::string>{""};
  data.enclitics = std::vector<std::string>{""};
  data.prefixes = std::vector<std::string>{""};
  data.suffixes = std::vector<std::string>{""};
  const auto lex = make_lexicons(std::move(data));

  const auto words = fuzz_generate(lex, 0, 1);
  ASSERT_EQ(words.size(), 1u);
  EXPECT_EQ(words[0].word, "كاتب");
  EXPECT_EQ(words[0].root, "كتب");
  EXPECT_EQ(words[0].scheme, "فاعل");
  EXPECT_EQ(words[0].proclitic, "");
  EXPECT_EQ(words[0].prefix, "");
  EXPECT_EQ(words[0].suffix, "");
  EXPECT_EQ(words[0].enclitic, "");
}

TEST(FuzzGenerate, CompositionsUseOnlyCompatibleTuples) {
  const auto& lex = seed_lexicons();
  for (const ComposedWord& cw : fuzz_generate(lex, 9, 500)) {
    EXPECT_TRUE(lex.clitics_compatible(cw.proclitic, cw.enclitic));
    EXPECT_TRUE(lex.affixes_compatible(cw.prefix, cw.suffix));

    const SchemeEntry* scheme = nullptr;
    for (const SchemeEntry& s : lex.schemes()) {
      if (s.wazn == cw.scheme) scheme = &s;
    }
    ASSERT_NE(scheme, nullptr);
    EXPECT_EQ(cw.word, cw.proclitic + cw.prefix + sarf::apply_scheme(cw.root, *scheme) +
                           cw.suffix + cw.enclitic);
  }
}
