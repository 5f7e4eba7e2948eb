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

#include <gtest/gtest.h>

#include <stdexcept>

#include "sarf/chars.hpp"
#include "test_support.hpp"

using sarf::apply_scheme;
using sarf::extract_root;
using sarf::match_schemes;
using sarf::SchemeEntry;
using sarf::testing::seed_lexicons;

namespace {

const SchemeEntry& scheme(std::string_view wazn) {
  for (const SchemeEntry& s : seed_lexicons().schemes()) {
    if (s.wazn == wazn) return s;
  }
  throw std::logic_error("scheme not in seed lexicon: " + std::string(wazn));
}

}  // namespace

TEST(MatchSchemes, RecognizesActiveParticiple) {
  const auto matches = match_schemes("صالح", seed_lexicons());
  ASSERT_EQ(matches.size(), 1u);
  EXPECT_EQ(matches[0].scheme->wazn, "فاعل");
  EXPECT_EQ(matches[0].root, "صلح");
  EXPECT_EQ(matches[0].base, "صالح");
}

TEST(MatchSchemes, RecognizesBrokenPlural) {
  const auto matches = match_schemes("مساجد", seed_lexicons());
  ASSERT_EQ(matches.size(), 1u);
  EXPECT_EQ(matches[0].scheme->wazn, "مفاعل");
  EXPECT_EQ(matches[0].root, "سجد");
}

TEST(MatchSchemes, NonArabicLettersMatchNothing) {
  EXPECT_TRUE(match_schemes("xyzq", seed_lexicons()).empty());
}

TEST(MatchSchemes, UnknownResidueIsDiscarded) {
  // قاقق has فاعل's shape at position 2 but ققق is not a root.
  EXPECT_TRUE(match_schemes("قاقق", seed_lexicons()).empty());
}

TEST(MatchSchemes, MatchesNeverViolateFixedLetters) {
  const auto& lex = seed_lexicons();
  for (const std::string& base : {std::string("صالح"), std::string("مكتوب"),
                                  std::string("أعلن"), std::string("تعلم")}) {
    for (const auto& match : match_schemes(base, lex)) {
      const std::u32string base_letters = sarf::decode_utf8(match.base);
      ASSERT_EQ(base_letters.size(), match.scheme->length());
      for (int p : match.scheme->infix_positions) {
        EXPECT_EQ(base_letters[p - 1], match.scheme->wazn_letters[p - 1]);
      }
      EXPECT_EQ(extract_root(match.base, *match.scheme), match.root);
      EXPECT_TRUE(lex.has_root(match.root));
    }
  }
}

TEST(ExtractRoot, DeletesInfixPositions) {
  EXPECT_EQ(extract_root("صالح", scheme("فاعل")), "صلح");
  EXPECT_EQ(extract_root("مكتوب", scheme("مفعول")), "كتب");
  EXPECT_EQ(extract_root("فعل", scheme("فعل")), "فعل");
}

TEST(ExtractRoot, LengthMismatchIsContractError) {
  EXPECT_THROW(extract_root("صالحون", scheme("فاعل")), std::invalid_argument);
}

TEST(ApplyScheme, InterleavesRootIntoPattern) {
  EXPECT_EQ(apply_scheme("صلح", scheme("فاعل")), "صالح");
  EXPECT_EQ(apply_scheme("كتب", scheme("مفعول")), "مكتوب");
  EXPECT_EQ(apply_scheme("فعل", scheme("فعل")), "فعل");
}

TEST(ApplyScheme, RootMustHaveThreeLetters) {
  EXPECT_THROW(apply_scheme("صل", scheme("فاعل")), std::invalid_argument);
  EXPECT_THROW(apply_scheme("صلحح", scheme("فاعل")), std::invalid_argument);
}

TEST(SchemeRoundTrip, PropertyExtractInvertsApply) {
  const auto& lex = seed_lexicons();
  for (const SchemeEntry& s : lex.schemes()) {
    for (const std::string& root : lex.roots()) {
      EXPECT_EQ(extract_root(apply_scheme(root, s), s), root)
          << root << " through " << s.wazn;
    }
  }
}

TEST(SchemeRoundTrip, WaznIsItsOwnInstantiation) {
  // Every wazn is the pattern applied to the reference root فعل.
  for (const SchemeEntry& s : seed_lexicons().schemes()) {
    EXPECT_EQ(apply_scheme("فعل", s), s.wazn) << s.wazn;
  }
}

TEST(MatchSchemes, OrderFollowsSchemeFile) {
  const auto& lex = seed_lexicons();
  for (const std::string& base : {std::string("كاتب"), std::string("أعلن")}) {
    const auto matches = match_schemes(base, lex);
    for (std::size_t i = 1; i < matches.size(); ++i) {
      EXPECT_LT(matches[i - 1].scheme->ordinal, matches[i].scheme->ordinal);
    }
  }
}
