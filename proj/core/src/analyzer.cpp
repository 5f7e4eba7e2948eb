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

#include "sarf/analyzer.hpp"

#include <algorithm>
#include <tuple>

#include "sarf/chars.hpp"
#include "sarf/scheme_matcher.hpp"
#include "sarf/segmenter.hpp"

namespace sarf {

namespace {

int kind_order(WordKind kind) {
  switch (kind) {
    case WordKind::Derived: return 0;
    case WordKind::Function: return 1;
    case WordKind::Specific: return 2;
    case WordKind::Stop: return 3;
    case WordKind::Unanalyzed: return 4;
  }
  return 4;
}

Analysis whole_word_candidate(const std::string& surface, WordKind kind,
                              std::optional<SuccessorClass> successor_class) {
  Analysis a;
  a.base = surface;
  a.kind = kind;
  a.successor_class = successor_class;
  return a;
}

}  // namespace

AnalysisSet analyze(const Token& token, const LexiconSet& lex) {
  AnalysisSet result;
  result.token = token;

  if (!token.arabic || token.normalized.empty()) {
    result.candidates.push_back(whole_word_candidate(token.raw, WordKind::Unanalyzed, {}));
    return result;
  }

  const std::string& word = token.normalized;

  // Whole-word dictionary hits are terminal; segmentation only runs when the
  // word misses all three dictionaries.
  const WholeWordClass whole = lex.classify_whole_word(word);
  switch (whole.kind) {
    case WholeWordClass::StopWord:
      result.candidates.push_back(whole_word_candidate(word, WordKind::Stop, {}));
      return result;
    case WholeWordClass::Function:
      result.candidates.push_back(
          whole_word_candidate(word, WordKind::Function, whole.successor_class));
      return result;
    case WholeWordClass::Specific:
      result.candidates.push_back(whole_word_candidate(word, WordKind::Specific, {}));
      return result;
    case WholeWordClass::NotFound:
      break;
  }

  std::vector<Analysis> candidates;
  for (const auto& [clitic, affix] : enumerate_all(word, lex)) {
    Analysis stencil;
    stencil.proclitic = clitic.proclitic;
    stencil.enclitic = clitic.enclitic;
    stencil.prefix = affix.prefix;
    stencil.suffix = affix.suffix;
    stencil.base = affix.base;

    const WholeWordClass base_class = lex.classify_whole_word(affix.base);
    if (base_class.kind == WholeWordClass::Function) {
      stencil.kind = WordKind::Function;
      stencil.successor_class = base_class.successor_class;
      candidates.push_back(std::move(stencil));
      continue;
    }
    if (base_class.kind == WholeWordClass::Specific) {
      stencil.kind = WordKind::Specific;
      candidates.push_back(std::move(stencil));
      continue;
    }
    for (const SchemeMatch& match : match_schemes(affix.base, lex)) {
      Analysis a = stencil;
      a.kind = WordKind::Derived;
      a.root = match.root;
      a.scheme = match.scheme->wazn;
      a.scheme_ordinal = match.scheme->ordinal;
      candidates.push_back(std::move(a));
    }
  }

  // Nothing validated: the word is treated as an unlisted proper or common
  // noun rather than rejected.
  if (candidates.empty()) {
    candidates.push_back(whole_word_candidate(word, WordKind::Specific, {}));
  }

  candidates = rank(std::move(candidates));
  for (Analysis& a : candidates) a = interpret(std::move(a), lex);
  result.candidates = std::move(candidates);
  return result;
}

std::vector<Analysis> rank(std::vector<Analysis> candidates) {
  struct Key {
    int kind;
    std::size_t infix_letters;
    std::size_t negated_base_length;
    std::size_t stripped_letters;
    std::size_t scheme_ordinal;
  };
  const auto key_of = [](const Analysis& a) {
    const std::size_t base_length = letter_count(a.base);
    const std::size_t infix_letters =
        a.kind == WordKind::Derived && base_length > 3 ? base_length - 3 : 0;
    return Key{kind_order(a.kind), infix_letters,
               static_cast<std::size_t>(-1) - base_length,
               letter_count(a.proclitic) + letter_count(a.prefix) +
                   letter_count(a.suffix) + letter_count(a.enclitic),
               a.scheme_ordinal};
  };
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](const Analysis& a, const Analysis& b) {
                     const Key ka = key_of(a), kb = key_of(b);
                     const auto ta = std::tie(ka.kind, ka.infix_letters, ka.negated_base_length,
                                              ka.stripped_letters, ka.scheme_ordinal);
                     const auto tb = std::tie(kb.kind, kb.infix_letters, kb.negated_base_length,
                                              kb.stripped_letters, kb.scheme_ordinal);
                     if (ta != tb) return ta < tb;
                     return std::tie(a.proclitic, a.prefix, a.base, a.suffix, a.enclitic) <
                            std::tie(b.proclitic, b.prefix, b.base, b.suffix, b.enclitic);
                   });
  return candidates;
}

Analysis interpret(Analysis analysis, const LexiconSet& lex) {
  if (analysis.kind != WordKind::Derived || !analysis.scheme) {
    analysis.category = WordCategory::None;
    return analysis;
  }
  const std::vector<SchemeEntry>& schemes = lex.schemes();
  if (analysis.scheme_ordinal < schemes.size() &&
      schemes[analysis.scheme_ordinal].wazn == *analysis.scheme) {
    analysis.category = schemes[analysis.scheme_ordinal].category;
    return analysis;
  }
  for (const SchemeEntry& scheme : schemes) {
    if (scheme.wazn == *analysis.scheme) {
      analysis.category = scheme.category;
      return analysis;
    }
  }
  analysis.category = WordCategory::None;
  return analysis;
}

StemOutput stem(const Token& token, StemMode mode, const LexiconSet& lex) {
  const AnalysisSet analysis = analyze(token, lex);
  const Analysis& best = analysis.best();
  switch (mode) {
    case StemMode::Root:
      return best.root ? *best.root : best.base;
    case StemMode::Light:
      return best.base;
    case StemMode::Segment:
      return SegmentSplit{best.proclitic, best.prefix, best.base, best.suffix, best.enclitic};
  }
  return best.base;
}

std::string_view to_string(WordKind kind) {
  switch (kind) {
    case WordKind::Derived: return "derived";
    case WordKind::Function: return "function_word";
    case WordKind::Specific: return "specific";
    case WordKind::Stop: return "stop_word";
    case WordKind::Unanalyzed: return "unanalyzed";
  }
  return "unanalyzed";
}

}  // namespace sarf
