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

#ifndef SARF_ANALYZER_HPP_
#define SARF_ANALYZER_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sarf/lexicon.hpp"
#include "sarf/normalizer.hpp"

namespace sarf {

enum class WordKind { Derived, Function, Specific, Stop, Unanalyzed };

/// One complete reading of a token: the five-part segmentation plus, for
/// derived words, the root/scheme pair it validates against.
///
/// proclitic + prefix + base + suffix + enclitic always reconstructs the
/// analyzed form (the normalized token, or the raw token when unanalyzed).
/// root and scheme are present exactly when kind == Derived.
struct Analysis {
  std::string proclitic;
  std::string prefix;
  std::string base;
  std::string suffix;
  std::string enclitic;

  std::optional<std::string> root;
  std::optional<std::string> scheme;
  WordCategory category = WordCategory::None;
  WordKind kind = WordKind::Unanalyzed;
  std::optional<SuccessorClass> successor_class;  // function words only

  // File order of the matched scheme; used as a ranking tiebreak.
  std::size_t scheme_ordinal = static_cast<std::size_t>(-1);

  std::string reconstructed() const {
    return proclitic + prefix + base + suffix + enclitic;
  }

  bool operator==(const Analysis&) const = default;
};

/// Every candidate reading of a token, best first. Never empty: tokens that
/// validate nowhere fall back to a single Specific (or Unanalyzed) candidate.
struct AnalysisSet {
  Token token;
  std::vector<Analysis> candidates;

  // Lvalue-only: calling best() on a temporary would return a dangling
  // reference.
  const Analysis& best() const& { return candidates.front(); }
  const Analysis& best() const&& = delete;
};

/// Runs the full pipeline: whole-word dictionary check, exhaustive
/// segmentation, scheme/root validation, ranking, interpretation.
AnalysisSet analyze(const Token& token, const LexiconSet& lex);

/// Deterministic total order over candidates:
///   1. kind: Derived, Function, Specific, Stop, Unanalyzed;
///   2. within Derived, fewer scheme (infix) letters in the base — the base
///      closest to the bare triliteral root wins;
///   3. longer base;
///   4. fewer clitic+affix letters stripped;
///   5. scheme file order;
///   6. the five-part split itself, lexicographically.
std::vector<Analysis> rank(std::vector<Analysis> candidates);

/// Fills `category` from the matched scheme (Derived) or None (everything
/// else). Idempotent.
Analysis interpret(Analysis analysis, const LexiconSet& lex);

enum class StemMode { Root, Light, Segment };

struct SegmentSplit {
  std::string proclitic;
  std::string prefix;
  std::string base;
  std::string suffix;
  std::string enclitic;

  bool operator==(const SegmentSplit&) const = default;
};

/// Root mode: the best candidate's root (its base when not derived).
/// Light mode: the best candidate's base, scheme infixes kept.
/// Segment mode: the best candidate's five-part split.
using StemOutput = std::variant<std::string, SegmentSplit>;
StemOutput stem(const Token& token, StemMode mode, const LexiconSet& lex);

std::string_view to_string(WordKind kind);

}  // namespace sarf

#endif  // SARF_ANALYZER_HPP_
