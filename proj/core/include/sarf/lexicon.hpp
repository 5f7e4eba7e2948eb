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

#ifndef SARF_LEXICON_HPP_
#define SARF_LEXICON_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace sarf {

enum class WordCategory { Verb, Noun, Both, None };

enum class SuccessorClass { Nominal, Verbal, Common };

/// A morphological pattern (wazn). `infix_positions` are the 1-based letter
/// positions occupied by pattern letters rather than root letters; deleting
/// them from `wazn` always leaves exactly the three root slots.
struct SchemeEntry {
  std::string wazn;                 // UTF-8
  std::u32string wazn_letters;      // decoded once at load time
  std::vector<int> infix_positions; // 1-based, strictly increasing
  WordCategory category = WordCategory::None;
  std::size_t ordinal = 0;          // position within the scheme file

  std::size_t length() const { return wazn_letters.size(); }
  std::size_t infix_count() const { return infix_positions.size(); }

  bool operator==(const SchemeEntry& other) const {
    return wazn == other.wazn && infix_positions == other.infix_positions &&
           category == other.category;
  }
};

struct FunctionWord {
  std::string surface;
  SuccessorClass successor_class = SuccessorClass::Common;

  bool operator==(const FunctionWord&) const = default;
};

/// Result of a whole-word dictionary probe, in lookup order.
struct WholeWordClass {
  enum Kind { StopWord, Function, Specific, NotFound } kind = NotFound;
  std::optional<SuccessorClass> successor_class;  // set for Function only
};

class LexiconError : public std::runtime_error {
 public:
  explicit LexiconError(const std::string& message) : std::runtime_error(message) {}
};

/// Raw dictionary content prior to validation. The four inventory overrides
/// are for programmatic callers (tests, embedding applications); when absent,
/// the built-in inventories are used.
struct LexiconData {
  std::vector<SchemeEntry> schemes;
  std::vector<std::string> roots;
  std::vector<FunctionWord> function_words;
  std::vector<std::string> specific_words;
  std::vector<std::string> stop_words;
  std::vector<std::string> clitic_incompatibilities;
  std::vector<std::pair<std::string, std::string>> affix_incompatibilities;

  std::optional<std::vector<std::string>> proclitics;
  std::optional<std::vector<std::string>> enclitics;
  std::optional<std::vector<std::string>> prefixes;
  std::optional<std::vector<std::string>> suffixes;
};

/// Immutable bundle of the five dictionaries, the two incompatibility tables
/// and the four clitic/affix inventories. Construct via load_lexicons();
/// safely shareable across any number of concurrent readers.
class LexiconSet {
 public:
  LexiconSet() = default;
  LexiconSet(const LexiconSet& other);
  LexiconSet& operator=(const LexiconSet& other);
  LexiconSet(LexiconSet&&) = default;
  LexiconSet& operator=(LexiconSet&&) = default;

  // Lookup -------------------------------------------------------------

  /// Schemes whose wazn has exactly `n` letters, in file order.
  const std::vector<const SchemeEntry*>& schemes_of_length(std::size_t n) const;

  bool has_root(std::string_view candidate) const;

  /// Probes stop words, then function words, then specific words.
  WholeWordClass classify_whole_word(std::string_view surface) const;

  /// True iff the fused proclitic+enclitic string is absent from the
  /// incompatibility table.
  bool clitics_compatible(std::string_view proclitic, std::string_view enclitic) const;

  /// True iff the (prefix, suffix) pair is absent from the incompatibility
  /// table.
  bool affixes_compatible(std::string_view prefix, std::string_view suffix) const;

  // Contents -----------------------------------------------------------

  const std::vector<SchemeEntry>& schemes() const { return schemes_; }
  const std::vector<std::string>& roots() const { return roots_; }
  const std::vector<FunctionWord>& function_words() const { return function_words_; }
  const std::vector<std::string>& specific_words() const { return specific_words_; }
  const std::vector<std::string>& stop_words() const { return stop_words_; }
  const std::vector<std::string>& clitic_incompatibilities() const { return clitic_incompat_; }
  const std::vector<std::pair<std::string, std::string>>& affix_incompatibilities() const {
    return affix_incompat_;
  }

  // Inventories always contain the empty string (the "no clitic" case).
  const std::vector<std::u32string>& proclitics() const { return proclitics_; }
  const std::vector<std::u32string>& enclitics() const { return enclitics_; }
  const std::vector<std::u32string>& prefixes() const { return prefixes_; }
  const std::vector<std::u32string>& suffixes() const { return suffixes_; }

  bool operator==(const LexiconSet& other) const;

  /// Copy with one more specific word; the receiver is left untouched.
  LexiconSet with_specific_word(std::string_view surface) const;

 private:
  friend LexiconSet make_lexicons(LexiconData data);

  void build_indices();

  std::vector<SchemeEntry> schemes_;
  std::vector<std::string> roots_;
  std::vector<FunctionWord> function_words_;
  std::vector<std::string> specific_words_;
  std::vector<std::string> stop_words_;
  std::vector<std::string> clitic_incompat_;
  std::vector<std::pair<std::string, std::string>> affix_incompat_;

  std::vector<std::u32string> proclitics_;
  std::vector<std::u32string> enclitics_;
  std::vector<std::u32string> prefixes_;
  std::vector<std::u32string> suffixes_;

  // Derived lookup structures.
  std::unordered_map<std::size_t, std::vector<const SchemeEntry*>> schemes_by_length_;
  std::unordered_set<std::string> root_set_;
  std::unordered_map<std::string, SuccessorClass> function_word_map_;
  std::unordered_set<std::string> specific_word_set_;
  std::unordered_set<std::string> stop_word_set_;
  std::unordered_set<std::string> clitic_incompat_set_;
  std::unordered_set<std::string> affix_incompat_set_;  // prefix '\t' suffix
};

/// Validates every dictionary invariant (triliteral sorted roots, scheme
/// positions and three-letter residue, diacritic-free surfaces) and builds
/// the immutable set. Throws LexiconError listing the offending entry.
LexiconSet make_lexicons(LexiconData data);

/// Reads the seven dictionary files from `directory` and validates every
/// invariant. Throws LexiconError naming the offending file (and line, for
/// malformed content).
///
/// Expected files: schemes.tsv, roots.txt, function_words.tsv,
/// specific_words.txt, stop_words.txt, clitic_incompat.txt, affix_incompat.tsv.
LexiconSet load_lexicons(const std::filesystem::path& directory);

/// Writes the seven dictionary files. load(save(load(d))) == load(d).
void save_lexicons(const LexiconSet& lexicons, const std::filesystem::path& directory);

std::string_view to_string(WordCategory category);
std::string_view to_string(SuccessorClass successor_class);

}  // namespace sarf

#endif  // SARF_LEXICON_HPP_
