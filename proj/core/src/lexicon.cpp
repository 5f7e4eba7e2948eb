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

#include "sarf/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>

#include "sarf/chars.hpp"

namespace sarf {

namespace {

// The clitic and affix inventories are not stored in the dictionary files;
// they are part of the analyzer itself. The first entry of each list is the
// empty string: "no clitic" is always a candidate segmentation.
const char* const kProclitics[] = {
    "",   "ب",   "ك",   "ل",   "ف",    "س",    "أ",    "ال",  "بال", "كال", "لل",
    "فب", "فس", "فال", "فك", "فل", "فلل", "أف", "أس", "فبال", "فكال",
};

const char* const kEnclitics[] = {
    "", "ه", "ها", "هما", "هم", "هن", "ك", "كما", "كم", "كن", "ي", "ني", "نا",
};

const char* const kPrefixes[] = {"", "ا", "ت", "ن", "ي", "إ", "أ"};

const char* const kSuffixes[] = {
    "",   "ات", "ية", "ة",  "يات", "نا", "ت", "تما", "تم",
    "تن", "ن",  "ين", "ان", "ون",  "وا", "ا", "ي",
};

std::string affix_pair_key(std::string_view prefix, std::string_view suffix) {
  std::string key(prefix);
  key.push_back('\t');
  key.append(suffix);
  return key;
}

[[noreturn]] void fail(const std::filesystem::path& file, std::size_t line,
                       const std::string& what) {
  std::ostringstream msg;
  msg << file.string() << ":" << line << ": " << what;
  throw LexiconError(msg.str());
}

[[noreturn]] void fail(const std::filesystem::path& file, const std::string& what) {
  throw LexiconError(file.string() + ": " + what);
}

// Reads a line-oriented UTF-8 file, dropping '#' comments, blank lines, a
// leading BOM and trailing CR. Calls fn(line_number, content).
template <typename Fn>
void for_each_record(const std::filesystem::path& file, Fn&& fn) {
  std::ifstream in(file);
  if (!in) fail(file, "file not found");
  std::string line;
  std::size_t line_number = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_number;
    if (first) {
      first = false;
      if (line.size() >= 3 && line[0] == '\xEF' && line[1] == '\xBB' && line[2] == '\xBF') {
        line.erase(0, 3);
      }
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    fn(line_number, line);
  }
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

bool has_diacritic_or_tatweel(std::string_view s) {
  for (char32_t c : decode_utf8(s)) {
    if (is_arabic_diacritic(c) || is_tatweel(c)) return true;
  }
  return false;
}

WordCategory parse_category(const std::filesystem::path& file, std::size_t line,
                            const std::string& text) {
  if (text == "verb") return WordCategory::Verb;
  if (text == "noun") return WordCategory::Noun;
  if (text == "both") return WordCategory::Both;
  fail(file, line, "unknown category '" + text + "' (expected verb|noun|both)");
}

SuccessorClass parse_successor_class(const std::filesystem::path& file, std::size_t line,
                                     const std::string& text) {
  if (text == "nominal") return SuccessorClass::Nominal;
  if (text == "verbal") return SuccessorClass::Verbal;
  if (text == "common") return SuccessorClass::Common;
  fail(file, line, "unknown class '" + text + "' (expected nominal|verbal|common)");
}

std::vector<int> parse_positions(const std::filesystem::path& file, std::size_t line,
                                 const std::string& field) {
  std::vector<int> positions;
  if (field.empty()) return positions;
  std::size_t start = 0;
  while (start <= field.size()) {
    const std::size_t comma = field.find(',', start);
    const std::string item =
        field.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      fail(file, line, "bad infix position '" + item + "'");
    }
    positions.push_back(std::stoi(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return positions;
}

}  // namespace

LexiconSet::LexiconSet(const LexiconSet& other)
    : schemes_(other.schemes_),
      roots_(other.roots_),
      function_words_(other.function_words_),
      specific_words_(other.specific_words_),
      stop_words_(other.stop_words_),
      clitic_incompat_(other.clitic_incompat_),
      affix_incompat_(other.affix_incompat_),
      proclitics_(other.proclitics_),
      enclitics_(other.enclitics_),
      prefixes_(other.prefixes_),
      suffixes_(other.suffixes_) {
  build_indices();  // scheme pointers must target this object's storage
}

LexiconSet& LexiconSet::operator=(const LexiconSet& other) {
  if (this != &other) {
    LexiconSet tmp(other);
    *this = std::move(tmp);
  }
  return *this;
}

void LexiconSet::build_indices() {
  schemes_by_length_.clear();
  for (const SchemeEntry& scheme : schemes_) {
    schemes_by_length_[scheme.length()].push_back(&scheme);
  }
  root_set_ = {roots_.begin(), roots_.end()};
  function_word_map_.clear();
  for (const FunctionWord& fw : function_words_) {
    function_word_map_.emplace(fw.surface, fw.successor_class);
  }
  specific_word_set_ = {specific_words_.begin(), specific_words_.end()};
  stop_word_set_ = {stop_words_.begin(), stop_words_.end()};
  clitic_incompat_set_ = {clitic_incompat_.begin(), clitic_incompat_.end()};
  affix_incompat_set_.clear();
  for (const auto& [prefix, suffix] : affix_incompat_) {
    affix_incompat_set_.insert(affix_pair_key(prefix, suffix));
  }
}

const std::vector<const SchemeEntry*>& LexiconSet::schemes_of_length(std::size_t n) const {
  static const std::vector<const SchemeEntry*> kEmpty;
  const auto it = schemes_by_length_.find(n);
  return it == schemes_by_length_.end() ? kEmpty : it->second;
}

bool LexiconSet::has_root(std::string_view candidate) const {
  return root_set_.contains(std::string(candidate));
}

WholeWordClass LexiconSet::classify_whole_word(std::string_view surface) const {
  const std::string key(surface);
  if (stop_word_set_.contains(key)) return {WholeWordClass::StopWord, std::nullopt};
  const auto fw = function_word_map_.find(key);
  if (fw != function_word_map_.end()) return {WholeWordClass::Function, fw->second};
  if (specific_word_set_.contains(key)) return {WholeWordClass::Specific, std::nullopt};
  return {WholeWordClass::NotFound, std::nullopt};
}

bool LexiconSet::clitics_compatible(std::string_view proclitic,
                                    std::string_view enclitic) const {
  std::string fused(proclitic);
  fused.append(enclitic);
  return !clitic_incompat_set_.contains(fused);
}

bool LexiconSet::affixes_compatible(std::string_view prefix, std::string_view suffix) const {
  return !affix_incompat_set_.contains(affix_pair_key(prefix, suffix));
}

bool LexiconSet::operator==(const LexiconSet& other) const {
  return schemes_ == other.schemes_ && roots_ == other.roots_ &&
         function_words_ == other.function_words_ &&
         specific_words_ == other.specific_words_ && stop_words_ == other.stop_words_ &&
         clitic_incompat_ == other.clitic_incompat_ &&
         affix_incompat_ == other.affix_incompat_;
}

LexiconSet LexiconSet::with_specific_word(std::string_view surface) const {
  LexiconSet copy(*this);
  if (!copy.specific_word_set_.contains(std::string(surface))) {
    copy.specific_words_.emplace_back(surface);
    copy.specific_word_set_.emplace(surface);
  }
  return copy;
}

LexiconSet make_lexicons(LexiconData data) {
  // Invariant validation, independent of where the data came from.
  for (SchemeEntry& scheme : data.schemes) {
    if (scheme.wazn.empty()) throw LexiconError("scheme with empty wazn");
    scheme.wazn_letters = decode_utf8(scheme.wazn);
    const int len = static_cast<int>(scheme.length());
    int previous = 0;
    for (int p : scheme.infix_positions) {
      if (p < 1 || p > len) {
        throw LexiconError("scheme '" + scheme.wazn + "': infix position " +
                           std::to_string(p) + " outside the wazn");
      }
      if (p <= previous) {
        throw LexiconError("scheme '" + scheme.wazn +
                           "': infix positions must be strictly increasing");
      }
      previous = p;
    }
    if (scheme.length() - scheme.infix_count() != 3) {
      throw LexiconError("scheme '" + scheme.wazn +
                         "' does not leave exactly 3 root letters");
    }
  }
  for (std::size_t i = 0; i < data.schemes.size(); ++i) data.schemes[i].ordinal = i;

  for (std::size_t i = 0; i < data.roots.size(); ++i) {
    const std::string& root = data.roots[i];
    if (letter_count(root) != 3) {
      throw LexiconError("root '" + root + "' is not exactly three letters");
    }
    if (i > 0 && root < data.roots[i - 1]) {
      throw LexiconError("root '" + root + "' breaks alphabetical order");
    }
  }

  for (const FunctionWord& fw : data.function_words) {
    if (fw.surface.empty()) throw LexiconError("function word with empty surface");
    if (has_diacritic_or_tatweel(fw.surface)) {
      throw LexiconError("function word '" + fw.surface + "' contains diacritics");
    }
  }
  for (const std::string& word : data.specific_words) {
    if (word.empty()) throw LexiconError("specific word with empty surface");
    if (has_diacritic_or_tatweel(word)) {
      throw LexiconError("specific word '" + word + "' contains diacritics");
    }
  }

  LexiconSet lex;
  lex.schemes_ = std::move(data.schemes);
  lex.roots_ = std::move(data.roots);
  lex.function_words_ = std::move(data.function_words);
  lex.specific_words_ = std::move(data.specific_words);
  lex.stop_words_ = std::move(data.stop_words);
  lex.clitic_incompat_ = std::move(data.clitic_incompatibilities);
  lex.affix_incompat_ = std::move(data.affix_incompatibilities);

  const auto fill = [](std::vector<std::u32string>& target,
                       const std::optional<std::vector<std::string>>& override_list,
                       const char* const* defaults, std::size_t default_count) {
    if (override_list) {
      for (const std::string& s : *override_list) target.push_back(decode_utf8(s));
    } else {
      for (std::size_t i = 0; i < default_count; ++i) target.push_back(decode_utf8(defaults[i]));
    }
    // "no clitic" must always be a candidate
    if (std::find(target.begin(), target.end(), std::u32string()) == target.end()) {
      target.insert(target.begin(), std::u32string());
    }
  };
  fill(lex.proclitics_, data.proclitics, kProclitics, std::size(kProclitics));
  fill(lex.enclitics_, data.enclitics, kEnclitics, std::size(kEnclitics));
  fill(lex.prefixes_, data.prefixes, kPrefixes, std::size(kPrefixes));
  fill(lex.suffixes_, data.suffixes, kSuffixes, std::size(kSuffixes));

  lex.build_indices();
  return lex;
}

LexiconSet load_lexicons(const std::filesystem::path& directory) {
  LexiconData data;

  // schemes.tsv: wazn <TAB> comma-separated 1-based positions <TAB> category
  const auto schemes_file = directory / "schemes.tsv";
  for_each_record(schemes_file, [&](std::size_t line, const std::string& text) {
    const auto fields = split_tabs(text);
    if (fields.size() != 3) fail(schemes_file, line, "expected 3 tab-separated fields");
    SchemeEntry scheme;
    scheme.wazn = fields[0];
    scheme.infix_positions = parse_positions(schemes_file, line, fields[1]);
    scheme.category = parse_category(schemes_file, line, fields[2]);
    data.schemes.push_back(std::move(scheme));
  });

  // roots.txt: one triliteral root per line, sorted
  const auto roots_file = directory / "roots.txt";
  for_each_record(roots_file, [&](std::size_t, const std::string& text) {
    data.roots.push_back(text);
  });

  // function_words.tsv: surface <TAB> nominal|verbal|common
  const auto fw_file = directory / "function_words.tsv";
  for_each_record(fw_file, [&](std::size_t line, const std::string& text) {
    const auto fields = split_tabs(text);
    if (fields.size() != 2) fail(fw_file, line, "expected 2 tab-separated fields");
    data.function_words.push_back({fields[0], parse_successor_class(fw_file, line, fields[1])});
  });

  // specific_words.txt / stop_words.txt: one surface per line
  for_each_record(directory / "specific_words.txt", [&](std::size_t, const std::string& text) {
    data.specific_words.push_back(text);
  });
  for_each_record(directory / "stop_words.txt", [&](std::size_t, const std::string& text) {
    data.stop_words.push_back(text);
  });

  // clitic_incompat.txt: one fused proclitic+enclitic string per line
  for_each_record(directory / "clitic_incompat.txt", [&](std::size_t, const std::string& text) {
    data.clitic_incompatibilities.push_back(text);
  });

  // affix_incompat.tsv: prefix <TAB> suffix
  const auto affix_file = directory / "affix_incompat.tsv";
  for_each_record(affix_file, [&](std::size_t line, const std::string& text) {
    const auto fields = split_tabs(text);
    if (fields.size() != 2) fail(affix_file, line, "expected 2 tab-separated fields");
    data.affix_incompatibilities.emplace_back(fields[0], fields[1]);
  });

  return make_lexicons(std::move(data));
}

void save_lexicons(const LexiconSet& lexicons, const std::filesystem::path& directory) {
  const auto open = [&](const char* name) {
    std::ofstream out(directory / name, std::ios::binary);
    if (!out) throw LexiconError((directory / name).string() + ": cannot write");
    return out;
  };

  {
    auto out = open("schemes.tsv");
    for (const SchemeEntry& scheme : lexicons.schemes()) {
      out << scheme.wazn << '\t';
      for (std::size_t i = 0; i < scheme.infix_positions.size(); ++i) {
        if (i) out << ',';
        out << scheme.infix_positions[i];
      }
      out << '\t' << to_string(scheme.category) << '\n';
    }
  }
  {
    auto out = open("roots.txt");
    for (const std::string& root : lexicons.roots()) out << root << '\n';
  }
  {
    auto out = open("function_words.tsv");
    for (const FunctionWord& fw : lexicons.function_words()) {
      out << fw.surface << '\t' << to_string(fw.successor_class) << '\n';
    }
  }
  {
    auto out = open("specific_words.txt");
    for (const std::string& word : lexicons.specific_words()) out << word << '\n';
  }
  {
    auto out = open("stop_words.txt");
    for (const std::string& word : lexicons.stop_words()) out << word << '\n';
  }
  {
    auto out = open("clitic_incompat.txt");
    for (const std::string& fused : lexicons.clitic_incompatibilities()) out << fused << '\n';
  }
  {
    auto out = open("affix_incompat.tsv");
    for (const auto& [prefix, suffix] : lexicons.affix_incompatibilities()) {
      out << prefix << '\t' << suffix << '\n';
    }
  }
}

std::string_view to_string(WordCategory category) {
  switch (category) {
    case WordCategory::Verb: return "verb";
    case WordCategory::Noun: return "noun";
    case WordCategory::Both: return "both";
    case WordCategory::None: return "none";
  }
  return "none";
}

std::string_view to_string(SuccessorClass successor_class) {
  switch (successor_class) {
    case SuccessorClass::Nominal: return "nominal";
    case SuccessorClass::Verbal: return "verbal";
    case SuccessorClass::Common: return "common";
  }
  return "common";
}

}  // namespace sarf
