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

#ifndef SARF_SCHEME_MATCHER_HPP_
#define SARF_SCHEME_MATCHER_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "sarf/lexicon.hpp"

namespace sarf {

/// A base recognized as root letters interleaved into a scheme.
struct SchemeMatch {
  const SchemeEntry* scheme = nullptr;
  std::string root;  // exactly three letters
  std::string base;  // |base| = |scheme->wazn|
};

/// All schemes of the base's length whose fixed (infix) positions carry the
/// same letters as the base and whose extracted root is in the root
/// dictionary. Order follows the scheme file.
std::vector<SchemeMatch> match_schemes(std::string_view base, const LexiconSet& lex);

/// Deletes the letters at the scheme's infix positions. The caller must have
/// verified the length; a mismatch throws std::invalid_argument. The result
/// is not checked against the root dictionary.
std::string extract_root(std::string_view base, const SchemeEntry& scheme);

/// Inverse of extract_root: interleaves a three-letter root into the scheme's
/// root slots. extract_root(apply_scheme(r, s), s) == r for every scheme.
std::string apply_scheme(std::string_view root, const SchemeEntry& scheme);

}  // namespace sarf

#endif  // SARF_SCHEME_MATCHER_HPP_
