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

#ifndef SARF_NORMALIZER_HPP_
#define SARF_NORMALIZER_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace sarf {

/// One unit of input text.
///
/// `raw` is the text exactly as it appeared; `normalized` is the form the
/// analyzer works on. Tokens whose content is not Arabic (Latin, digits,
/// punctuation, or Arabic runs that normalize to nothing) carry
/// `arabic = false` and are passed through downstream unanalyzed.
struct Token {
  std::string raw;
  std::string normalized;
  std::size_t position = 0;  // ordinal index within the input stream, 0-based
  bool arabic = false;

  bool operator==(const Token&) const = default;
};

/// Strips Arabic short-vowel and gemination diacritics (U+064B..U+0652) and
/// the tatweel elongation character. Everything else, including hamza-carrier
/// variants, passes through untouched. Total and idempotent.
std::string normalize(std::string_view raw);

/// Splits text into tokens on whitespace and script boundaries.
///
/// Arabic word runs become Arabic tokens (raw + normalized form); punctuation
/// and other non-Arabic runs are emitted verbatim as non-Arabic tokens.
/// Whitespace separates runs and is not emitted. Concatenating the raw forms
/// of all tokens yields the input with its whitespace removed.
///
/// `first_position` offsets the ordinal assigned to the first token so a
/// caller can stream text chunk by chunk with globally consistent positions.
std::vector<Token> tokenize(std::string_view text, std::size_t first_position = 0);

}  // namespace sarf

#endif  // SARF_NORMALIZER_HPP_
