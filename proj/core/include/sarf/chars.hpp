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

#ifndef SARF_CHARS_HPP_
#define SARF_CHARS_HPP_

#include <string>
#include <string_view>

namespace sarf {

// UTF-8 <-> UTF-32 conversion used everywhere positional logic needs
// letters rather than bytes. Invalid bytes survive a decode/encode round
// trip unchanged: each is mapped to a code point in U+DC80..U+DCFF and
// mapped back on encode, so arbitrary binary input reconstructs exactly.
std::u32string decode_utf8(std::string_view utf8);
std::string encode_utf8(std::u32string_view code_points);
std::string encode_utf8(char32_t code_point);

// Number of code points in a UTF-8 string.
std::size_t letter_count(std::string_view utf8);

inline bool is_arabic_letter(char32_t c) {
  return (c >= U'ء' && c <= U'غ') || (c >= U'ف' && c <= U'ي');
}

// Short vowels, tanwin, shadda and sukun (U+064B..U+0652).
inline bool is_arabic_diacritic(char32_t c) {
  return c >= U'ً' && c <= U'ْ';
}

inline bool is_tatweel(char32_t c) { return c == U'ـ'; }

// Characters that may appear inside an Arabic word run.
inline bool is_arabic_word_char(char32_t c) {
  return is_arabic_letter(c) || is_arabic_diacritic(c) || is_tatweel(c);
}

bool is_whitespace(char32_t c);

}  // namespace sarf

#endif  // SARF_CHARS_HPP_
