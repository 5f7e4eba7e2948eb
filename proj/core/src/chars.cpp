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

#include "sarf/chars.hpp"

#include <cstdint>

namespace sarf {

namespace {

// Invalid bytes (always >= 0x80) decode to U+DC80..U+DCFF, the low-surrogate
// escape window, and encode back to the original byte.
constexpr char32_t kBadByteBase = 0xDC00;

inline bool is_continuation(unsigned char b) { return (b & 0xC0) == 0x80; }

}  // namespace

std::u32string decode_utf8(std::string_view utf8) {
  std::u32string out;
  out.reserve(utf8.size());
  std::size_t i = 0;
  const std::size_t n = utf8.size();
  while (i < n) {
    const unsigned char b0 = static_cast<unsigned char>(utf8[i]);
    if (b0 < 0x80) {
      out.push_back(b0);
      ++i;
      continue;
    }
    std::size_t len = 0;
    char32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
    } else {
      out.push_back(kBadByteBase + b0);
      ++i;
      continue;
    }
    if (i + len > n) {
      out.push_back(kBadByteBase + b0);
      ++i;
      continue;
    }
    bool ok = true;
    char32_t acc = cp;
    for (std::size_t k = 1; k < len; ++k) {
      const unsigned char bk = static_cast<unsigned char>(utf8[i + k]);
      if (!is_continuation(bk)) {
        ok = false;
        break;
      }
      acc = (acc << 6) | (bk & 0x3F);
    }
    // Reject overlongs, surrogates and out-of-range values so that every
    // decoded code point re-encodes to the same byte sequence.
    if (ok) {
      if ((len == 2 && acc < 0x80) || (len == 3 && acc < 0x800) ||
          (len == 4 && acc < 0x10000) || acc > 0x10FFFF ||
          (acc >= 0xD800 && acc <= 0xDFFF)) {
        ok = false;
      }
    }
    if (!ok) {
      out.push_back(kBadByteBase + b0);
      ++i;
      continue;
    }
    out.push_back(acc);
    i += len;
  }
  return out;
}

std::string encode_utf8(char32_t cp) {
  std::string out;
  if (cp >= 0xDC80 && cp <= 0xDCFF) {
    out.push_back(static_cast<char>(cp - kBadByteBase));
    return out;
  }
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
  return out;
}

std::string encode_utf8(std::u32string_view code_points) {
  std::string out;
  out.reserve(code_points.size() * 2);
  for (char32_t cp : code_points) out += encode_utf8(cp);
  return out;
}

std::size_t letter_count(std::string_view utf8) {
  // Must agree with decode_utf8 on every input, including malformed bytes.
  return decode_utf8(utf8).size();
}

bool is_whitespace(char32_t c) {
  switch (c) {
    case U' ':
    case U'\t':
    case U'\n':
    case U'\r':
    case U'\f':
    case U'\v':
    case U' ':
    case U' ':
    case U' ':
    case U'　':
      return true;
    default:
      return false;
  }
}

}  // namespace sarf
