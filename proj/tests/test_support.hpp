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

#ifndef SARF_TESTS_TEST_SUPPORT_HPP_
#define SARF_TESTS_TEST_SUPPORT_HPP_

#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "sarf/lexicon.hpp"
#include "sarf/normalizer.hpp"

namespace sarf::testing {

inline const LexiconSet& seed_lexicons() {
  static const LexiconSet lex = load_lexicons(SARF_DATA_DIR);
  return lex;
}

inline Token arabic_token(std::string_view word, std::size_t position = 0) {
  Token tok;
  tok.raw = std::string(word);
  tok.normalized = normalize(word);
  tok.position = position;
  tok.arabic = !tok.normalized.empty();
  return tok;
}

// Scratch directory that disappears with the test.
class TempDir {
 public:
  TempDir() {
    static std::mt19937_64 rng(std::random_device{}());
    path_ = std::filesystem::temp_directory_path() /
            ("sarf_test_" + std::to_string(rng()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  // Moved-from dirs hold an empty path; remove_all on it is a no-op.
  TempDir(TempDir&& other) noexcept { std::swap(path_, other.path_); }

  const std::filesystem::path& path() const { return path_; }

  void write(const std::string& name, const std::string& content) const {
    std::ofstream out(path_ / name, std::ios::binary);
    out << content;
  }

 private:
  std::filesystem::path path_;
};

// Copies the seed dictionaries into a scratch dir so a test can corrupt one
// file at a time.
inline TempDir copy_seed_dir() {
  TempDir dir;
  for (const auto& entry : std::filesystem::directory_iterator(SARF_DATA_DIR)) {
    std::filesystem::copy_file(entry.path(), dir.path() / entry.path().filename());
  }
  return dir;
}

}  // namespace sarf::testing

#endif  // SARF_TESTS_TEST_SUPPORT_HPP_
