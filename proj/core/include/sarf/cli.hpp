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

#ifndef SARF_CLI_HPP_
#define SARF_CLI_HPP_

#include <filesystem>
#include <iosfwd>
#include <optional>

namespace sarf {

enum class CliMode { Root, Light, Segment, Full };
enum class OutputFormat { Tsv, Jsonl };

struct RunConfig {
  std::filesystem::path lexicon_dir;
  CliMode mode = CliMode::Full;
  OutputFormat format = OutputFormat::Tsv;
  bool drop_stop_words = false;
  bool all_candidates = false;
  bool stats = false;
  std::optional<std::filesystem::path> input;  // absent: standard input
};

/// Streams tokens from the configured input through the analyzer and writes
/// one record per token (or per candidate, with all_candidates) in input
/// order. Stats and diagnostics go to `err`, never to `out`. Returns the
/// process exit status: 0 on success, 2 on lexicon or I/O failure.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// Overload resolving config.input (file or standard input) itself.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace sarf

#endif  // SARF_CLI_HPP_
