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

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sarf/cli.hpp"
#include "sarf/normalizer.hpp"
#include "sarf/oracle.hpp"
#include "sarf/segmenter.hpp"

namespace {

int run_oracle_diff(const std::string& lexicon_dir, const std::vector<std::string>& words) {
  sarf::LexiconSet lex;
  try {
    lex = sarf::load_lexicons(lexicon_dir);
  } catch (const sarf::LexiconError& e) {
    std::cerr << "sarf: lexicon error: " << e.what() << '\n';
    return 2;
  }

  bool all_equal = true;
  for (const std::string& word : words) {
    const std::string normalized = sarf::normalize(word);
    const auto report = sarf::oracle::compare_with_oracle(
        normalized, sarf::enumerate_all(normalized, lex), lex);
    if (report.equal()) {
      std::cout << word << "\tok\t" << sarf::enumerate_all(normalized, lex).size()
                << " decompositions\n";
      continue;
    }
    all_equal = false;
    std::cout << word << "\tMISMATCH\n";
    const auto print = [](const char* label, const sarf::oracle::Decomposition& d) {
      const auto& [pro, pre, base, suf, enc] = d;
      std::cout << "  " << label << "\t(" << pro << ", " << pre << ", " << base << ", "
                << suf << ", " << enc << ")\n";
    };
    for (const auto& d : report.missing) print("missing", d);
    for (const auto& d : report.extra) print("extra", d);
  }
  return all_equal ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sarf - Arabic morphological analyzer and stemmer"};

  std::string lexicon_dir;
  app.add_option("--lexicons", lexicon_dir, "Directory with the dictionary files")
      ->envname("SARF_LEXICONS");

  std::string mode = "full";
  app.add_option("--mode", mode, "Output mode")
      ->check(CLI::IsMember({"root", "light", "segment", "full"}))
      ->capture_default_str();

  std::string format = "tsv";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"tsv", "jsonl"}))
      ->capture_default_str();

  bool drop_stop_words = false;
  app.add_flag("--drop-stop-words", drop_stop_words, "Omit stop-word tokens from the output");

  bool all_candidates = false;
  app.add_flag("--all-candidates", all_candidates,
               "Emit every candidate analysis, one line per candidate with its rank");

  bool stats = false;
  app.add_flag("--stats", stats, "Print a corpus summary to standard error");

  std::string input;
  app.add_option("input", input, "Input file (default: standard input)");

  auto* diff = app.add_subcommand(
      "oracle-diff", "Compare the segmenter against the brute-force reference");
  std::vector<std::string> diff_words;
  diff->add_option("words", diff_words, "Words to check")->required();

  CLI11_PARSE(app, argc, argv);

  if (lexicon_dir.empty()) {
    std::cerr << "sarf: no lexicon directory (use --lexicons or SARF_LEXICONS)\n";
    return 2;
  }

  if (*diff) return run_oracle_diff(lexicon_dir, diff_words);

  static const std::map<std::string, sarf::CliMode> kModes = {
      {"root", sarf::CliMode::Root},
      {"light", sarf::CliMode::Light},
      {"segment", sarf::CliMode::Segment},
      {"full", sarf::CliMode::Full},
  };

  sarf::RunConfig config;
  config.lexicon_dir = lexicon_dir;
  config.mode = kModes.at(mode);
  config.format = format == "jsonl" ? sarf::OutputFormat::Jsonl : sarf::OutputFormat::Tsv;
  config.drop_stop_words = drop_stop_words;
  config.all_candidates = all_candidates;
  config.stats = stats;
  if (!input.empty()) config.input = input;

  std::ios::sync_with_stdio(false);
  return sarf::run(config, std::cout, std::cerr);
}
