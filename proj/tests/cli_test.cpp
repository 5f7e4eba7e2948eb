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

#include "sarf/cli.hpp"

#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "test_support.hpp"

using sarf::CliMode;
using sarf::OutputFormat;
using sarf::RunConfig;
using sarf::run;

namespace {

RunConfig seed_config() {
  RunConfig config;
  config.lexicon_dir = SARF_DATA_DIR;
  return config;
}

struct RunResult {
  int status;
  std::string out;
  std::string err;
};

RunResult run_on(const RunConfig& config, const std::string& input) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int status = run(config, in, out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> fields_of(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

}  // namespace

TEST(CliRun, RootModeStemColumn) {
  RunConfig config = seed_config();
  config.mode = CliMode::Root;
  const RunResult result = run_on(config, "صالح");
  EXPECT_EQ(result.status, 0);
  const auto lines = lines_of(result.out);
  ASSERT_EQ(lines.size(), 1u);
  const auto fields = fields_of(lines[0]);
  ASSERT_EQ(fields.size(), 13u);
  EXPECT_EQ(fields[0], "0");        // position
  EXPECT_EQ(fields[1], "صالح");     // raw
  EXPECT_EQ(fields[3], "derived");  // kind
  EXPECT_EQ(fields[6], "صلح");      // stem
  EXPECT_EQ(fields[9], "صلح");      // root
  EXPECT_EQ(fields[10], "فاعل");    // scheme
}

TEST(CliRun, FunctionWordCarriesClass) {
  RunConfig config = seed_config();
  const RunResult result = run_on(config, "في");
  const auto fields = fields_of(lines_of(result.out).at(0));
  EXPECT_EQ(fields[3], "function_word");
  EXPECT_EQ(fields[12], "nominal");
}

TEST(CliRun, EmptyInput) {
  const RunResult result = run_on(seed_config(), "");
  EXPECT_EQ(result.status, 0);
  EXPECT_TRUE(result.out.empty());
}

TEST(CliRun, OneLinePerToken) {
  const RunResult result = run_on(seed_config(), "ذهب الولد إلى المدرسة.\nوقرأ كتابا");
  EXPECT_EQ(result.status, 0);
  EXPECT_EQ(lines_of(result.out).size(), 7u);
}

TEST(CliRun, DropStopWords) {
  RunConfig config = seed_config();
  config.drop_stop_words = true;
  const RunResult result = run_on(config, "هذا كتاب");
  const auto lines = lines_of(result.out);
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_EQ(fields_of(lines[0])[1], "كتاب");
}

TEST(CliRun, AllCandidatesAddsRankColumn) {
  RunConfig config = seed_config();
  config.all_candidates = true;
  const RunResult result = run_on(config, "فسمعهم");
  const auto lines = lines_of(result.out);
  ASSERT_GE(lines.size(), 2u);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto fields = fields_of(lines[i]);
    ASSERT_EQ(fields.size(), 14u);
    EXPECT_EQ(fields[1], std::to_string(i));  // rank column
  }
}

TEST(CliRun, JsonlIsValidJsonPerLine) {
  RunConfig config = seed_config();
  config.format = OutputFormat::Jsonl;
  config.mode = CliMode::Root;
  const RunResult result = run_on(config, "فسأعلنه abc");
  const auto lines = lines_of(result.out);
  ASSERT_EQ(lines.size(), 2u);

  const auto first = nlohmann::json::parse(lines[0]);
  EXPECT_EQ(first["kind"], "derived");
  EXPECT_EQ(first["base"], "علن");
  EXPECT_EQ(first["root"], "علن");
  EXPECT_EQ(first["stem"], "علن");
  EXPECT_EQ(first["proclitic"], "فس");

  const auto second = nlohmann::json::parse(lines[1]);
  EXPECT_EQ(second["kind"], "unanalyzed");
  EXPECT_TRUE(second["root"].is_null());
}

TEST(CliRun, StatsGoToSeparateStream) {
  RunConfig config = seed_config();
  config.stats = true;
  const RunResult result = run_on(config, "صالح في");
  EXPECT_EQ(lines_of(result.out).size(), 2u);
  EXPECT_NE(result.err.find("tokens\t2"), std::string::npos);
  EXPECT_NE(result.err.find("kind:derived\t1"), std::string::npos);
  EXPECT_NE(result.err.find("kind:function_word\t1"), std::string::npos);
  EXPECT_NE(result.err.find("distinct_roots\t1"), std::string::npos);
}

TEST(CliRun, BadLexiconDirFailsBeforeProcessing) {
  RunConfig config;
  config.lexicon_dir = "/nonexistent/lexicons";
  const RunResult result = run_on(config, "صالح");
  EXPECT_EQ(result.status, 2);
  EXPECT_TRUE(result.out.empty());
  EXPECT_NE(result.err.find("lexicon"), std::string::npos);
}

TEST(CliRun, MissingInputFileFails) {
  RunConfig config = seed_config();
  config.input = "/nonexistent/corpus.txt";
  std::ostringstream out, err;
  EXPECT_EQ(run(config, out, err), 2);
  EXPECT_NE(err.str().find("corpus.txt"), std::string::npos);
}

TEST(CliRun, InputFileVariant) {
  sarf::testing::TempDir dir;
  dir.write("corpus.txt", "صالح مكتوب\n");
  RunConfig config = seed_config();
  config.input = dir.path() / "corpus.txt";
  std::ostringstream out, err;
  EXPECT_EQ(run(config, out, err), 0);
  EXPECT_EQ(lines_of(out.str()).size(), 2u);
}

TEST(CliRun, ByteIdenticalAcrossRuns) {
  RunConfig config = seed_config();
  config.format = OutputFormat::Jsonl;
  config.stats = true;
  const std::string corpus = "فسأعلنه فكاتيبهم صالح hello ٣٤ هذا\nمساجد تعلمون و.";
  const RunResult first = run_on(config, corpus);
  const RunResult second = run_on(config, corpus);
  EXPECT_EQ(first.out, second.out);
  EXPECT_EQ(first.err, second.err);
}

TEST(CliRun, TabsNeverLeakIntoFields) {
  // Raw fields are escaped, so every output line has a fixed column count.
  const RunResult result = run_on(seed_config(), "صالح كتاب abc !?;");
  for (const std::string& line : lines_of(result.out)) {
    EXPECT_EQ(fields_of(line).size(), 13u) << line;
  }
}

TEST(CliRun, BackslashInUnanalyzedTokenIsEscaped) {
  const RunResult result = run_on(seed_config(), "a\\b");
  const auto fields = fields_of(lines_of(result.out).at(0));
  EXPECT_EQ(fields[1], "a\\\\b");  // raw
  EXPECT_EQ(fields[6], "a\\\\b");  // stem column carries the same escaping
}

TEST(CliRun, StatsCountDroppedStopWords) {
  RunConfig config = seed_config();
  config.drop_stop_words = true;
  config.stats = true;
  const RunResult result = run_on(config, "هذا كتاب");
  EXPECT_EQ(lines_of(result.out).size(), 1u);
  EXPECT_NE(result.err.find("tokens\t2"), std::string::npos);
  EXPECT_NE(result.err.find("kind:stop_word\t1"), std::string::npos);
}
