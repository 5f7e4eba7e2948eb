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

#include <array>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>

#include <json.hpp>

#include "sarf/analyzer.hpp"
#include "sarf/lexicon.hpp"
#include "sarf/normalizer.hpp"

namespace sarf {

namespace {

// Tokens never contain whitespace, but raw input may carry anything else.
std::string escape_field(std::string_view field) {
  std::string out;
  out.reserve(field.size());
  for (char c : field) {
    switch (c) {
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\\': out += "\\\\"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string stem_field(const Analysis& best, CliMode mode) {
  if (mode == CliMode::Root && best.root) return *best.root;
  return best.base;
}

struct Stats {
  std::size_t tokens = 0;
  std::map<std::string, std::size_t> kinds;
  std::set<std::string> roots;
};

void write_tsv(std::ostream& out, const Token& token, const Analysis& a,
               std::optional<std::size_t> rank_column, CliMode mode) {
  out << token.position << '\t';
  if (rank_column) out << *rank_column << '\t';
  out << escape_field(token.raw) << '\t' << escape_field(token.normalized) << '\t'
      << to_string(a.kind) << '\t' << escape_field(a.proclitic) << '\t'
      << escape_field(a.prefix) << '\t' << escape_field(stem_field(a, mode)) << '\t'
      << escape_field(a.suffix) << '\t' << escape_field(a.enclitic) << '\t'
      << (a.root ? *a.root : "") << '\t' << (a.scheme ? *a.scheme : "") << '\t'
      << to_string(a.category) << '\t'
      << (a.successor_class ? to_string(*a.successor_class) : "") << '\n';
}

void write_jsonl(std::ostream& out, const Token& token, const Analysis& a,
                 std::optional<std::size_t> rank_column, CliMode mode) {
  nlohmann::ordered_json j;
  j["position"] = token.position;
  if (rank_column) j["rank"] = *rank_column;
  j["raw"] = token.raw;
  j["normalized"] = token.normalized;
  j["kind"] = to_string(a.kind);
  j["proclitic"] = a.proclitic;
  j["prefix"] = a.prefix;
  j["base"] = a.base;
  j["suffix"] = a.suffix;
  j["enclitic"] = a.enclitic;
  j["root"] = a.root ? nlohmann::ordered_json(*a.root) : nlohmann::ordered_json(nullptr);
  j["scheme"] = a.scheme ? nlohmann::ordered_json(*a.scheme) : nlohmann::ordered_json(nullptr);
  j["category"] = to_string(a.category);
  j["class"] = a.successor_class ? nlohmann::ordered_json(to_string(*a.successor_class))
                                 : nlohmann::ordered_json(nullptr);
  if (mode == CliMode::Root || mode == CliMode::Light) j["stem"] = stem_field(a, mode);
  out << j.dump() << '\n';
}

void write_stats(std::ostream& err, const Stats& stats) {
  err << "tokens\t" << stats.tokens << '\n';
  for (const auto& [kind, count] : stats.kinds) err << "kind:" << kind << '\t' << count << '\n';
  err << "distinct_roots\t" << stats.roots.size() << '\n';
}

}  // namespace

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  LexiconSet lex;
  try {
    lex = load_lexicons(config.lexicon_dir);
  } catch (const LexiconError& e) {
    err << "sarf: lexicon error: " << e.what() << '\n';
    return 2;
  }

  Stats stats;
  std::string line;
  std::size_t next_position = 0;
  while (std::getline(in, line)) {
    for (const Token& token : tokenize(line, next_position)) {
      ++next_position;
      const AnalysisSet analysis = analyze(token, lex);
      const Analysis& best = analysis.best();

      if (config.stats) {
        ++stats.tokens;
        ++stats.kinds[std::string(to_string(best.kind))];
        if (best.root) stats.roots.insert(*best.root);
      }
      if (config.drop_stop_words && best.kind == WordKind::Stop) continue;

      if (config.all_candidates) {
        std::size_t rank_column = 0;
        for (const Analysis& candidate : analysis.candidates) {
          if (config.format == OutputFormat::Tsv) {
            write_tsv(out, token, candidate, rank_column, config.mode);
          } else {
            write_jsonl(out, token, candidate, rank_column, config.mode);
          }
          ++rank_column;
        }
      } else if (config.format == OutputFormat::Tsv) {
        write_tsv(out, token, best, std::nullopt, config.mode);
      } else {
        write_jsonl(out, token, best, std::nullopt, config.mode);
      }
    }
  }
  if (in.bad()) {
    err << "sarf: input error while reading\n";
    return 2;
  }
  if (config.stats) write_stats(err, stats);
  out.flush();
  return 0;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!config.input) return run(config, std::cin, out, err);
  std::ifstream file(*config.input);
  if (!file) {
    err << "sarf: cannot open input file: " << config.input->string() << '\n';
    return 2;
  }
  return run(config, file, out, err);
}

}  // namespace sarf
