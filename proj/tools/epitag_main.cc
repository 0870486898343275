// Copyright 2026 The Epitag Authors.
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

// Command-line driver.
//
//   epitag run --corpus DIR --out OUT [--emit-compressed] [--workers N]
//   epitag filter --corpus DIR --out OUT
//   epitag compress (--corpus DIR | --input OUT/audit.tsv) --out OUT
//   epitag extract --input OUT/compressed.jsonl --out OUT
//   epitag dict-check [--dict-<kind> FILE ...] [--strict-dicts]
//   epitag defaults --out DIR
//
// --config FILE reads key=value lines (keys are long option names without
// the dashes); options given on the command line take precedence.
//
// Exit codes: 0 success, 2 configuration, 3 dictionary, 4 I/O.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "epitag/errors.h"
#include "epitag/lexicon.h"
#include "epitag/pipeline.h"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitDictionary = 3;
constexpr int kExitIo = 4;

struct Flags {
  epitag::RunConfig config;
  std::string corpus_format = "dir";
  std::map<epitag::DictKind, std::string> dict_paths;
  std::string input;
};

void AddCommonOptions(CLI::App* cmd, Flags& flags, bool corpus, bool input) {
  auto& cfg = flags.config;
  if (corpus) {
    cmd->add_option("--corpus", cfg.corpus, "Corpus directory or TSV file");
    cmd->add_option("--corpus-format", flags.corpus_format, "dir or tsv")
        ->check(CLI::IsMember({"dir", "tsv"}));
  }
  if (input) {
    cmd->add_option("--input", flags.input, "Output of the previous stage");
  }
  for (epitag::DictKind kind : epitag::kAllDictKinds) {
    const std::string name(epitag::DictKindName(kind));
    cmd->add_option("--dict-" + name, flags.dict_paths[kind],
                    name + " dictionary file");
  }
  cmd->add_option("--rules", cfg.rules_path, "Sentence filter rules (TSV)");
  cmd->add_option("--registry", cfg.registry_path, "Pattern registry (TSV)");
  cmd->add_flag("--strict-dicts", cfg.strict_dicts,
                "Treat dictionary validation issues as errors");
  cmd->add_option("--max-name-len", cfg.max_name_len,
                  "Longest accepted name, in characters");
  cmd->add_option("--workers", cfg.workers, "Worker threads");
}

void Finalize(Flags& flags) {
  flags.config.corpus_format = flags.corpus_format == "tsv"
                                   ? epitag::CorpusFormat::kTsv
                                   : epitag::CorpusFormat::kDir;
  for (const auto& [kind, path] : flags.dict_paths) {
    if (!path.empty()) flags.config.dict_paths[kind] = path;
  }
}

std::string Trim(const std::string& s) {
  const size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

// Splices options from a key=value file into the argument list, right after
// the subcommand, skipping options already present.
std::vector<std::string> ExpandConfig(std::vector<std::string> args,
                                      const std::set<std::string>& commands) {
  auto it = std::find_if(args.begin(), args.end(), [](const std::string& a) {
    return a == "--config" || a.starts_with("--config=");
  });
  if (it == args.end()) return args;
  std::string path;
  if (*it == "--config") {
    if (it + 1 == args.end()) throw epitag::ConfigError("--config needs a file");
    path = *(it + 1);
    args.erase(it, it + 2);
  } else {
    path = it->substr(9);
    args.erase(it);
  }
  std::ifstream in(path);
  if (!in) throw epitag::ConfigError("cannot read config file " + path);

  std::set<std::string> given;
  for (const std::string& a : args) {
    if (a.starts_with("--")) given.insert(a.substr(0, a.find('=')));
  }
  std::vector<std::string> extra;
  std::string line;
  for (int row = 1; std::getline(in, line); ++row) {
    line = Trim(line);
    if (line.empty() || line[0] == '#') continue;
    const size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw epitag::ConfigError(path + ":" + std::to_string(row) +
                                ": expected key=value");
    }
    std::string key = Trim(line.substr(0, eq));
    const std::string value = Trim(line.substr(eq + 1));
    if (!key.starts_with("--")) key = "--" + key;
    if (given.contains(key)) continue;
    if (value == "true") {
      extra.push_back(key);
    } else if (value != "false") {
      extra.push_back(key);
      extra.push_back(value);
    }
  }
  auto cmd = std::find_if(args.begin(), args.end(), [&](const std::string& a) {
    return commands.contains(a);
  });
  if (cmd == args.end()) return args;
  args.insert(cmd + 1, extra.begin(), extra.end());
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kinship extraction from classical Chinese epitaphs"};
  app.add_option("--config", "key=value configuration file");
  app.require_subcommand(1);

  Flags flags;
  auto& cfg = flags.config;

  auto* run = app.add_subcommand("run", "Full pipeline");
  AddCommonOptions(run, flags, true, false);
  run->add_option("--out", cfg.out_dir, "Output directory")->required();
  run->add_flag("--emit-compressed", cfg.emit_compressed,
                "Also write compressed.jsonl and cleaned.txt");

  auto* filter = app.add_subcommand("filter", "Sentence selection only");
  AddCommonOptions(filter, flags, true, false);
  filter->add_option("--out", cfg.out_dir, "Output directory")->required();

  auto* compress =
      app.add_subcommand("compress", "Selection and compression");
  AddCommonOptions(compress, flags, true, true);
  compress->add_option("--out", cfg.out_dir, "Output directory")->required();

  auto* extract =
      app.add_subcommand("extract", "Extraction from compressed.jsonl");
  AddCommonOptions(extract, flags, false, true);
  extract->add_option("--out", cfg.out_dir, "Output directory")->required();

  auto* check = app.add_subcommand("dict-check", "Dictionary validation");
  AddCommonOptions(check, flags, false, false);

  std::string defaults_dir;
  auto* defaults = app.add_subcommand("defaults", "Write built-in data files");
  defaults->add_option("--out", defaults_dir, "Target directory")->required();

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    std::set<std::string> commands;
    for (const CLI::App* sub : app.get_subcommands({})) {
      commands.insert(sub->get_name());
    }
    args = ExpandConfig(std::move(args), commands);
  } catch (const epitag::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  std::reverse(args.begin(), args.end());

  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }
  Finalize(flags);

  try {
    if (*run) {
      epitag::RunPipeline(cfg);
    } else if (*filter) {
      epitag::RunFilterCommand(cfg);
    } else if (*compress) {
      if (cfg.corpus.empty() == flags.input.empty()) {
        throw epitag::ConfigError("compress needs exactly one of --corpus, --input");
      }
      epitag::RunCompressCommand(cfg, flags.input);
    } else if (*extract) {
      epitag::RunExtractCommand(cfg, flags.input);
    } else if (*check) {
      const size_t issues = epitag::RunDictCheck(cfg, std::cout);
      if (issues > 0 && cfg.strict_dicts) return kExitDictionary;
    } else if (*defaults) {
      epitag::WriteDefaults(defaults_dir);
    }
  } catch (const epitag::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const epitag::DictionaryError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDictionary;
  } catch (const epitag::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const epitag::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return 0;
}
