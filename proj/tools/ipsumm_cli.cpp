// Copyright 2026 The ipsumm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Talks to the library only through the C API.
//
//   ipsumm summarize <file>              summarize one address list
//   ipsumm simulate  <files...>          distributed vs. single directory
//   ipsumm simulate  --manifest <file>
//   ipsumm tree      <file>              dump the PATRICIA trie

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ipsumm/ipsumm.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;

// Thrown to unwind with a message and exit status 2.
struct Failure {
  std::string message;
};

void check(ipsumm_status status) {
  if (status != IPSUMM_OK) throw Failure{ipsumm_last_error()};
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Tree = std::unique_ptr<ipsumm_tree, Deleter<ipsumm_tree, ipsumm_tree_free>>;
using Registries =
    std::unique_ptr<ipsumm_registries, Deleter<ipsumm_registries, ipsumm_registries_free>>;
using Simulation =
    std::unique_ptr<ipsumm_simulation, Deleter<ipsumm_simulation, ipsumm_simulation_free>>;
using CString = std::unique_ptr<char, Deleter<char, ipsumm_string_free>>;

struct Options {
  int granularity = 1;
  int min_mask = 8;
  bool sweep = false;
  std::optional<int> distance;
  std::optional<double> density;
  std::string format = "table";
  std::string mode = "both";
  unsigned jobs = 1;
  std::string output;
  std::string input;
  std::vector<std::string> inputs;
  std::string manifest;
};

std::vector<ipsumm_config> configs(const Options& opt) {
  if (opt.distance.has_value() != opt.density.has_value()) {
    throw Failure{"--distance and --density must be given together"};
  }
  std::vector<ipsumm_config> out;
  if (opt.distance) {
    ipsumm_config cfg{};
    check(ipsumm_config_init_thresholds(&cfg, *opt.distance, *opt.density, opt.min_mask));
    out.push_back(cfg);
  } else if (opt.sweep) {
    for (int g = 0; g <= 3; ++g) {
      ipsumm_config cfg{};
      check(ipsumm_config_init(&cfg, g, opt.min_mask));
      out.push_back(cfg);
    }
  } else {
    ipsumm_config cfg{};
    check(ipsumm_config_init(&cfg, opt.granularity, opt.min_mask));
    out.push_back(cfg);
  }
  return out;
}

ipsumm_format format(const Options& opt) {
  ipsumm_format f{};
  check(ipsumm_parse_format(opt.format.c_str(), &f));
  return f;
}

void emit(const Options& opt, const char* text) {
  if (opt.output.empty()) {
    std::fputs(text, stdout);
    std::fflush(stdout);
    return;
  }
  std::ofstream out(opt.output, std::ios::binary);
  out << text;
  if (!out) throw Failure{"cannot write '" + opt.output + "'"};
}

Tree load_tree(const std::string& path) {
  ipsumm_tree* raw = nullptr;
  check(ipsumm_tree_load_file(path.c_str(), &raw));
  return Tree(raw);
}

std::string stem(const std::string& path) {
  const auto slash = path.find_last_of('/');
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  const auto dot = name.find_last_of('.');
  if (dot != std::string::npos && dot != 0) name.resize(dot);
  return name;
}

void run_summarize(const Options& opt) {
  const auto cfgs = configs(opt);
  const ipsumm_format fmt = format(opt);
  Tree tree = load_tree(opt.input);
  char* text = nullptr;
  check(ipsumm_render_summaries(tree.get(), stem(opt.input).c_str(), cfgs.data(), cfgs.size(),
                                fmt, &text));
  CString owned(text);
  emit(opt, owned.get());
}

void run_tree(const Options& opt) {
  Tree tree = load_tree(opt.input);
  char* text = nullptr;
  check(ipsumm_tree_dump(tree.get(), &text));
  CString owned(text);
  emit(opt, owned.get());
}

ipsumm_mode parse_mode(const std::string& mode) {
  if (mode == "distributed") return IPSUMM_MODE_DISTRIBUTED;
  if (mode == "single") return IPSUMM_MODE_SINGLE;
  return IPSUMM_MODE_BOTH;
}

void run_simulate(const Options& opt) {
  const auto cfgs = configs(opt);
  const ipsumm_format fmt = format(opt);
  if (opt.manifest.empty() == opt.inputs.empty()) {
    throw Failure{"simulate needs either --manifest or registry files, not both"};
  }
  ipsumm_registries* raw = nullptr;
  check(ipsumm_registries_create(&raw));
  Registries regs(raw);
  if (!opt.manifest.empty()) {
    check(ipsumm_registries_load_manifest(regs.get(), opt.manifest.c_str()));
  }
  for (const std::string& path : opt.inputs) {
    check(ipsumm_registries_add_file(regs.get(), path.c_str()));
  }

  ipsumm_simulation* sim_raw = nullptr;
  check(ipsumm_simulate(regs.get(), cfgs.data(), cfgs.size(), parse_mode(opt.mode), opt.jobs,
                        &sim_raw));
  Simulation sim(sim_raw);
  char* text = nullptr;
  check(ipsumm_simulation_render(sim.get(), fmt, &text));
  CString owned(text);
  emit(opt, owned.get());
}

void add_summary_flags(CLI::App& cmd, Options& opt) {
  cmd.add_option("--granularity", opt.granularity, "Granularity 0 (finest) to 3 (coarsest)")
      ->check(CLI::Range(0, 3))
      ->capture_default_str();
  cmd.add_option("--min-mask", opt.min_mask,
                 "Minimum subnet mask; summaries must be strictly longer")
      ->check(CLI::Range(0, 32))
      ->capture_default_str();
  cmd.add_flag("--sweep", opt.sweep, "Run granularities 0 through 3");
  cmd.add_option("--distance", opt.distance, "Explicit distance threshold in bits")
      ->check(CLI::NonNegativeNumber);
  cmd.add_option("--density", opt.density, "Explicit density threshold in (0, 1]");
  cmd.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  cmd.add_option("--output", opt.output, "Write to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Summarize IPv4 address lists into CIDR prefixes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ipsumm_version());

  Options opt;

  auto* summarize = app.add_subcommand("summarize", "Summarize one address file");
  summarize->add_option("input", opt.input, "Address file, one dotted quad per line")
      ->required();
  add_summary_flags(*summarize, opt);

  auto* simulate = app.add_subcommand(
      "simulate", "Summarize per registry and merge, and/or summarize the union");
  simulate->add_option("registries", opt.inputs, "Registry address files (name = file stem)");
  simulate->add_option("--manifest", opt.manifest, "File of name=path lines");
  simulate->add_option("--mode", opt.mode, "Which directory layout to run")
      ->check(CLI::IsMember({"distributed", "single", "both"}))
      ->capture_default_str();
  simulate->add_option("--jobs", opt.jobs, "Registries summarized in parallel")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  add_summary_flags(*simulate, opt);

  auto* tree = app.add_subcommand("tree", "Print the PATRICIA trie of an address file");
  tree->add_option("input", opt.input, "Address file")->required();
  tree->add_option("--output", opt.output, "Write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (opt.sweep && (opt.distance || opt.density)) {
      throw Failure{"--sweep cannot be combined with --distance/--density"};
    }
    if (*summarize) run_summarize(opt);
    else if (*simulate) run_simulate(opt);
    else if (*tree) run_tree(opt);
  } catch (const Failure& f) {
    std::cerr << "ipsumm: " << f.message << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "ipsumm: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
