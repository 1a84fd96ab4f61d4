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

#include "ipsumm/ipsumm.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <limits>
#include <memory>
#include <new>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ipsumm/directory.hpp"
#include "ipsumm/error.hpp"
#include "ipsumm/heuristic.hpp"
#include "ipsumm/ipv4.hpp"
#include "ipsumm/patricia.hpp"
#include "ipsumm/registry_io.hpp"
#include "ipsumm/report.hpp"

struct ipsumm_tree {
  ipsumm::PatriciaTree tree;
};

struct ipsumm_summary {
  ipsumm::SummaryResult result;
};

struct ipsumm_registries {
  std::vector<ipsumm::RegistrySet> sets;
};

struct ipsumm_simulation {
  ipsumm::SimulationReport report;
};

namespace {

thread_local std::string g_last_error;

ipsumm_status fail(ipsumm_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
ipsumm_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    return IPSUMM_OK;
  } catch (const ipsumm::ParseError& e) {
    return fail(IPSUMM_E_PARSE, e.what());
  } catch (const ipsumm::IoError& e) {
    return fail(IPSUMM_E_IO, e.what());
  } catch (const ipsumm::ConfigError& e) {
    return fail(IPSUMM_E_CONFIG, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(IPSUMM_E_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(IPSUMM_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(IPSUMM_E_INTERNAL, e.what());
  } catch (...) {
    return fail(IPSUMM_E_INTERNAL, "unknown error");
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw std::invalid_argument(std::string(what) + " is null");
}

char* to_c_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void copy_out(const std::string& s, char* buf, std::size_t cap) {
  require(buf, "buffer");
  if (cap < s.size() + 1) throw std::invalid_argument("buffer too small");
  std::memcpy(buf, s.c_str(), s.size() + 1);
}

void fill(ipsumm_config* cfg, const ipsumm::SummaryConfig& c) {
  cfg->granularity = c.granularity().value_or(-1);
  cfg->min_subnet_mask = c.min_subnet_mask();
  cfg->distance_threshold = c.distance_threshold();
  cfg->density_threshold = c.density_threshold();
}

ipsumm::SummaryConfig to_config(const ipsumm_config* cfg) {
  require(cfg, "config");
  if (cfg->granularity >= 0) {
    return ipsumm::SummaryConfig::from_granularity(cfg->granularity,
                                                   cfg->min_subnet_mask);
  }
  return ipsumm::SummaryConfig::from_thresholds(
      cfg->distance_threshold, cfg->density_threshold, cfg->min_subnet_mask);
}

ipsumm::Format to_format(ipsumm_format f) {
  switch (f) {
    case IPSUMM_FORMAT_TABLE: return ipsumm::Format::kTable;
    case IPSUMM_FORMAT_JSON: return ipsumm::Format::kJson;
    case IPSUMM_FORMAT_CSV: return ipsumm::Format::kCsv;
  }
  throw ipsumm::ConfigError("unknown output format");
}

std::vector<ipsumm::Ipv4Address> to_addresses(const uint32_t* addrs, size_t count) {
  if (count > 0) require(addrs, "address array");
  std::vector<ipsumm::Ipv4Address> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) out.emplace_back(addrs[i]);
  return out;
}

}  // namespace

extern "C" {

const char* ipsumm_version(void) { return "0.1.0"; }

const char* ipsumm_status_string(ipsumm_status status) {
  switch (status) {
    case IPSUMM_OK: return "ok";
    case IPSUMM_E_INVALID_ARGUMENT: return "invalid argument";
    case IPSUMM_E_PARSE: return "parse error";
    case IPSUMM_E_IO: return "i/o error";
    case IPSUMM_E_CONFIG: return "configuration error";
    case IPSUMM_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* ipsumm_last_error(void) { return g_last_error.c_str(); }

void ipsumm_string_free(char* str) { std::free(str); }

ipsumm_status ipsumm_parse_address(const char* text, uint32_t* out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = ipsumm::Ipv4Address::parse(text).value();
  });
}

ipsumm_status ipsumm_parse_prefix(const char* text, uint32_t* bits, int* mask_len) {
  return guarded([&] {
    require(text, "text");
    require(bits, "bits");
    require(mask_len, "mask_len");
    const ipsumm::Prefix p = ipsumm::Prefix::parse(text);
    *bits = p.bits();
    *mask_len = p.mask_len();
  });
}

ipsumm_status ipsumm_format_address(uint32_t addr, char* buf, size_t cap) {
  return guarded([&] { copy_out(ipsumm::Ipv4Address(addr).to_string(), buf, cap); });
}

ipsumm_status ipsumm_format_prefix(uint32_t bits, int mask_len, char* buf, size_t cap) {
  return guarded([&] { copy_out(ipsumm::Prefix(bits, mask_len).to_string(), buf, cap); });
}

ipsumm_status ipsumm_prefix_contains(uint32_t outer_bits, int outer_mask,
                                     uint32_t inner_bits, int inner_mask, int* out) {
  return guarded([&] {
    require(out, "out");
    *out = ipsumm::contains(ipsumm::Prefix(outer_bits, outer_mask),
                            ipsumm::Prefix(inner_bits, inner_mask))
               ? 1
               : 0;
  });
}

ipsumm_status ipsumm_config_init(ipsumm_config* cfg, int granularity, int min_subnet_mask) {
  return guarded([&] {
    require(cfg, "config");
    fill(cfg, ipsumm::SummaryConfig::from_granularity(granularity, min_subnet_mask));
  });
}

ipsumm_status ipsumm_config_init_thresholds(ipsumm_config* cfg, int distance_threshold,
                                            double density_threshold, int min_subnet_mask) {
  return guarded([&] {
    require(cfg, "config");
    fill(cfg, ipsumm::SummaryConfig::from_thresholds(distance_threshold, density_threshold,
                                                     min_subnet_mask));
  });
}

ipsumm_status ipsumm_parse_format(const char* name, ipsumm_format* out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    switch (ipsumm::parse_format(name)) {
      case ipsumm::Format::kTable: *out = IPSUMM_FORMAT_TABLE; break;
      case ipsumm::Format::kJson: *out = IPSUMM_FORMAT_JSON; break;
      case ipsumm::Format::kCsv: *out = IPSUMM_FORMAT_CSV; break;
    }
  });
}

ipsumm_status ipsumm_tree_create(ipsumm_tree** out) {
  return guarded([&] {
    require(out, "out");
    *out = new ipsumm_tree{};
  });
}

ipsumm_status ipsumm_tree_build(const uint32_t* addrs, size_t count, ipsumm_tree** out) {
  return guarded([&] {
    require(out, "out");
    const auto list = to_addresses(addrs, count);
    *out = new ipsumm_tree{ipsumm::PatriciaTree::build(list)};
  });
}

ipsumm_status ipsumm_tree_load_file(const char* path, ipsumm_tree** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    const auto list = ipsumm::read_address_file(path);
    *out = new ipsumm_tree{ipsumm::PatriciaTree::build(list)};
  });
}

ipsumm_status ipsumm_tree_insert(ipsumm_tree* tree, uint32_t addr, int* inserted) {
  return guarded([&] {
    require(tree, "tree");
    const bool added = tree->tree.insert(ipsumm::Ipv4Address(addr));
    if (inserted) *inserted = added ? 1 : 0;
  });
}

size_t ipsumm_tree_size(const ipsumm_tree* tree) { return tree ? tree->tree.size() : 0; }

size_t ipsumm_tree_node_count(const ipsumm_tree* tree) {
  return tree ? tree->tree.node_count() : 0;
}

ipsumm_status ipsumm_tree_dump(const ipsumm_tree* tree, char** out) {
  return guarded([&] {
    require(tree, "tree");
    require(out, "out");
    *out = to_c_string(tree->tree.dump());
  });
}

void ipsumm_tree_free(ipsumm_tree* tree) { delete tree; }

ipsumm_status ipsumm_summarize(const ipsumm_tree* tree, const ipsumm_config* cfg,
                               ipsumm_summary** out) {
  return guarded([&] {
    require(tree, "tree");
    require(out, "out");
    *out = new ipsumm_summary{ipsumm::summarize(tree->tree, to_config(cfg))};
  });
}

size_t ipsumm_summary_original_size(const ipsumm_summary* s) {
  return s ? s->result.original_size : 0;
}

size_t ipsumm_summary_size(const ipsumm_summary* s) {
  return s ? s->result.summarized_size() : 0;
}

double ipsumm_summary_compression_rate(const ipsumm_summary* s) {
  return s ? s->result.compression_rate() : std::numeric_limits<double>::quiet_NaN();
}

ipsumm_status ipsumm_summary_prefix(const ipsumm_summary* s, size_t index, uint32_t* bits,
                                    int* mask_len) {
  return guarded([&] {
    require(s, "summary");
    require(bits, "bits");
    require(mask_len, "mask_len");
    if (index >= s->result.prefixes.size()) throw std::invalid_argument("index out of range");
    *bits = s->result.prefixes[index].bits();
    *mask_len = s->result.prefixes[index].mask_len();
  });
}

void ipsumm_summary_free(ipsumm_summary* s) { delete s; }

ipsumm_status ipsumm_render_summaries(const ipsumm_tree* tree, const char* registry_name,
                                      const ipsumm_config* cfgs, size_t cfg_count,
                                      ipsumm_format format, char** out) {
  return guarded([&] {
    require(tree, "tree");
    require(out, "out");
    require(registry_name, "registry name");
    if (cfg_count == 0) throw ipsumm::ConfigError("no configuration given");
    require(cfgs, "configs");
    const ipsumm::Format fmt = to_format(format);
    ipsumm::SummaryReport report{registry_name, {}};
    for (size_t i = 0; i < cfg_count; ++i) {
      const ipsumm::SummaryConfig config = to_config(&cfgs[i]);
      report.per_config.push_back(
          ipsumm::make_stats(registry_name, ipsumm::summarize(tree->tree, config), config));
    }
    *out = to_c_string(ipsumm::render(report, fmt));
  });
}

ipsumm_status ipsumm_registries_create(ipsumm_registries** out) {
  return guarded([&] {
    require(out, "out");
    *out = new ipsumm_registries{};
  });
}

namespace {

void append_unique(ipsumm_registries* regs, ipsumm::RegistrySet set) {
  for (const auto& existing : regs->sets) {
    if (existing.name == set.name) {
      throw ipsumm::ConfigError("duplicate registry name '" + set.name + "'");
    }
  }
  regs->sets.push_back(std::move(set));
}

}  // namespace

ipsumm_status ipsumm_registries_add(ipsumm_registries* regs, const char* name,
                                    const uint32_t* addrs, size_t count) {
  return guarded([&] {
    require(regs, "registries");
    require(name, "name");
    append_unique(regs, ipsumm::RegistrySet(name, to_addresses(addrs, count)));
  });
}

ipsumm_status ipsumm_registries_add_file(ipsumm_registries* regs, const char* path) {
  return guarded([&] {
    require(regs, "registries");
    require(path, "path");
    append_unique(regs, ipsumm::read_registry_file(path));
  });
}

ipsumm_status ipsumm_registries_load_manifest(ipsumm_registries* regs, const char* path) {
  return guarded([&] {
    require(regs, "registries");
    require(path, "path");
    // Load fully before touching regs so a failure leaves it unchanged.
    std::vector<ipsumm::RegistrySet> loaded = ipsumm::read_manifest(path);
    ipsumm_registries staged{regs->sets};
    for (auto& set : loaded) append_unique(&staged, std::move(set));
    regs->sets = std::move(staged.sets);
  });
}

size_t ipsumm_registries_count(const ipsumm_registries* regs) {
  return regs ? regs->sets.size() : 0;
}

void ipsumm_registries_free(ipsumm_registries* regs) { delete regs; }

ipsumm_status ipsumm_simulate(const ipsumm_registries* regs, const ipsumm_config* cfgs,
                              size_t cfg_count, ipsumm_mode mode, unsigned jobs,
                              ipsumm_simulation** out) {
  return guarded([&] {
    require(regs, "registries");
    require(out, "out");
    if (cfg_count == 0) throw ipsumm::ConfigError("no configuration given");
    require(cfgs, "configs");
    if ((mode & IPSUMM_MODE_BOTH) == 0 || (mode & ~IPSUMM_MODE_BOTH) != 0) {
      throw ipsumm::ConfigError("unknown simulation mode");
    }
    auto sim = std::make_unique<ipsumm_simulation>();
    for (size_t i = 0; i < cfg_count; ++i) {
      const ipsumm::SummaryConfig config = to_config(&cfgs[i]);
      ipsumm::SimulationRun run{config, std::nullopt, std::nullopt};
      if (mode & IPSUMM_MODE_DISTRIBUTED) {
        run.distributed = ipsumm::publish_and_merge(regs->sets, config, jobs == 0 ? 1 : jobs);
      }
      if (mode & IPSUMM_MODE_SINGLE) {
        run.single = ipsumm::summarize_single(regs->sets, config);
      }
      sim->report.runs.push_back(std::move(run));
    }
    *out = sim.release();
  });
}

size_t ipsumm_simulation_runs(const ipsumm_simulation* sim) {
  return sim ? sim->report.runs.size() : 0;
}

ipsumm_status ipsumm_simulation_merged_size(const ipsumm_simulation* sim, size_t run,
                                            ipsumm_mode which, size_t* out) {
  return guarded([&] {
    require(sim, "simulation");
    require(out, "out");
    if (run >= sim->report.runs.size()) throw std::invalid_argument("run index out of range");
    const ipsumm::SimulationRun& r = sim->report.runs[run];
    const std::optional<ipsumm::MergedSummary>* m = nullptr;
    if (which == IPSUMM_MODE_DISTRIBUTED) m = &r.distributed;
    else if (which == IPSUMM_MODE_SINGLE) m = &r.single;
    else throw std::invalid_argument("mode must be distributed or single");
    if (!m->has_value()) throw std::invalid_argument("mode was not simulated");
    *out = (*m)->merged_size();
  });
}

double ipsumm_simulation_decrease(const ipsumm_simulation* sim, size_t run) {
  if (!sim || run >= sim->report.runs.size()) return std::numeric_limits<double>::quiet_NaN();
  return sim->report.runs[run].decrease();
}

ipsumm_status ipsumm_simulation_render(const ipsumm_simulation* sim, ipsumm_format format,
                                       char** out) {
  return guarded([&] {
    require(sim, "simulation");
    require(out, "out");
    *out = to_c_string(ipsumm::render(sim->report, to_format(format)));
  });
}

void ipsumm_simulation_free(ipsumm_simulation* sim) { delete sim; }

}  // extern "C"
