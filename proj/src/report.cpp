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

#include "ipsumm/report.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <limits>

#include "ipsumm/error.hpp"
#include "json.hpp"

namespace ipsumm {
namespace {

using Json = nlohmann::ordered_json;
using Rows = std::vector<std::vector<std::string>>;

// Shortest round-trip form, always with '.' as decimal separator.
std::string number(double v) {
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

std::string fixed(double v, int digits) {
  if (std::isnan(v)) return "n/a";
  std::array<char, 64> buf{};
  // snprintf honours LC_NUMERIC; to_chars does not.
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::fixed, digits);
  return std::string(buf.data(), ptr);
}

std::string rate(double v) { return fixed(v, 8); }

std::string percent(double v) {
  if (std::isnan(v)) return "n/a";
  return fixed(v * 100.0, 2) + "%";
}

Json json_number(double v) {
  if (std::isnan(v)) return nullptr;
  return v;
}

std::string config_label(const SummaryConfig& config) {
  if (auto g = config.granularity()) return "g" + std::to_string(*g);
  return "d" + std::to_string(config.distance_threshold()) + "/" +
         number(config.density_threshold());
}

std::string config_label(const SummaryStats& s) {
  if (s.granularity) return "g" + std::to_string(*s.granularity);
  return "d" + std::to_string(s.distance_threshold) + "/" +
         number(s.density_threshold);
}

// Left-aligned columns separated by two spaces, no trailing blanks.
std::string layout(const Rows& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (row.size() > widths.size()) widths.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      widths[i] = std::max(widths[i], row[i].size());
    }
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(widths[i] - row[i].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

Json prefixes_json(const std::vector<Prefix>& prefixes) {
  Json list = Json::array();
  for (const Prefix& p : prefixes) list.push_back(p.to_string());
  return list;
}

Json stats_json(const SummaryStats& s) {
  Json j;
  j["registry"] = s.registry;
  j["original_size"] = s.original_size;
  j["granularity"] = s.granularity ? Json(*s.granularity) : Json(nullptr);
  j["min_subnet_mask"] = s.min_subnet_mask;
  j["distance_threshold"] = s.distance_threshold;
  j["density_threshold"] = s.density_threshold;
  j["summarized_size"] = s.summarized_size;
  j["compression_rate"] = json_number(s.compression_rate);
  j["claimed_addresses"] = s.claimed_addresses;
  j["precision"] = json_number(s.precision);
  j["prefixes"] = prefixes_json(s.prefixes);
  return j;
}

const char* kCsvColumns =
    "registry,granularity,min_subnet_mask,distance_threshold,density_threshold,"
    "original_size,summarized_size,compression_rate,claimed_addresses,precision";

std::string csv_number(double v) { return std::isnan(v) ? "" : number(v); }

std::string stats_csv(const SummaryStats& s) {
  std::string row = s.registry;
  row += ',' + (s.granularity ? std::to_string(*s.granularity) : std::string());
  row += ',' + std::to_string(s.min_subnet_mask);
  row += ',' + std::to_string(s.distance_threshold);
  row += ',' + number(s.density_threshold);
  row += ',' + std::to_string(s.original_size);
  row += ',' + std::to_string(s.summarized_size);
  row += ',' + csv_number(s.compression_rate);
  row += ',' + std::to_string(s.claimed_addresses);
  row += ',' + csv_number(s.precision);
  return row;
}

std::string prefix_words(const std::vector<Prefix>& prefixes) {
  std::string out;
  for (const Prefix& p : prefixes) {
    if (!out.empty()) out += ' ';
    out += p.to_string();
  }
  return out;
}

// --- summarize -----------------------------------------------------------

std::string summary_table(const SummaryReport& report) {
  Rows rows;
  std::vector<std::string> header{"set", "original"};
  std::vector<std::string> row{report.registry,
                               report.per_config.empty()
                                   ? "0"
                                   : std::to_string(report.per_config.front().original_size)};
  for (const SummaryStats& s : report.per_config) {
    const std::string label = config_label(s);
    header.insert(header.end(), {label + " size", label + " rate",
                                 label + " claimed*", label + " precision*"});
    row.insert(row.end(), {std::to_string(s.summarized_size), rate(s.compression_rate),
                           std::to_string(s.claimed_addresses), rate(s.precision)});
  }
  rows.push_back(std::move(header));
  rows.push_back(std::move(row));

  std::string out = layout(rows);
  out += "* extension: claimed addresses and precision (original / claimed)\n";
  for (const SummaryStats& s : report.per_config) {
    out += "\nprefixes (" + config_label(s) + ", min mask " +
           std::to_string(s.min_subnet_mask) + "):\n";
    for (const Prefix& p : s.prefixes) out += p.to_string() + '\n';
  }
  return out;
}

std::string summary_json(const SummaryReport& report) {
  Json j;
  if (report.per_config.size() == 1) {
    j = stats_json(report.per_config.front());
  } else {
    j["registry"] = report.registry;
    j["original_size"] =
        report.per_config.empty() ? 0 : report.per_config.front().original_size;
    Json list = Json::array();
    for (const SummaryStats& s : report.per_config) list.push_back(stats_json(s));
    j["per_granularity"] = std::move(list);
  }
  return j.dump(2) + '\n';
}

std::string summary_csv(const SummaryReport& report) {
  std::string out = std::string(kCsvColumns) + ",prefixes\n";
  for (const SummaryStats& s : report.per_config) {
    out += stats_csv(s) + ',' + prefix_words(s.prefixes) + '\n';
  }
  return out;
}

// --- simulate ------------------------------------------------------------

enum class Mode { kDistributed, kSingle };

const std::optional<MergedSummary>& section(const SimulationRun& run, Mode mode) {
  return mode == Mode::kDistributed ? run.distributed : run.single;
}

bool has_mode(const SimulationReport& report, Mode mode) {
  return !report.runs.empty() && section(report.runs.front(), mode).has_value();
}

// Per-registry rows followed by the gLS "Final" row, for every run.
std::string section_table(const SimulationReport& report, Mode mode) {
  Rows rows;
  std::vector<std::string> header{"set", "original"};
  for (const SimulationRun& run : report.runs) {
    const std::string label = config_label(run.config);
    header.insert(header.end(), {label + " size", label + " rate"});
  }
  rows.push_back(std::move(header));

  const MergedSummary& first = *section(report.runs.front(), mode);
  for (std::size_t i = 0; i < first.per_registry.size(); ++i) {
    std::vector<std::string> row{first.per_registry[i].name,
                                 std::to_string(first.per_registry[i].result.original_size)};
    for (const SimulationRun& run : report.runs) {
      const SummaryResult& r = section(run, mode)->per_registry[i].result;
      row.insert(row.end(), {std::to_string(r.summarized_size()), rate(r.compression_rate())});
    }
    rows.push_back(std::move(row));
  }
  std::vector<std::string> final_row{"Final", std::to_string(first.total_original)};
  for (const SimulationRun& run : report.runs) {
    const MergedSummary& m = *section(run, mode);
    final_row.insert(final_row.end(), {std::to_string(m.merged_size()), rate(m.compression_rate())});
  }
  rows.push_back(std::move(final_row));
  return layout(rows);
}

std::string comparison_table(const SimulationReport& report) {
  Rows rows;
  std::vector<std::string> header{"hLS", "original"};
  std::vector<std::string> dist{"Distributed", std::to_string(report.runs.front().distributed->total_original)};
  std::vector<std::string> single{"Single", std::to_string(report.runs.front().single->total_original)};
  std::vector<std::string> decrease{"Decrease", ""};
  for (const SimulationRun& run : report.runs) {
    const std::string label = config_label(run.config);
    header.insert(header.end(), {label + " size", label + " rate"});
    dist.insert(dist.end(), {std::to_string(run.distributed->merged_size()),
                             rate(run.distributed->compression_rate())});
    single.insert(single.end(), {std::to_string(run.single->merged_size()),
                                 rate(run.single->compression_rate())});
    decrease.insert(decrease.end(), {percent(run.decrease()), ""});
  }
  rows.push_back(std::move(header));
  rows.push_back(std::move(dist));
  rows.push_back(std::move(single));
  rows.push_back(std::move(decrease));
  return layout(rows);
}

std::string simulation_table(const SimulationReport& report) {
  if (report.runs.empty()) return {};
  const SummaryConfig& cfg = report.runs.front().config;
  std::string out;
  bool first = true;
  for (Mode mode : {Mode::kDistributed, Mode::kSingle}) {
    if (!has_mode(report, mode)) continue;
    if (!first) out += '\n';
    first = false;
    out += mode == Mode::kDistributed ? "distributed mode" : "single mode";
    out += " (min mask " + std::to_string(cfg.min_subnet_mask()) + ")\n";
    out += section_table(report, mode);
  }
  if (has_mode(report, Mode::kDistributed) && has_mode(report, Mode::kSingle)) {
    out += "\ncomparison\n" + comparison_table(report);
  }
  for (Mode mode : {Mode::kDistributed, Mode::kSingle}) {
    if (!has_mode(report, mode)) continue;
    for (const SimulationRun& run : report.runs) {
      const MergedSummary& m = *section(run, mode);
      if (m.duplicates_removed == 0) continue;
      out += "\nnote: " + std::string(mode == Mode::kDistributed ? "distributed" : "single") +
             " merge at " + config_label(run.config) + " dropped " +
             std::to_string(m.duplicates_removed) + " duplicate prefix(es)\n";
    }
  }
  return out;
}

Json merged_json(const MergedSummary& m, const SummaryConfig& config) {
  Json j;
  Json parts = Json::array();
  for (const RegistrySummary& part : m.per_registry) {
    parts.push_back(stats_json(make_stats(part.name, part.result, config)));
  }
  j["registries"] = std::move(parts);
  Json final_stats = stats_json(make_stats("Final", m, config));
  final_stats["distinct_original_size"] = m.distinct_original;
  final_stats["duplicates_removed"] = m.duplicates_removed;
  j["final"] = std::move(final_stats);
  return j;
}

std::string simulation_json(const SimulationReport& report) {
  Json runs = Json::array();
  for (const SimulationRun& run : report.runs) {
    Json r;
    r["granularity"] = run.config.granularity() ? Json(*run.config.granularity()) : Json(nullptr);
    r["min_subnet_mask"] = run.config.min_subnet_mask();
    r["distance_threshold"] = run.config.distance_threshold();
    r["density_threshold"] = run.config.density_threshold();
    r["distributed"] = run.distributed ? merged_json(*run.distributed, run.config) : Json(nullptr);
    r["single"] = run.single ? merged_json(*run.single, run.config) : Json(nullptr);
    r["decrease"] = json_number(run.decrease());
    runs.push_back(std::move(r));
  }
  Json j;
  j["runs"] = std::move(runs);
  return j.dump(2) + '\n';
}

std::string simulation_csv(const SimulationReport& report) {
  std::string out = "mode," + std::string(kCsvColumns) + ",decrease\n";
  for (Mode mode : {Mode::kDistributed, Mode::kSingle}) {
    const std::string name = mode == Mode::kDistributed ? "distributed" : "single";
    for (const SimulationRun& run : report.runs) {
      const auto& m = section(run, mode);
      if (!m) continue;
      for (const RegistrySummary& part : m->per_registry) {
        out += name + ',' + stats_csv(make_stats(part.name, part.result, run.config)) + ",\n";
      }
      out += name + ',' + stats_csv(make_stats("Final", *m, run.config)) + ",\n";
    }
  }
  for (const SimulationRun& run : report.runs) {
    if (!run.distributed || !run.single) continue;
    SummaryStats s;
    s.granularity = run.config.granularity();
    s.min_subnet_mask = run.config.min_subnet_mask();
    s.distance_threshold = run.config.distance_threshold();
    s.density_threshold = run.config.density_threshold();
    out += "comparison,Decrease," + (s.granularity ? std::to_string(*s.granularity) : std::string()) +
           ',' + std::to_string(s.min_subnet_mask) + ',' + std::to_string(s.distance_threshold) +
           ',' + number(s.density_threshold) + ",,,,,," + csv_number(run.decrease()) + '\n';
  }
  return out;
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "table") return Format::kTable;
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  throw ConfigError("unknown output format '" + std::string(name) +
                    "' (expected table, json or csv)");
}

double compression_rate(std::size_t original, std::size_t summarized) {
  if (original == 0) return std::numeric_limits<double>::quiet_NaN();
  return static_cast<double>(summarized) / static_cast<double>(original);
}

std::uint64_t claimed_addresses(std::span<const Prefix> prefixes) {
  std::uint64_t total = 0;
  for (const Prefix& p : prefixes) total += p.address_count();
  return total;
}

double precision(std::size_t original, std::uint64_t claimed) {
  if (claimed == 0) return std::numeric_limits<double>::quiet_NaN();
  return static_cast<double>(original) / static_cast<double>(claimed);
}

namespace {

SummaryStats base_stats(std::string registry, const SummaryConfig& config) {
  SummaryStats s;
  s.registry = std::move(registry);
  s.granularity = config.granularity();
  s.min_subnet_mask = config.min_subnet_mask();
  s.distance_threshold = config.distance_threshold();
  s.density_threshold = config.density_threshold();
  return s;
}

}  // namespace

SummaryStats make_stats(std::string registry, const SummaryResult& result,
                        const SummaryConfig& config) {
  SummaryStats s = base_stats(std::move(registry), config);
  s.original_size = result.original_size;
  s.summarized_size = result.summarized_size();
  s.compression_rate = compression_rate(s.original_size, s.summarized_size);
  s.claimed_addresses = claimed_addresses(result.prefixes);
  s.precision = precision(s.original_size, s.claimed_addresses);
  s.prefixes = result.prefixes;
  return s;
}

SummaryStats make_stats(std::string registry, const MergedSummary& merged,
                        const SummaryConfig& config) {
  SummaryStats s = base_stats(std::move(registry), config);
  s.original_size = merged.total_original;
  s.summarized_size = merged.merged_size();
  s.compression_rate = compression_rate(s.original_size, s.summarized_size);
  s.claimed_addresses = claimed_addresses(merged.merged_prefixes);
  s.precision = precision(s.original_size, s.claimed_addresses);
  s.prefixes = merged.merged_prefixes;
  return s;
}

double SimulationRun::decrease() const {
  if (!distributed || !single) return std::numeric_limits<double>::quiet_NaN();
  return ipsumm::decrease(*distributed, *single);
}

std::string render(const SummaryReport& report, Format format) {
  switch (format) {
    case Format::kTable: return summary_table(report);
    case Format::kJson: return summary_json(report);
    case Format::kCsv: return summary_csv(report);
  }
  throw ConfigError("unknown output format");
}

std::string render(const SimulationReport& report, Format format) {
  switch (format) {
    case Format::kTable: return simulation_table(report);
    case Format::kJson: return simulation_json(report);
    case Format::kCsv: return simulation_csv(report);
  }
  throw ConfigError("unknown output format");
}

}  // namespace ipsumm
