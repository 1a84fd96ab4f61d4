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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ipsumm/directory.hpp"
#include "ipsumm/heuristic.hpp"
#include "ipsumm/ipv4.hpp"

namespace ipsumm {

enum class Format { kTable, kJson, kCsv };

// "table", "json" or "csv"; anything else throws ConfigError.
Format parse_format(std::string_view name);

// summarized / original; NaN when original is 0.
double compression_rate(std::size_t original, std::size_t summarized);

// Sum of 2^(32 - mask) over the list. Overlapping prefixes count once each.
std::uint64_t claimed_addresses(std::span<const Prefix> prefixes);

// original / claimed; NaN when nothing is claimed.
double precision(std::size_t original, std::uint64_t claimed);

// Statistics for one summary at one configuration. claimed_addresses and
// precision go beyond the size/rate figures and are labeled as an
// extension in table output.
struct SummaryStats {
  std::string registry;
  std::optional<int> granularity;
  int min_subnet_mask = kDefaultMinSubnetMask;
  int distance_threshold = 0;
  double density_threshold = 0.0;
  std::size_t original_size = 0;
  std::size_t summarized_size = 0;
  double compression_rate = 0.0;
  std::uint64_t claimed_addresses = 0;
  double precision = 0.0;
  std::vector<Prefix> prefixes;
};

SummaryStats make_stats(std::string registry, const SummaryResult& result,
                        const SummaryConfig& config);
// Uses total_original as the original size and the merged prefix list.
SummaryStats make_stats(std::string registry, const MergedSummary& merged,
                        const SummaryConfig& config);

// One address set summarized under one or more configurations.
struct SummaryReport {
  std::string registry;
  std::vector<SummaryStats> per_config;
};

std::string render(const SummaryReport& report, Format format);

// Outcome of one configuration over a registry list. Either mode may be
// absent.
struct SimulationRun {
  SummaryConfig config;
  std::optional<MergedSummary> distributed;
  std::optional<MergedSummary> single;

  // NaN unless both modes are present and distributed is non-empty.
  double decrease() const;
};

struct SimulationReport {
  std::vector<SimulationRun> runs;
};

std::string render(const SimulationReport& report, Format format);

}  // namespace ipsumm
