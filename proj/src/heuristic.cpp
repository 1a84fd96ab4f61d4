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

#include "ipsumm/heuristic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "ipsumm/error.hpp"

namespace ipsumm {
namespace {

constexpr std::array<Thresholds, 4> kGranularityTable{{
    {4, 1e-5},
    {8, 1e-6},
    {12, 1e-7},
    {16, 1e-8},
}};

void check_min_subnet_mask(int min_subnet_mask) {
  if (min_subnet_mask < 0 || min_subnet_mask > kMaxMask) {
    throw ConfigError("minimum subnet mask " + std::to_string(min_subnet_mask) +
                      " outside [0, 32]");
  }
}

bool is_summarizing_node(const TrieNode& node, const SummaryConfig& config) {
  if (node.prefix().mask_len() <= config.min_subnet_mask()) return false;
  for (int side = 0; side < 2; ++side) {
    const TrieNode* c = node.child(side);
    if (c && distance(node, *c) > config.distance_threshold()) return false;
  }
  for (int side = 0; side < 2; ++side) {
    const TrieNode* c = node.child(side);
    if (c && density(*c) < config.density_threshold()) return false;
  }
  return true;
}

void select(const TrieNode& node, const SummaryConfig& config,
            std::vector<Prefix>& out) {
  if (node.is_leaf() || is_summarizing_node(node, config)) {
    out.push_back(node.prefix());
    return;
  }
  for (int side = 0; side < 2; ++side) {
    if (const TrieNode* c = node.child(side)) select(*c, config, out);
  }
}

}  // namespace

Thresholds thresholds_for(int granularity) {
  if (granularity < kMinGranularity || granularity > kMaxGranularity) {
    throw ConfigError("granularity " + std::to_string(granularity) +
                      " outside [0, 3]");
  }
  return kGranularityTable[static_cast<std::size_t>(granularity)];
}

double interpolated_distance(double granularity) { return 4.0 * granularity + 4.0; }

double interpolated_density(double granularity) {
  return 1e-5 * std::exp(-2.303 * granularity);
}

int distance(const TrieNode& parent, const TrieNode& child) {
  return child.prefix().mask_len() - parent.prefix().mask_len();
}

std::uint64_t branch_capacity(int distance_bits) {
  if (distance_bits < 1 || distance_bits > kMaxMask) {
    throw std::invalid_argument("branch distance " + std::to_string(distance_bits) +
                                " outside [1, 32]");
  }
  return std::uint64_t{1} << (distance_bits - 1);
}

std::uint64_t vacant_in_branch(int distance_bits) {
  return branch_capacity(distance_bits) - 1;
}

double density(const TrieNode& node) {
  return std::ldexp(static_cast<double>(node.leaf_count()),
                    -(kMaxMask - node.prefix().mask_len()));
}

SummaryConfig SummaryConfig::from_granularity(int granularity, int min_subnet_mask) {
  check_min_subnet_mask(min_subnet_mask);
  return SummaryConfig(granularity, thresholds_for(granularity), min_subnet_mask);
}

SummaryConfig SummaryConfig::from_thresholds(int distance_bits, double density,
                                             int min_subnet_mask) {
  check_min_subnet_mask(min_subnet_mask);
  if (distance_bits < 0) {
    throw ConfigError("distance threshold " + std::to_string(distance_bits) +
                      " is negative");
  }
  if (!(density > 0.0 && density <= 1.0)) {
    throw ConfigError("density threshold must lie in (0, 1]");
  }
  return SummaryConfig(std::nullopt, Thresholds{distance_bits, density},
                       min_subnet_mask);
}

double SummaryResult::compression_rate() const {
  if (original_size == 0) return std::numeric_limits<double>::quiet_NaN();
  return static_cast<double>(prefixes.size()) / static_cast<double>(original_size);
}

SummaryResult summarize(const PatriciaTree& tree, const SummaryConfig& config) {
  SummaryResult result;
  result.original_size = tree.size();
  if (tree.size() == 0) return result;
  select(tree.root(), config, result.prefixes);
  std::sort(result.prefixes.begin(), result.prefixes.end());
  return result;
}

}  // namespace ipsumm
