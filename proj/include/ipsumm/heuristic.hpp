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
#include <vector>

#include "ipsumm/ipv4.hpp"
#include "ipsumm/patricia.hpp"

namespace ipsumm {

inline constexpr int kMinGranularity = 0;
inline constexpr int kMaxGranularity = 3;
inline constexpr int kDefaultMinSubnetMask = 8;

struct Thresholds {
  int distance_bits;
  double density;

  bool operator==(const Thresholds&) const = default;
};

// Fixed granularity table:
//   0 -> (4, 1e-5)   1 -> (8, 1e-6)   2 -> (12, 1e-7)   3 -> (16, 1e-8)
// Throws ConfigError outside [0, 3].
Thresholds thresholds_for(int granularity);

// Regression curves through the table. Documentation only; runtime
// thresholds always come from thresholds_for().
double interpolated_distance(double granularity);  // 4x + 4
double interpolated_density(double granularity);   // 1e-5 * e^(-2.303x)

// Mask bits between a node and one of its direct children (always >= 1).
int distance(const TrieNode& parent, const TrieNode& child);

// Possible addresses in a branch spanning `distance_bits`: 2^(d-1).
// Throws std::invalid_argument for d outside [1, 32].
std::uint64_t branch_capacity(int distance_bits);

// Addresses in the branch besides the child itself: 2^(d-1) - 1.
std::uint64_t vacant_in_branch(int distance_bits);

// leaf_count / 2^(32 - mask_len); 1.0 for a leaf.
double density(const TrieNode& node);

// Thresholds and mask floor used by summarize(). Built either from a
// granularity or from explicit administrator thresholds.
class SummaryConfig {
 public:
  // Throws ConfigError for granularity outside [0, 3] or a mask outside
  // [0, 32].
  static SummaryConfig from_granularity(int granularity,
                                        int min_subnet_mask = kDefaultMinSubnetMask);

  // distance_bits must be >= 0 and density in (0, 1].
  static SummaryConfig from_thresholds(int distance_bits, double density,
                                       int min_subnet_mask = kDefaultMinSubnetMask);

  // Empty when built from explicit thresholds.
  std::optional<int> granularity() const { return granularity_; }
  int min_subnet_mask() const { return min_subnet_mask_; }
  int distance_threshold() const { return thresholds_.distance_bits; }
  double density_threshold() const { return thresholds_.density; }
  const Thresholds& thresholds() const { return thresholds_; }

 private:
  SummaryConfig(std::optional<int> granularity, Thresholds thresholds,
                int min_subnet_mask)
      : granularity_(granularity),
        thresholds_(thresholds),
        min_subnet_mask_(min_subnet_mask) {}

  std::optional<int> granularity_;
  Thresholds thresholds_;
  int min_subnet_mask_;
};

struct SummaryResult {
  // Sorted ascending; pairwise disjoint.
  std::vector<Prefix> prefixes;
  std::size_t original_size = 0;

  std::size_t summarized_size() const { return prefixes.size(); }
  // summarized / original; NaN when the input was empty.
  double compression_rate() const;

  bool operator==(const SummaryResult&) const = default;
};

// Walks the trie root first, 0-side before 1-side, and picks summarizing
// nodes:
//   - a leaf is always emitted;
//   - a node with mask <= min_subnet_mask is descended;
//   - a node is descended if any child lies more than distance_threshold
//     bits below it, or if any child's density is below density_threshold;
//   - otherwise the node is emitted and its subtree pruned.
// The trie is not modified.
SummaryResult summarize(const PatriciaTree& tree, const SummaryConfig& config);

}  // namespace ipsumm
