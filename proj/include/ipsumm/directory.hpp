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
#include <span>
#include <string>
#include <vector>

#include "ipsumm/heuristic.hpp"
#include "ipsumm/ipv4.hpp"

namespace ipsumm {

// Address set held by one lower-level registry.
struct RegistrySet {
  std::string name;
  // Sorted and deduplicated.
  std::vector<Ipv4Address> addresses;

  RegistrySet() = default;
  RegistrySet(std::string name, std::vector<Ipv4Address> addresses);
};

struct RegistrySummary {
  std::string name;
  SummaryResult result;
};

// What the upper-level registry ends up holding.
struct MergedSummary {
  std::vector<RegistrySummary> per_registry;
  // Concatenation of the per-registry prefixes, sorted, exact duplicates
  // removed. Prefixes from different registries may still overlap.
  std::vector<Prefix> merged_prefixes;
  // Sum of per-registry sizes; an address held by two registries counts
  // twice.
  std::size_t total_original = 0;
  // Size of the union of all registries.
  std::size_t distinct_original = 0;
  // How many exact-duplicate prefixes the merge dropped.
  std::size_t duplicates_removed = 0;

  std::size_t merged_size() const { return merged_prefixes.size(); }
  // merged_size / total_original; NaN when total_original is 0.
  double compression_rate() const;
};

// Concatenates already summarized parts. No re-summarization happens here.
MergedSummary merge_parts(std::vector<RegistrySummary> parts,
                          std::size_t distinct_original);

// Summarizes every registry on its own trie and merges the results.
// Up to `jobs` registries are processed concurrently; the result does not
// depend on it. Throws ConfigError for an empty list or repeated names.
MergedSummary publish_and_merge(std::span<const RegistrySet> registries,
                                const SummaryConfig& config, unsigned jobs = 1);

// Summarizes the union of all registries on one trie. The single part is
// named "single"; total_original still counts per registry so the two
// modes are comparable.
MergedSummary summarize_single(std::span<const RegistrySet> registries,
                               const SummaryConfig& config);

// 1 - single / distributed merged size; NaN when distributed is empty.
double decrease(const MergedSummary& distributed, const MergedSummary& single);

}  // namespace ipsumm
