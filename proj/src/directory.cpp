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

#include "ipsumm/directory.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <set>
#include <thread>

#include "ipsumm/error.hpp"
#include "ipsumm/patricia.hpp"

namespace ipsumm {
namespace {

void check_registries(std::span<const RegistrySet> registries) {
  if (registries.empty()) throw ConfigError("no registries given");
  std::set<std::string_view> names;
  for (const RegistrySet& r : registries) {
    if (!names.insert(r.name).second) {
      throw ConfigError("duplicate registry name '" + r.name + "'");
    }
  }
}

std::size_t union_size(std::span<const RegistrySet> registries) {
  std::vector<Ipv4Address> all;
  for (const RegistrySet& r : registries) {
    all.insert(all.end(), r.addresses.begin(), r.addresses.end());
  }
  std::sort(all.begin(), all.end());
  return static_cast<std::size_t>(std::unique(all.begin(), all.end()) - all.begin());
}

RegistrySummary summarize_registry(const RegistrySet& registry,
                                   const SummaryConfig& config) {
  PatriciaTree tree = PatriciaTree::build(registry.addresses);
  return {registry.name, summarize(tree, config)};
}

}  // namespace

RegistrySet::RegistrySet(std::string name, std::vector<Ipv4Address> addresses)
    : name(std::move(name)), addresses(std::move(addresses)) {
  std::sort(this->addresses.begin(), this->addresses.end());
  this->addresses.erase(std::unique(this->addresses.begin(), this->addresses.end()),
                        this->addresses.end());
}

double MergedSummary::compression_rate() const {
  if (total_original == 0) return std::numeric_limits<double>::quiet_NaN();
  return static_cast<double>(merged_size()) / static_cast<double>(total_original);
}

MergedSummary merge_parts(std::vector<RegistrySummary> parts,
                          std::size_t distinct_original) {
  MergedSummary merged;
  std::size_t concatenated = 0;
  for (const RegistrySummary& part : parts) {
    merged.total_original += part.result.original_size;
    merged.merged_prefixes.insert(merged.merged_prefixes.end(),
                                  part.result.prefixes.begin(),
                                  part.result.prefixes.end());
    concatenated += part.result.prefixes.size();
  }
  std::sort(merged.merged_prefixes.begin(), merged.merged_prefixes.end());
  merged.merged_prefixes.erase(
      std::unique(merged.merged_prefixes.begin(), merged.merged_prefixes.end()),
      merged.merged_prefixes.end());
  merged.duplicates_removed = concatenated - merged.merged_prefixes.size();
  merged.distinct_original = distinct_original;
  merged.per_registry = std::move(parts);
  return merged;
}

MergedSummary publish_and_merge(std::span<const RegistrySet> registries,
                                const SummaryConfig& config, unsigned jobs) {
  check_registries(registries);
  std::vector<RegistrySummary> parts(registries.size());

  const std::size_t workers =
      std::clamp<std::size_t>(jobs, 1, registries.size());
  if (workers == 1) {
    for (std::size_t i = 0; i < registries.size(); ++i) {
      parts[i] = summarize_registry(registries[i], config);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (std::size_t i = next++; i < registries.size(); i = next++) {
              parts[i] = summarize_registry(registries[i], config);
            }
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (const std::exception_ptr& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  return merge_parts(std::move(parts), union_size(registries));
}

MergedSummary summarize_single(std::span<const RegistrySet> registries,
                               const SummaryConfig& config) {
  check_registries(registries);
  PatriciaTree tree;
  std::size_t total = 0;
  for (const RegistrySet& r : registries) {
    total += r.addresses.size();
    for (Ipv4Address addr : r.addresses) tree.insert(addr);
  }
  std::vector<RegistrySummary> parts;
  parts.push_back({"single", summarize(tree, config)});
  MergedSummary merged = merge_parts(std::move(parts), tree.size());
  merged.total_original = total;
  return merged;
}

double decrease(const MergedSummary& distributed, const MergedSummary& single) {
  if (distributed.merged_size() == 0) return std::numeric_limits<double>::quiet_NaN();
  return 1.0 - static_cast<double>(single.merged_size()) /
                   static_cast<double>(distributed.merged_size());
}

}  // namespace ipsumm
