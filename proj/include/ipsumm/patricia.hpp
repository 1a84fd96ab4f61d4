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

#include <array>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ipsumm/ipv4.hpp"

namespace ipsumm {

// A node of the PATRICIA trie. Internal nodes are the common prefixes of
// the addresses below them; leaves are the /32 host addresses.
class TrieNode {
 public:
  explicit TrieNode(Prefix prefix, std::size_t leaf_count = 0)
      : prefix_(prefix), leaf_count_(leaf_count) {}

  const Prefix& prefix() const { return prefix_; }
  bool is_leaf() const { return prefix_.is_host(); }

  // Number of /32 leaves in this subtree. A leaf counts itself.
  std::size_t leaf_count() const { return leaf_count_; }

  // side 0 holds the child whose bit at prefix().mask_len() is 0.
  const TrieNode* child(int side) const { return children_[side].get(); }
  int child_count() const {
    return static_cast<int>(children_[0] != nullptr) +
           static_cast<int>(children_[1] != nullptr);
  }

 private:
  friend class PatriciaTree;

  Prefix prefix_;
  std::size_t leaf_count_;
  std::array<std::unique_ptr<TrieNode>, 2> children_;
};

inline std::size_t leaf_count_below(const TrieNode& node) {
  return node.leaf_count();
}

// Binary radix trie over a set of IPv4 host addresses, rooted at 0.0.0.0/0.
//
// Every node except the root has zero or two children; the root may have a
// single child until a second top-level branch appears. The shape depends
// only on the address set, not on insertion order. A finished tree is
// immutable and safe to read from several threads.
class PatriciaTree {
 public:
  PatriciaTree();
  PatriciaTree(PatriciaTree&&) noexcept = default;
  PatriciaTree& operator=(PatriciaTree&&) noexcept = default;
  PatriciaTree(const PatriciaTree&) = delete;
  PatriciaTree& operator=(const PatriciaTree&) = delete;

  static PatriciaTree build(std::span<const Ipv4Address> addresses);

  // Returns false, leaving the tree untouched, if addr is already present.
  bool insert(Ipv4Address addr);

  const TrieNode& root() const { return *root_; }
  // Distinct leaves.
  std::size_t size() const { return root_->leaf_count(); }
  // All nodes including the root and the leaves.
  std::size_t node_count() const { return node_count_; }

  // One node per line in pre-order (0-side first), two spaces of indent per
  // depth: "<prefix> leaves=<n>".
  std::string dump() const;

  // Describes each violated structural invariant; empty for a valid tree.
  std::vector<std::string> validate() const;

 private:
  std::unique_ptr<TrieNode> root_;
  std::size_t node_count_ = 1;
};

}  // namespace ipsumm
