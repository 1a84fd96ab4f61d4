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

#include "ipsumm/patricia.hpp"

#include <sstream>

namespace ipsumm {

PatriciaTree::PatriciaTree() : root_(std::make_unique<TrieNode>(Prefix{})) {}

PatriciaTree PatriciaTree::build(std::span<const Ipv4Address> addresses) {
  PatriciaTree tree;
  for (Ipv4Address addr : addresses) tree.insert(addr);
  return tree;
}

bool PatriciaTree::insert(Ipv4Address addr) {
  const Prefix leaf = Prefix::host(addr);
  std::vector<TrieNode*> path;
  TrieNode* node = root_.get();

  for (;;) {
    path.push_back(node);
    std::unique_ptr<TrieNode>& slot = node->children_[leaf.bit(node->prefix_.mask_len())];
    if (!slot) {
      // Only reachable at the root: every other internal node has both
      // children.
      slot = std::make_unique<TrieNode>(leaf, 1);
      ++node_count_;
      break;
    }
    if (slot->prefix_.contains(leaf)) {
      if (slot->is_leaf()) return false;
      node = slot.get();
      continue;
    }
    // leaf diverges from this edge: splice in their common prefix.
    const Prefix fork = common_prefix(slot->prefix_, leaf);
    auto parent = std::make_unique<TrieNode>(fork, slot->leaf_count_ + 1);
    const int existing_side = slot->prefix_.bit(fork.mask_len());
    parent->children_[existing_side] = std::move(slot);
    parent->children_[1 - existing_side] = std::make_unique<TrieNode>(leaf, 1);
    slot = std::move(parent);
    node_count_ += 2;
    break;
  }
  for (TrieNode* ancestor : path) ++ancestor->leaf_count_;
  return true;
}

namespace {

void dump_node(const TrieNode& node, int depth, std::ostringstream& out) {
  out << std::string(static_cast<std::size_t>(depth) * 2, ' ')
      << node.prefix().to_string() << " leaves=" << node.leaf_count() << '\n';
  for (int side = 0; side < 2; ++side) {
    if (const TrieNode* c = node.child(side)) dump_node(*c, depth + 1, out);
  }
}

void validate_node(const TrieNode& node, bool is_root,
                   std::vector<std::string>& problems) {
  const std::string label = node.prefix().to_string();
  const int children = node.child_count();

  if (node.is_leaf()) {
    if (children != 0) problems.push_back(label + ": leaf has children");
    if (node.leaf_count() != 1) problems.push_back(label + ": leaf count != 1");
    return;
  }
  if (!is_root && children != 2) {
    problems.push_back(label + ": internal node without two children");
  }

  std::size_t sum = 0;
  for (int side = 0; side < 2; ++side) {
    const TrieNode* c = node.child(side);
    if (!c) continue;
    sum += c->leaf_count();
    if (!node.prefix().contains(c->prefix()) ||
        c->prefix().mask_len() <= node.prefix().mask_len()) {
      problems.push_back(label + ": child " + c->prefix().to_string() +
                         " not strictly inside");
    } else if (c->prefix().bit(node.prefix().mask_len()) != side) {
      problems.push_back(label + ": child " + c->prefix().to_string() +
                         " on wrong side");
    }
    validate_node(*c, false, problems);
  }
  if (sum != node.leaf_count()) {
    problems.push_back(label + ": leaf count " +
                       std::to_string(node.leaf_count()) +
                       " != sum of children " + std::to_string(sum));
  }
}

}  // namespace

std::string PatriciaTree::dump() const {
  std::ostringstream out;
  dump_node(*root_, 0, out);
  return out.str();
}

std::vector<std::string> PatriciaTree::validate() const {
  std::vector<std::string> problems;
  if (root_->prefix() != Prefix{}) problems.push_back("root is not 0.0.0.0/0");
  validate_node(*root_, true, problems);
  return problems;
}

}  // namespace ipsumm
