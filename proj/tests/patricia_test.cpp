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

#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "support/oracle.hpp"
#include "support/workload.hpp"

using ipsumm::Ipv4Address;
using ipsumm::PatriciaTree;
using ipsumm::Prefix;
using ipsumm::TrieNode;

namespace {

Ipv4Address A(const char* text) { return Ipv4Address::parse(text); }

std::vector<Ipv4Address> four_hosts() {
  return {A("10.10.0.1"), A("10.10.0.2"), A("10.10.0.3"), A("10.10.0.4")};
}

const TrieNode* find(const TrieNode& node, const Prefix& p) {
  if (node.prefix() == p) return &node;
  for (int side = 0; side < 2; ++side) {
    if (const TrieNode* c = node.child(side)) {
      if (const TrieNode* hit = find(*c, p)) return hit;
    }
  }
  return nullptr;
}

std::size_t internal_nodes(const TrieNode& node) {
  if (node.is_leaf()) return 0;
  std::size_t n = 1;
  for (int side = 0; side < 2; ++side) {
    if (const TrieNode* c = node.child(side)) n += internal_nodes(*c);
  }
  return n;
}

}  // namespace

TEST_SUITE("patricia") {

TEST_CASE("four-host construction step by step") {
  PatriciaTree tree;
  CHECK(tree.dump() == "0.0.0.0/0 leaves=0\n");

  CHECK(tree.insert(A("10.10.0.1")));
  CHECK(tree.dump() ==
        "0.0.0.0/0 leaves=1\n"
        "  10.10.0.1/32 leaves=1\n");
  CHECK(tree.root().child_count() == 1);

  CHECK(tree.insert(A("10.10.0.2")));
  CHECK(tree.dump() ==
        "0.0.0.0/0 leaves=2\n"
        "  10.10.0.0/30 leaves=2\n"
        "    10.10.0.1/32 leaves=1\n"
        "    10.10.0.2/32 leaves=1\n");

  CHECK(tree.insert(A("10.10.0.3")));
  CHECK(tree.dump() ==
        "0.0.0.0/0 leaves=3\n"
        "  10.10.0.0/30 leaves=3\n"
        "    10.10.0.1/32 leaves=1\n"
        "    10.10.0.2/31 leaves=2\n"
        "      10.10.0.2/32 leaves=1\n"
        "      10.10.0.3/32 leaves=1\n");

  CHECK(tree.insert(A("10.10.0.4")));
  const std::string fig2d =
      "0.0.0.0/0 leaves=4\n"
      "  10.10.0.0/29 leaves=4\n"
      "    10.10.0.0/30 leaves=3\n"
      "      10.10.0.1/32 leaves=1\n"
      "      10.10.0.2/31 leaves=2\n"
      "        10.10.0.2/32 leaves=1\n"
      "        10.10.0.3/32 leaves=1\n"
      "    10.10.0.4/32 leaves=1\n";
  CHECK(tree.dump() == fig2d);
  CHECK(tree.size() == 4);
  CHECK(tree.node_count() == 8);
  CHECK(tree.validate().empty());

  SUBCASE("duplicate insertion leaves the tree unchanged") {
    CHECK_FALSE(tree.insert(A("10.10.0.4")));
    CHECK_FALSE(tree.insert(A("10.10.0.2")));
    CHECK(tree.dump() == fig2d);
    CHECK(tree.size() == 4);
    CHECK(tree.node_count() == 8);
  }

  SUBCASE("leaf counts") {
    CHECK(leaf_count_below(tree.root()) == 4);
    CHECK(leaf_count_below(*find(tree.root(), Prefix::parse("10.10.0.0/30"))) == 3);
    CHECK(leaf_count_below(*find(tree.root(), Prefix::parse("10.10.0.2/31"))) == 2);
    CHECK(leaf_count_below(*find(tree.root(), Prefix::parse("10.10.0.3/32"))) == 1);
  }
}

TEST_CASE("build is order independent") {
  auto forward = four_hosts();
  auto reversed = forward;
  std::reverse(reversed.begin(), reversed.end());
  CHECK(PatriciaTree::build(forward).dump() == PatriciaTree::build(reversed).dump());
  CHECK(PatriciaTree::build(std::vector<Ipv4Address>{}).size() == 0);
}

TEST_CASE("root becomes an ordinary binary node with two top-level branches") {
  const auto tree = PatriciaTree::build(std::vector{A("1.0.0.1"), A("200.0.0.1"), A("1.0.0.2")});
  CHECK(tree.root().child_count() == 2);
  CHECK(tree.root().child(0)->prefix() == Prefix::parse("1.0.0.0/30"));
  CHECK(tree.root().child(1)->prefix() == Prefix::parse("200.0.0.1/32"));
  CHECK(tree.validate().empty());
}

TEST_CASE("extreme addresses") {
  const auto tree = PatriciaTree::build(std::vector{A("0.0.0.0"), A("255.255.255.255")});
  CHECK(tree.dump() ==
        "0.0.0.0/0 leaves=2\n"
        "  0.0.0.0/32 leaves=1\n"
        "  255.255.255.255/32 leaves=1\n");
}

TEST_CASE("structural invariants hold after every insertion") {
  ipsumm::testing::Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto addrs = ipsumm::testing::random_set(
        rng, static_cast<std::size_t>(ipsumm::testing::uniform_int(rng, 1, 120)),
        ipsumm::testing::shape_for(static_cast<std::size_t>(trial)));
    PatriciaTree tree;
    for (Ipv4Address a : addrs) {
      tree.insert(a);
      const auto problems = tree.validate();
      REQUIRE_MESSAGE(problems.empty(), problems.front());
    }
    CHECK(tree.size() == addrs.size());
    // binary trie: at most n - 1 non-root internal nodes
    CHECK(internal_nodes(tree.root()) - 1 <= addrs.size() - 1);
    CHECK(tree.node_count() == internal_nodes(tree.root()) + addrs.size());
  }
}

TEST_CASE("permutation invariance") {
  ipsumm::testing::Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    auto addrs = ipsumm::testing::random_set(
        rng, static_cast<std::size_t>(ipsumm::testing::uniform_int(rng, 1, 64)),
        ipsumm::testing::shape_for(static_cast<std::size_t>(trial)));
    const std::string expected = PatriciaTree::build(addrs).dump();
    for (int perm = 0; perm < 20; ++perm) {
      std::shuffle(addrs.begin(), addrs.end(), rng);
      REQUIRE(PatriciaTree::build(addrs).dump() == expected);
    }
  }
}

TEST_CASE("matches brute-force common-prefix construction") {
  ipsumm::testing::Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    auto addrs = ipsumm::testing::random_set(
        rng, static_cast<std::size_t>(ipsumm::testing::uniform_int(rng, 0, 64)),
        ipsumm::testing::shape_for(static_cast<std::size_t>(trial)));
    // Duplicates exercise set semantics in both models.
    if (!addrs.empty()) addrs.push_back(addrs.front());
    const ipsumm::testing::OracleTree oracle(addrs);
    REQUIRE(PatriciaTree::build(addrs).dump() == oracle.dump());
  }
}

}  // TEST_SUITE
