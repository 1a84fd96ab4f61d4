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

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ipsumm {

// Longest IPv4 mask; a prefix of this length is a single host.
inline constexpr int kMaxMask = 32;

// A 32-bit IPv4 host address. Bit 31 is the leftmost bit of the dotted quad.
class Ipv4Address {
 public:
  constexpr Ipv4Address() = default;
  constexpr explicit Ipv4Address(std::uint32_t value) : value_(value) {}

  // Accepts exactly four decimal octets (0-255, at most three digits each)
  // separated by dots. Throws ParseError naming the offending token.
  static Ipv4Address parse(std::string_view text);

  constexpr std::uint32_t value() const { return value_; }
  std::string to_string() const;

  auto operator<=>(const Ipv4Address&) const = default;

 private:
  std::uint32_t value_ = 0;
};

// A normalized CIDR subnet: host bits below the mask are always zero.
//
// Ordering is numeric on the network bits, then on the mask length, so a
// sorted list of disjoint prefixes is in address order.
class Prefix {
 public:
  // The universal root 0.0.0.0/0.
  constexpr Prefix() = default;

  // Throws ConfigError if mask_len is outside [0, 32] or if bits carries a
  // 1 below the mask.
  Prefix(std::uint32_t bits, int mask_len);

  // Zeroes the host bits of addr instead of rejecting them.
  static Prefix covering(Ipv4Address addr, int mask_len);
  static Prefix host(Ipv4Address addr) { return Prefix(addr.value(), kMaxMask); }

  // "a.b.c.d/n" with n in [0, 32] and no whitespace.
  static Prefix parse(std::string_view text);

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int mask_len() const { return mask_len_; }
  constexpr bool is_host() const { return mask_len_ == kMaxMask; }

  // Throws ConfigError unless is_host().
  Ipv4Address address() const;

  // 2^(32 - mask_len).
  constexpr std::uint64_t address_count() const {
    return std::uint64_t{1} << (kMaxMask - mask_len_);
  }

  // Value (0 or 1) of bit `position`, counted from the most significant bit.
  constexpr int bit(int position) const {
    return static_cast<int>((bits_ >> (kMaxMask - 1 - position)) & 1u);
  }

  bool contains(const Prefix& other) const;
  bool contains(Ipv4Address addr) const { return contains(host(addr)); }

  std::string to_string() const;

  auto operator<=>(const Prefix&) const = default;

  static constexpr std::uint32_t netmask(int mask_len) {
    return mask_len == 0 ? 0u : ~std::uint32_t{0} << (kMaxMask - mask_len);
  }

 private:
  std::uint32_t bits_ = 0;
  int mask_len_ = 0;
};

inline bool contains(const Prefix& outer, const Prefix& inner) {
  return outer.contains(inner);
}

// Longest prefix containing both a and b.
Prefix common_prefix(const Prefix& a, const Prefix& b);

std::ostream& operator<<(std::ostream& os, const Ipv4Address& addr);
std::ostream& operator<<(std::ostream& os, const Prefix& prefix);

}  // namespace ipsumm
