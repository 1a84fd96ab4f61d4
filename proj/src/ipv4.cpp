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

#include "ipsumm/ipv4.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <ostream>

#include "ipsumm/error.hpp"

namespace ipsumm {
namespace {

std::string quoted(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  out += '\'';
  out += s;
  out += '\'';
  return out;
}

// Parses one octet token; throws with the token named on failure.
std::uint32_t parse_octet(std::string_view token, std::string_view text) {
  if (token.empty()) {
    throw ParseError("invalid address " + quoted(text) + ": empty octet");
  }
  if (token.size() > 3 || !std::all_of(token.begin(), token.end(), [](char c) {
        return c >= '0' && c <= '9';
      })) {
    throw ParseError("invalid address " + quoted(text) + ": bad octet " +
                     quoted(token));
  }
  unsigned value = 0;
  std::from_chars(token.data(), token.data() + token.size(), value);
  if (value > 255) {
    throw ParseError("invalid address " + quoted(text) + ": octet " +
                     quoted(token) + " out of range");
  }
  return value;
}

}  // namespace

Ipv4Address Ipv4Address::parse(std::string_view text) {
  std::uint32_t value = 0;
  std::size_t start = 0;
  for (int i = 0; i < 4; ++i) {
    std::size_t dot = text.find('.', start);
    if ((i < 3) != (dot != std::string_view::npos)) {
      throw ParseError("invalid address " + quoted(text) +
                       ": expected four dot-separated octets");
    }
    std::string_view token = text.substr(start, dot == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : dot - start);
    value = (value << 8) | parse_octet(token, text);
    start = dot + 1;
  }
  return Ipv4Address(value);
}

std::string Ipv4Address::to_string() const {
  std::array<char, 16> buf{};
  char* p = buf.data();
  char* end = buf.data() + buf.size();
  for (int shift = 24; shift >= 0; shift -= 8) {
    p = std::to_chars(p, end, (value_ >> shift) & 0xffu).ptr;
    if (shift != 0) *p++ = '.';
  }
  return std::string(buf.data(), p);
}

Prefix::Prefix(std::uint32_t bits, int mask_len) {
  if (mask_len < 0 || mask_len > kMaxMask) {
    throw ConfigError("mask length " + std::to_string(mask_len) +
                      " outside [0, 32]");
  }
  if ((bits & ~netmask(mask_len)) != 0) {
    throw ConfigError("prefix " + Ipv4Address(bits).to_string() + "/" +
                      std::to_string(mask_len) + " has host bits set");
  }
  bits_ = bits;
  mask_len_ = mask_len;
}

Prefix Prefix::covering(Ipv4Address addr, int mask_len) {
  if (mask_len < 0 || mask_len > kMaxMask) {
    throw ConfigError("mask length " + std::to_string(mask_len) +
                      " outside [0, 32]");
  }
  return Prefix(addr.value() & netmask(mask_len), mask_len);
}

Prefix Prefix::parse(std::string_view text) {
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw ParseError("invalid prefix " + quoted(text) + ": missing '/'");
  }
  Ipv4Address addr = Ipv4Address::parse(text.substr(0, slash));
  std::string_view len = text.substr(slash + 1);
  int mask_len = -1;
  auto [ptr, ec] = std::from_chars(len.data(), len.data() + len.size(), mask_len);
  if (len.empty() || len.size() > 2 || ec != std::errc{} ||
      ptr != len.data() + len.size() || mask_len < 0 || mask_len > kMaxMask) {
    throw ParseError("invalid prefix " + quoted(text) + ": bad mask length " +
                     quoted(len));
  }
  if ((addr.value() & ~netmask(mask_len)) != 0) {
    throw ParseError("invalid prefix " + quoted(text) + ": host bits set");
  }
  return Prefix(addr.value(), mask_len);
}

Ipv4Address Prefix::address() const {
  if (!is_host()) {
    throw ConfigError("prefix " + to_string() + " is not a host address");
  }
  return Ipv4Address(bits_);
}

bool Prefix::contains(const Prefix& other) const {
  return mask_len_ <= other.mask_len_ &&
         (other.bits_ & netmask(mask_len_)) == bits_;
}

std::string Prefix::to_string() const {
  return Ipv4Address(bits_).to_string() + "/" + std::to_string(mask_len_);
}

Prefix common_prefix(const Prefix& a, const Prefix& b) {
  int agree = std::countl_zero(a.bits() ^ b.bits());
  int len = std::min({agree, a.mask_len(), b.mask_len()});
  return Prefix(a.bits() & Prefix::netmask(len), len);
}

std::ostream& operator<<(std::ostream& os, const Ipv4Address& addr) {
  return os << addr.to_string();
}

std::ostream& operator<<(std::ostream& os, const Prefix& prefix) {
  return os << prefix.to_string();
}

}  // namespace ipsumm
