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

#include "ipsumm/registry_io.hpp"

#include <fstream>
#include <set>
#include <string>

#include "ipsumm/error.hpp"

namespace ipsumm {
namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n\f\v";
  const auto first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kSpace);
  return s.substr(first, last - first + 1);
}

bool is_skippable(std::string_view line) {
  return line.empty() || line.front() == '#';
}

std::ifstream open_for_reading(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  return in;
}

std::string location(std::string_view source, std::size_t line_no) {
  return std::string(source) + ":" + std::to_string(line_no) + ": ";
}

}  // namespace

std::vector<Ipv4Address> parse_address_list(std::istream& in,
                                            std::string_view source) {
  std::vector<Ipv4Address> out;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (is_skippable(line)) continue;
    try {
      out.push_back(Ipv4Address::parse(line));
    } catch (const ParseError& e) {
      throw ParseError(location(source, line_no) + e.what());
    }
  }
  if (in.bad()) throw IoError("error reading '" + std::string(source) + "'");
  return out;
}

std::vector<Ipv4Address> read_address_file(const std::filesystem::path& path) {
  std::ifstream in = open_for_reading(path);
  return parse_address_list(in, path.string());
}

RegistrySet read_registry_file(const std::filesystem::path& path) {
  return RegistrySet(path.stem().string(), read_address_file(path));
}

std::vector<RegistrySet> read_manifest(const std::filesystem::path& path) {
  std::ifstream in = open_for_reading(path);
  const std::filesystem::path base = path.parent_path();
  std::vector<RegistrySet> registries;
  std::set<std::string> names;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (is_skippable(line)) continue;
    const auto eq = line.find('=');
    const std::string name(trim(line.substr(0, eq)));
    if (eq == std::string_view::npos || name.empty() ||
        trim(line.substr(eq + 1)).empty()) {
      throw ParseError(location(path.string(), line_no) +
                       "expected 'name=path', got '" + std::string(line) + "'");
    }
    if (!names.insert(name).second) {
      throw ConfigError(location(path.string(), line_no) +
                        "duplicate registry name '" + name + "'");
    }
    std::filesystem::path file(std::string(trim(line.substr(eq + 1))));
    if (file.is_relative()) file = base / file;
    registries.emplace_back(name, read_address_file(file));
  }
  return registries;
}

}  // namespace ipsumm
