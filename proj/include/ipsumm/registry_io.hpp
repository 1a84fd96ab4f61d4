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

#include <filesystem>
#include <istream>
#include <string_view>
#include <vector>

#include "ipsumm/directory.hpp"
#include "ipsumm/ipv4.hpp"

namespace ipsumm {

// Address files: one dotted quad per line. Surrounding whitespace is
// ignored, as are blank lines and lines starting with '#'. A bad line
// raises ParseError as "<source>:<line>: <reason>". Duplicates are kept;
// the trie collapses them.
std::vector<Ipv4Address> parse_address_list(std::istream& in,
                                            std::string_view source);
std::vector<Ipv4Address> read_address_file(const std::filesystem::path& path);

// A registry named after the file stem.
RegistrySet read_registry_file(const std::filesystem::path& path);

// Manifest lines are "name=path"; relative paths resolve against the
// manifest's directory. Comments and blank lines as for address files.
// Repeated names raise ConfigError.
std::vector<RegistrySet> read_manifest(const std::filesystem::path& path);

}  // namespace ipsumm
