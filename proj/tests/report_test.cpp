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

#include "ipsumm/report.hpp"

#include <clocale>
#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "ipsumm/error.hpp"
#include "ipsumm/patricia.hpp"
#include "json.hpp"
#include "support/workload.hpp"

using ipsumm::Format;
using ipsumm::Ipv4Address;
using ipsumm::MergedSummary;
using ipsumm::PatriciaTree;
using ipsumm::Prefix;
using ipsumm::SummaryConfig;
using ipsumm::SummaryResult;

namespace {

Ipv4Address A(const char* text) { return Ipv4Address::parse(text); }
Prefix P(const char* text) { return Prefix::parse(text); }

ipsumm::SummaryReport four_host_report(const SummaryConfig& cfg) {
  const auto tree = PatriciaTree::build(
      std::vector{A("10.10.0.1"), A("10.10.0.2"), A("10.10.0.3"), A("10.10.0.4")});
  return {"fig2", {ipsumm::make_stats("fig2", summarize(tree, cfg), cfg)}};
}

// Nine parts shaped like the published distributed run at granularity 0.
ipsumm::SimulationReport nine_registry_report() {
  const std::vector<std::pair<const char*, std::pair<std::size_t, std::size_t>>> rows{
      {"APAN", {104, 19}},  {"ESnet", {618, 58}},    {"FCCN", {43, 4}},
      {"GARR", {163, 2}},   {"GEANT", {30, 5}},      {"Internet2", {282, 86}},
      {"Indiana", {79, 14}}, {"PIONIER", {27, 5}},   {"SWITCH", {214, 15}}};
  std::vector<ipsumm::RegistrySummary> parts;
  std::uint32_t base = 0x01000000u;
  for (const auto& [name, sizes] : rows) {
    SummaryResult r;
    r.original_size = sizes.first;
    for (std::size_t i = 0; i < sizes.second; ++i) r.prefixes.emplace_back(base++, 32);
    parts.push_back({name, std::move(r)});
  }
  const auto cfg = SummaryConfig::from_granularity(0, 8);
  return {{{cfg, ipsumm::merge_parts(std::move(parts), 1560), std::nullopt}}};
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("compression rate") {
  CHECK(ipsumm::compression_rate(618, 58) == 58.0 / 618.0);
  CHECK(ipsumm::compression_rate(618, 58) == doctest::Approx(0.09385113).epsilon(1e-7));
  CHECK(ipsumm::compression_rate(163, 2) == doctest::Approx(0.01226994).epsilon(1e-6));
  CHECK(ipsumm::compression_rate(37, 37) == 1.0);
  CHECK(std::isnan(ipsumm::compression_rate(0, 0)));
}

TEST_CASE("claimed addresses and precision") {
  CHECK(ipsumm::claimed_addresses(std::vector{P("172.16.0.0/20")}) == 4096);
  CHECK(ipsumm::claimed_addresses(std::vector{P("1.2.3.4/32")}) == 1);
  CHECK(ipsumm::claimed_addresses(std::vector<Prefix>{}) == 0);
  CHECK(ipsumm::claimed_addresses(std::vector{P("0.0.0.0/0")}) == (std::uint64_t{1} << 32));
  const auto fig = std::vector{P("10.10.0.0/29")};
  CHECK(ipsumm::claimed_addresses(fig) == 8);
  CHECK(ipsumm::precision(4, 8) == 0.5);
  CHECK(std::isnan(ipsumm::precision(0, 0)));

  const std::vector<Prefix> a{P("10.0.0.0/24"), P("10.0.1.5/32")};
  const std::vector<Prefix> b{P("10.0.0.0/24"), P("192.168.0.0/30")};
  std::vector<Prefix> both = a;
  both.insert(both.end(), b.rbegin(), b.rend());
  CHECK(ipsumm::claimed_addresses(both) ==
        ipsumm::claimed_addresses(a) + ipsumm::claimed_addresses(b));
}

TEST_CASE("precision falls as granularity coarsens") {
  ipsumm::testing::Rng rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    const auto addrs = ipsumm::testing::random_set(
        rng, static_cast<std::size_t>(ipsumm::testing::uniform_int(rng, 1, 150)),
        ipsumm::testing::shape_for(static_cast<std::size_t>(trial)));
    const auto tree = PatriciaTree::build(addrs);
    double previous = 2.0;
    for (int g = 0; g <= 3; ++g) {
      const auto cfg = SummaryConfig::from_granularity(g, 8);
      const auto stats = ipsumm::make_stats("r", summarize(tree, cfg), cfg);
      REQUIRE(stats.precision > 0.0);
      REQUIRE(stats.precision <= 1.0);
      REQUIRE(stats.precision <= previous);
      previous = stats.precision;
    }
  }
}

TEST_CASE("format names") {
  CHECK(ipsumm::parse_format("table") == Format::kTable);
  CHECK(ipsumm::parse_format("json") == Format::kJson);
  CHECK(ipsumm::parse_format("csv") == Format::kCsv);
  CHECK_THROWS_AS(ipsumm::parse_format("xml"), ipsumm::ConfigError);
  CHECK_THROWS_AS(ipsumm::parse_format("JSON"), ipsumm::ConfigError);
}

TEST_CASE("json summary follows the key schema") {
  const auto text = render(four_host_report(SummaryConfig::from_granularity(0, 8)), Format::kJson);
  const auto j = nlohmann::json::parse(text);
  CHECK(j["registry"] == "fig2");
  CHECK(j["original_size"] == 4);
  CHECK(j["granularity"] == 0);
  CHECK(j["min_subnet_mask"] == 8);
  CHECK(j["summarized_size"] == 1);
  CHECK(j["compression_rate"] == 0.25);
  CHECK(j["claimed_addresses"] == 8);
  CHECK(j["precision"] == 0.5);
  CHECK(j["prefixes"] == nlohmann::json::array({"10.10.0.0/29"}));

  const auto custom = nlohmann::json::parse(
      render(four_host_report(SummaryConfig::from_thresholds(2, 0.5, 8)), Format::kJson));
  CHECK(custom["granularity"].is_null());
  CHECK(custom["distance_threshold"] == 2);
}

TEST_CASE("json numbers survive a round trip at full precision") {
  ipsumm::testing::Rng rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    const auto addrs = ipsumm::testing::random_set(
        rng, static_cast<std::size_t>(ipsumm::testing::uniform_int(rng, 1, 200)),
        ipsumm::testing::shape_for(static_cast<std::size_t>(trial)));
    const auto tree = PatriciaTree::build(addrs);
    const auto cfg = SummaryConfig::from_granularity(trial % 4, 8);
    const auto stats = ipsumm::make_stats("r", summarize(tree, cfg), cfg);
    const auto j = nlohmann::json::parse(render(ipsumm::SummaryReport{"r", {stats}}, Format::kJson));
    REQUIRE(j["compression_rate"].get<double>() == stats.compression_rate);
    REQUIRE(j["precision"].get<double>() == stats.precision);
    REQUIRE(j["density_threshold"].get<double>() == stats.density_threshold);
    REQUIRE(j["prefixes"].size() == stats.summarized_size);
  }
}

TEST_CASE("empty summary renders n/a") {
  const auto cfg = SummaryConfig::from_granularity(1);
  const ipsumm::SummaryReport report{"empty", {ipsumm::make_stats("empty", summarize(PatriciaTree{}, cfg), cfg)}};
  const std::string table = render(report, Format::kTable);
  CHECK(table.find("empty  0         0        n/a") != std::string::npos);
  const auto j = nlohmann::json::parse(render(report, Format::kJson));
  CHECK(j["compression_rate"].is_null());
  CHECK(j["precision"].is_null());
  CHECK(j["summarized_size"] == 0);
  CHECK(render(report, Format::kCsv) ==
        "registry,granularity,min_subnet_mask,distance_threshold,density_threshold,"
        "original_size,summarized_size,compression_rate,claimed_addresses,precision,prefixes\n"
        "empty,1,8,8,1e-06,0,0,,0,,\n");
}

TEST_CASE("table layout of the gLS final row") {
  const std::string table = render(nine_registry_report(), Format::kTable);
  CHECK(table.find("ESnet      618       58       0.09385113\n") != std::string::npos);
  CHECK(table.find("Final      1560      208      0.13333333\n") != std::string::npos);

  const auto j = nlohmann::json::parse(render(nine_registry_report(), Format::kJson));
  const auto& final_row = j["runs"][0]["distributed"]["final"];
  CHECK(final_row["original_size"] == 1560);
  CHECK(final_row["summarized_size"] == 208);
  CHECK(final_row["compression_rate"].get<double>() == 208.0 / 1560.0);
  CHECK(j["runs"][0]["single"].is_null());
  CHECK(j["runs"][0]["decrease"].is_null());
}

TEST_CASE("comparison section and decrease") {
  auto report = nine_registry_report();
  std::vector<ipsumm::RegistrySummary> parts;
  SummaryResult r;
  r.original_size = 1559;
  for (std::uint32_t i = 0; i < 180; ++i) r.prefixes.emplace_back(0x02000000u + i, 32);
  parts.push_back({"single", std::move(r)});
  MergedSummary single = ipsumm::merge_parts(std::move(parts), 1559);
  single.total_original = 1560;
  report.runs[0].single = single;

  const std::string table = render(report, Format::kTable);
  CHECK(table.find("Distributed  1560      208      0.13333333\n") != std::string::npos);
  CHECK(table.find("Single       1560      180      0.11538462\n") != std::string::npos);
  CHECK(table.find("Decrease               13.46%\n") != std::string::npos);
  const auto j = nlohmann::json::parse(render(report, Format::kJson));
  CHECK(j["runs"][0]["decrease"].get<double>() == doctest::Approx(0.1346).epsilon(0.004));
  const std::string csv = render(report, Format::kCsv);
  CHECK(csv.find("comparison,Decrease,0,8,4,1e-05,,,,,,0.13461538461538458") != std::string::npos);
}

TEST_CASE("csv ignores the process locale") {
  const char* previous = std::setlocale(LC_NUMERIC, nullptr);
  const std::string saved = previous ? previous : "C";
  // Comma-decimal locales are often not installed; use one if present.
  for (const char* name : {"de_DE.UTF-8", "de_DE.utf8", "fr_FR.UTF-8"}) {
    if (std::setlocale(LC_NUMERIC, name)) break;
  }
  const auto csv = render(four_host_report(SummaryConfig::from_granularity(0, 8)), Format::kCsv);
  const auto table = render(nine_registry_report(), Format::kTable);
  std::setlocale(LC_NUMERIC, saved.c_str());
  CHECK(csv.find("fig2,0,8,4,1e-05,4,1,0.25,8,0.5,10.10.0.0/29\n") != std::string::npos);
  CHECK(table.find("0.13333333") != std::string::npos);
}

}  // TEST_SUITE
