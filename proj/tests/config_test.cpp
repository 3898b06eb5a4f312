// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>

#include "mwc/config.hpp"
#include "mwc/errors.hpp"
#include "mwc/registry.hpp"

using namespace mwc;

TEST_CASE("defaults enable exactly the checkable rules") {
    Config c = default_config(registry());
    std::size_t checkable = 0;
    for (const CategoryRecord& r : registry().records)
        if (r.strategy != Strategy::Advisory) ++checkable;
    CHECK(c.enabled_rules.size() == checkable);
    CHECK(checkable == 30);
    CHECK(c.rule_enabled("MWC-111"));
    CHECK_FALSE(c.rule_enabled("MWC-112"));  // advisory
    CHECK(c.fail_on == Severity::High);
    CHECK(c.format == "json");
    CHECK_FALSE(c.conventions.external_prefixes.empty());
    CHECK(c.event_schemas.count("Transfer") == 1);
}

TEST_CASE("json overlay replaces selected fields only") {
    Config c = config_from_json_text(
        R"({
            "enabled_rules": ["MWC-111", "MWC-103"],
            "severity_overrides": {"MWC-103": "critical"},
            "fail_on": "medium",
            "format": "sarif",
            "conventions": {"supply_names": ["reserve"]},
            "generic_abort_codes": [0, 1, 7]
        })",
        registry());
    CHECK(c.enabled_rules == std::vector<std::string>{"MWC-103", "MWC-111"});
    CHECK(c.severity_for(*registry().find("MWC-103")) == Severity::Critical);
    CHECK(c.severity_for(*registry().find("MWC-111")) ==
          registry().find("MWC-111")->severity_default);
    CHECK(c.fail_on == Severity::Medium);
    CHECK(c.format == "sarif");
    CHECK(c.conventions.supply_names == std::vector<std::string>{"reserve"});
    // Untouched lists keep their defaults.
    CHECK_FALSE(c.conventions.freeze_names.empty());
    CHECK(c.generic_abort_codes == std::vector<std::uint64_t>{0, 1, 7});
}

TEST_CASE("bad configs are rejected with names, not silently ignored") {
    CHECK_THROWS_AS((void)config_from_json_text("{", registry()), ConfigError);
    CHECK_THROWS_AS((void)config_from_json_text("[1]", registry()), ConfigError);
    CHECK_THROWS_AS(
        (void)config_from_json_text(R"({"enabled_rules": ["MWC-999"]})", registry()),
        ConfigError);
    // Advisory rules have no detector to enable.
    CHECK_THROWS_AS(
        (void)config_from_json_text(R"({"enabled_rules": ["MWC-112"]})", registry()),
        ConfigError);
    CHECK_THROWS_AS(
        (void)config_from_json_text(R"({"fail_on": "fatal"})", registry()),
        ConfigError);
    CHECK_THROWS_AS(
        (void)config_from_json_text(R"({"format": "pdf"})", registry()),
        ConfigError);
    CHECK_THROWS_AS((void)config_from_json_text(
                        R"({"conventions": {"supply_names": []}})", registry()),
                    ConfigError);
    CHECK_THROWS_AS((void)config_from_json_text(
                        R"({"generic_abort_codes": [-1]})", registry()),
                    ConfigError);
    CHECK_THROWS_AS((void)load_config_file("/nonexistent/mwc.json", registry()),
                    ConfigError);
}

TEST_CASE("severity overrides accept advisory ids") {
    Config c = config_from_json_text(
        R"({"severity_overrides": {"MWC-112": "high"}})", registry());
    CHECK(c.severity_for(*registry().find("MWC-112")) == Severity::High);
}

TEST_CASE("the scaffold config loads back unchanged") {
    std::string text = default_config_json(registry());
    Config c = config_from_json_text(text, registry());
    Config d = default_config(registry());
    CHECK(c.enabled_rules == d.enabled_rules);
    CHECK(c.fail_on == d.fail_on);
    CHECK(c.format == d.format);
    CHECK(c.conventions.lock_prefix == d.conventions.lock_prefix);
    CHECK(c.conventions.supply_names == d.conventions.supply_names);
    CHECK(c.event_schemas == d.event_schemas);
    CHECK(c.generic_abort_codes == d.generic_abort_codes);
}

TEST_CASE("case-insensitive name helpers") {
    CHECK(ci_equals("External", "external"));
    CHECK_FALSE(ci_equals("External", "extern"));
    CHECK(ci_contains("decode_resource", "DECODE"));
    CHECK(ci_contains("abc", "abc"));
    CHECK_FALSE(ci_contains("ab", "abc"));
    CHECK_FALSE(ci_contains("haystack", ""));
    CHECK(name_matches_any("total_supply", {"nope", "supply"}));
    CHECK_FALSE(name_matches_any("balance", {"supply", "total"}));
}

TEST_CASE("severity parsing and names") {
    CHECK(parse_severity("low") == Severity::Low);
    CHECK(parse_severity("critical") == Severity::Critical);
    CHECK_THROWS((void)parse_severity("warning"));
    CHECK(std::string(severity_name(Severity::Medium)) == "medium");
    CHECK(parse_strategy("flow") == Strategy::Flow);
    CHECK_THROWS((void)parse_strategy("magic"));
}
