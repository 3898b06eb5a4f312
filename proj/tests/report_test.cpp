// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "mwc/config.hpp"
#include "mwc/errors.hpp"
#include "mwc/registry.hpp"
#include "mwc/report.hpp"
#include "mwc/version.hpp"

using namespace mwc;
using ordered_json = nlohmann::ordered_json;

namespace {

Config default_cfg() { return default_config(registry()); }

Finding mk(const std::string& rule, Severity sev, Confidence conf,
           const std::string& file, int line, int column = 5) {
    Finding f;
    f.rule_id = rule;
    const CategoryRecord* rec = registry().find(rule);
    f.frame = rec ? rec->frame : "BMI";
    f.severity = sev;
    f.confidence = conf;
    f.span = Span{file, line, column, 0};
    f.message = rule + " message";
    f.snippet = "let x = 1;";
    f.fix_hint = "tighten the guard";
    return f;
}

Report sample_report(std::vector<Finding> findings,
                     const Config& cfg = default_cfg()) {
    ReportStats stats;
    stats.total_lines = 100;
    stats.comment_tokens = 25;
    stats.function_count = 4;
    stats.function_stmt_total = 12;
    stats.parse_error_count = 0;
    stats.review_pragma_count = 1;
    return build_report(std::move(findings), stats, cfg, {"corpus"}, 3);
}

const FraudChecklistItem* fraud_item(const Report& r, const std::string& name) {
    for (const FraudChecklistItem& item : r.dimensions.fraud_analysis)
        if (item.name == name) return &item;
    return nullptr;
}

}  // namespace

TEST_CASE("an empty scan produces a passing report with a full summary") {
    Report r = sample_report({});
    CHECK(r.tool == kToolName);
    CHECK(r.version == kToolVersion);
    CHECK(r.passed);
    CHECK(r.findings.empty());
    CHECK(r.summary.size() == 8);
    CHECK(r.dimensions.security_practices.empty());
    REQUIRE(r.dimensions.fraud_analysis.size() == 7);
    // Only the two mapped lines are ever assessed; with no findings they read
    // clear, the rest stay out of scope for a static scan.
    CHECK(fraud_item(r, "unlimited-minting")->status == FraudStatus::Clear);
    CHECK(fraud_item(r, "transaction-restrictions")->status == FraudStatus::Clear);
    CHECK(fraud_item(r, "fee-scam")->status == FraudStatus::NotAssessed);
    CHECK(fraud_item(r, "redirection")->status == FraudStatus::NotAssessed);
    CHECK(fraud_item(r, "emergency-fees")->status == FraudStatus::NotAssessed);
    CHECK(fraud_item(r, "ownership-concentration")->status ==
          FraudStatus::NotAssessed);
    CHECK(fraud_item(r, "blacklisting")->status == FraudStatus::NotAssessed);
}

TEST_CASE("fired rules flip their fraud checklist lines") {
    Report r = sample_report({mk("MWC-111", Severity::High, Confidence::Precise,
                                 "a.move", 3)});
    CHECK(fraud_item(r, "unlimited-minting")->status == FraudStatus::Flagged);
    CHECK(fraud_item(r, "transaction-restrictions")->status == FraudStatus::Clear);

    Report r2 = sample_report({mk("MWC-100", Severity::High, Confidence::Precise,
                                  "a.move", 3)});
    CHECK(fraud_item(r2, "unlimited-minting")->status == FraudStatus::Clear);
    CHECK(fraud_item(r2, "transaction-restrictions")->status ==
          FraudStatus::Flagged);
}

TEST_CASE("code quality dimensions are plain ratios with safe zero cases") {
    Report r = sample_report({});
    CHECK(r.dimensions.code_quality.comment_density == doctest::Approx(0.25));
    CHECK(r.dimensions.code_quality.avg_function_length == doctest::Approx(3.0));
    CHECK(r.dimensions.code_quality.parse_error_count == 0);

    ReportStats empty;
    Report r2 = build_report({}, empty, default_cfg(), {}, 0);
    CHECK(r2.dimensions.code_quality.comment_density == doctest::Approx(0.0));
    CHECK(r2.dimensions.code_quality.avg_function_length == doctest::Approx(0.0));
}

TEST_CASE("security practices group findings per frame by confidence") {
    std::vector<Finding> findings = {
        mk("MWC-111", Severity::High, Confidence::Precise, "a.move", 3),
        mk("MWC-110", Severity::High, Confidence::Precise, "a.move", 9),
        mk("MWC-113", Severity::Low, Confidence::Heuristic, "a.move", 12),
    };
    Report r = sample_report(std::move(findings));
    REQUIRE(r.dimensions.security_practices.size() == 2);  // MTS and GSM
    for (const FrameActivity& fa : r.dimensions.security_practices) {
        if (fa.frame == "MTS") {
            CHECK(fa.precise == 2);
            CHECK(fa.heuristic == 0);
        } else {
            CHECK(fa.frame == "GSM");
            CHECK(fa.precise == 0);
            CHECK(fa.heuristic == 1);
        }
    }
}

TEST_CASE("the verdict compares each finding against the fail-on threshold") {
    Config cfg = default_cfg();
    cfg.fail_on = Severity::High;
    CHECK(sample_report({mk("MWC-113", Severity::Low, Confidence::Heuristic,
                            "a.move", 1)},
                        cfg)
              .passed);
    CHECK(sample_report({mk("MWC-101", Severity::Medium, Confidence::Precise,
                            "a.move", 1)},
                        cfg)
              .passed);
    CHECK_FALSE(sample_report({mk("MWC-111", Severity::High, Confidence::Precise,
                                  "a.move", 1)},
                              cfg)
                    .passed);
    CHECK_FALSE(sample_report({mk("MWC-111", Severity::Critical,
                                  Confidence::Precise, "a.move", 1)},
                              cfg)
                    .passed);
}

TEST_CASE("one hundred randomized finding sets agree with the verdict rule") {
    std::mt19937 rng(20260814);
    const std::vector<std::string> ids = {"MWC-100", "MWC-103", "MWC-106",
                                          "MWC-111", "MWC-113", "MWC-128"};
    const Severity sevs[] = {Severity::Low, Severity::Medium, Severity::High,
                             Severity::Critical};
    for (int trial = 0; trial < 100; ++trial) {
        Config cfg = default_cfg();
        cfg.fail_on = sevs[rng() % 4];
        int n = static_cast<int>(rng() % 6);
        std::vector<Finding> findings;
        bool expect_fail = false;
        for (int i = 0; i < n; ++i) {
            Severity s = sevs[rng() % 4];
            if (static_cast<int>(s) >= static_cast<int>(cfg.fail_on))
                expect_fail = true;
            findings.push_back(mk(ids[rng() % ids.size()], s,
                                  rng() % 2 ? Confidence::Precise
                                            : Confidence::Heuristic,
                                  "f" + std::to_string(rng() % 3) + ".move",
                                  1 + static_cast<int>(rng() % 40)));
        }
        Report r = sample_report(std::move(findings), cfg);
        INFO("trial " << trial);
        CHECK(r.passed == !expect_fail);
        CHECK(r.summary.size() == 8);
    }
}

TEST_CASE("lowering the threshold never turns a failing scan into a passing one") {
    std::vector<Finding> findings = {
        mk("MWC-101", Severity::Medium, Confidence::Precise, "a.move", 2)};
    bool passed_at[4];
    const Severity sevs[] = {Severity::Low, Severity::Medium, Severity::High,
                             Severity::Critical};
    for (int i = 0; i < 4; ++i) {
        Config cfg = default_cfg();
        cfg.fail_on = sevs[i];
        passed_at[i] = sample_report(findings, cfg).passed;
    }
    CHECK_FALSE(passed_at[0]);  // fail-on low: Medium trips it
    CHECK_FALSE(passed_at[1]);
    CHECK(passed_at[2]);
    CHECK(passed_at[3]);
    for (int i = 1; i < 4; ++i)
        CHECK(passed_at[i - 1] <= passed_at[i]);  // monotone in the threshold
}

TEST_CASE("build_report sorts findings canonically regardless of input order") {
    std::vector<Finding> shuffled = {
        mk("MWC-111", Severity::High, Confidence::Precise, "b.move", 9),
        mk("MWC-101", Severity::Medium, Confidence::Precise, "a.move", 7),
        mk("MWC-100", Severity::High, Confidence::Precise, "a.move", 7),
        mk("MWC-113", Severity::Low, Confidence::Heuristic, "a.move", 2),
    };
    Report r = sample_report(shuffled);
    REQUIRE(r.findings.size() == 4);
    CHECK(r.findings[0].span.line == 2);
    CHECK(r.findings[1].rule_id == "MWC-100");  // same file/line: rule id breaks tie
    CHECK(r.findings[2].rule_id == "MWC-101");
    CHECK(r.findings[3].span.file == "b.move");

    std::vector<Finding> reversed(shuffled.rbegin(), shuffled.rend());
    CHECK(render_json(sample_report(shuffled)) ==
          render_json(sample_report(reversed)));
}

TEST_CASE("the JSON rendering keeps a fixed key layout and omits snippets") {
    Report r = sample_report({mk("MWC-111", Severity::High, Confidence::Precise,
                                 "a.move", 3)});
    std::string text = render_json(r);
    ordered_json doc = ordered_json::parse(text);

    std::vector<std::string> top;
    for (auto it = doc.begin(); it != doc.end(); ++it) top.push_back(it.key());
    CHECK(top == std::vector<std::string>{"tool", "version", "target", "findings",
                                          "dimensions", "verdict", "summary"});

    REQUIRE(doc["findings"].size() == 1);
    std::vector<std::string> fkeys;
    for (auto it = doc["findings"][0].begin(); it != doc["findings"][0].end(); ++it)
        fkeys.push_back(it.key());
    CHECK(fkeys == std::vector<std::string>{"rule", "frame", "severity",
                                            "confidence", "file", "line", "column",
                                            "message", "fix_hint"});
    CHECK(text.find("snippet") == std::string::npos);

    CHECK(doc["tool"] == kToolName);
    CHECK(doc["target"]["paths"][0] == "corpus");
    CHECK(doc["target"]["files"] == 3);
    CHECK(doc["findings"][0]["severity"] == "high");
    CHECK(doc["findings"][0]["confidence"] == "precise");
    CHECK(doc["verdict"] == "Failed");
    CHECK(doc["summary"].size() == 8);
    CHECK(doc["dimensions"]["fraud_analysis"].size() == 7);
    CHECK(text.back() == '\n');
}

TEST_CASE("the SARIF rendering carries one result per finding") {
    std::vector<Finding> findings = {
        mk("MWC-111", Severity::Critical, Confidence::Precise, "a.move", 3),
        mk("MWC-111", Severity::High, Confidence::Precise, "a.move", 9),
        mk("MWC-101", Severity::Medium, Confidence::Precise, "b.move", 2),
        mk("MWC-113", Severity::Low, Confidence::Heuristic, "b.move", 5),
    };
    Report r = sample_report(findings);
    ordered_json doc = ordered_json::parse(render_sarif(r));

    CHECK(doc["$schema"] == "https://json.schemastore.org/sarif-2.1.0.json");
    CHECK(doc["version"] == "2.1.0");
    REQUIRE(doc["runs"].size() == 1);
    const auto& run = doc["runs"][0];
    CHECK(run["tool"]["driver"]["name"] == kToolName);
    CHECK(run["results"].size() == findings.size());

    // Rule descriptors are distinct and sorted even when findings repeat.
    const auto& rules = run["tool"]["driver"]["rules"];
    std::vector<std::string> ids;
    for (const auto& rule : rules) ids.push_back(rule["id"].get<std::string>());
    CHECK(ids == std::vector<std::string>{"MWC-101", "MWC-111", "MWC-113"});
    for (const auto& rule : rules) {
        CHECK(rule.contains("name"));
        CHECK(rule["shortDescription"].contains("text"));
        CHECK(rule["defaultConfiguration"].contains("level"));
        CHECK(rule["properties"].contains("frame"));
    }

    // Severity maps onto the standard level vocabulary.
    CHECK(run["results"][0]["level"] == "error");    // Critical, a.move:3
    CHECK(run["results"][1]["level"] == "error");    // High, a.move:9
    CHECK(run["results"][2]["level"] == "warning");  // Medium, b.move:2
    CHECK(run["results"][3]["level"] == "note");     // Low, b.move:5
    CHECK(run["results"][0]["locations"][0]["physicalLocation"]["region"]
             ["startLine"] == 3);
    CHECK(run["results"][0]["locations"][0]["physicalLocation"]
             ["artifactLocation"]["uri"] == "a.move");
}

TEST_CASE("the markdown rendering exposes every audit section") {
    Report r = sample_report({mk("MWC-111", Severity::High, Confidence::Precise,
                                 "a.move", 3)});
    std::string md = render_markdown(r);
    CHECK(md.find("# mwc-lint report") != std::string::npos);
    CHECK(md.find("## Findings") != std::string::npos);
    CHECK(md.find("## Code Quality") != std::string::npos);
    CHECK(md.find("## Security Practices") != std::string::npos);
    CHECK(md.find("## Fraud Analysis") != std::string::npos);
    CHECK(md.find("## Overall Assessment") != std::string::npos);
    CHECK(md.find("## Posture Summary") != std::string::npos);
    CHECK(md.find("**Failed**") != std::string::npos);
    CHECK(md.find("**MWC-111**") != std::string::npos);
    CHECK(md.find("`let x = 1;`") != std::string::npos);  // snippet is inline code
    CHECK(md.find("1. ") != std::string::npos);
    CHECK(md.find("8. ") != std::string::npos);
    CHECK(md.find("unlimited-minting: flagged") != std::string::npos);

    Report clean = sample_report({});
    std::string md2 = render_markdown(clean);
    CHECK(md2.find("**Passed**") != std::string::npos);
    CHECK(md2.find("No findings.") != std::string::npos);
    CHECK(md2.find("No frame recorded findings.") != std::string::npos);
}

TEST_CASE("render_report dispatches on the format name") {
    Report r = sample_report({});
    CHECK(render_report(r, "json") == render_json(r));
    CHECK(render_report(r, "sarif") == render_sarif(r));
    CHECK(render_report(r, "md") == render_markdown(r));
    CHECK(render_report(r, "markdown") == render_markdown(r));
    CHECK_THROWS_AS((void)render_report(r, "pdf"), UsageError);
    CHECK_THROWS_AS((void)render_report(r, ""), UsageError);
}

TEST_CASE("renderings are deterministic") {
    std::vector<Finding> findings = {
        mk("MWC-106", Severity::High, Confidence::Precise, "x.move", 4),
        mk("MWC-136", Severity::High, Confidence::Precise, "x.move", 6),
    };
    Report a = sample_report(findings);
    Report b = sample_report(findings);
    CHECK(render_json(a) == render_json(b));
    CHECK(render_sarif(a) == render_sarif(b));
    CHECK(render_markdown(a) == render_markdown(b));
}
