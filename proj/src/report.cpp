// SPDX-License-Identifier: Apache-2.0
#include "mwc/report.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include <json.hpp>

#include "mwc/registry.hpp"
#include "mwc/version.hpp"

using ordered_json = nlohmann::ordered_json;

namespace mwc {

const char* fraud_status_name(FraudStatus s) {
    switch (s) {
        case FraudStatus::Flagged: return "flagged";
        case FraudStatus::Clear: return "clear";
        case FraudStatus::NotAssessed: return "not-assessed";
    }
    return "not-assessed";
}

namespace {

std::string fmt2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

bool rule_fired(const std::vector<Finding>& findings, const std::string& rule) {
    for (const Finding& f : findings)
        if (f.rule_id == rule) return true;
    return false;
}

const char* sarif_level(Severity s) {
    switch (s) {
        case Severity::Critical:
        case Severity::High: return "error";
        case Severity::Medium: return "warning";
        case Severity::Low: return "note";
    }
    return "warning";
}

std::vector<std::string> make_summary(const Report& r, const ReportStats& stats,
                                      const Config& cfg) {
    const auto& findings = r.findings;
    std::vector<std::string> s;

    // 1. Frame with the most findings.
    if (findings.empty()) {
        s.push_back("No findings were raised across the scanned files.");
    } else {
        std::map<std::string, int> per_frame;
        for (const Finding& f : findings) ++per_frame[f.frame];
        std::string top;
        int top_n = -1;
        for (const auto& [frame, n] : per_frame)
            if (n > top_n) {
                top = frame;
                top_n = n;
            }
        s.push_back("Most findings fall under frame " + top + " (" +
                    std::to_string(top_n) + " of " +
                    std::to_string(findings.size()) + ").");
    }

    // 2. Verdict rationale.
    int at_or_above = 0;
    for (const Finding& f : findings)
        if (static_cast<int>(f.severity) >= static_cast<int>(cfg.fail_on))
            ++at_or_above;
    std::string threshold = severity_name(cfg.fail_on);
    if (r.passed)
        s.push_back("The scan is evaluated as Passed because no finding reaches the " +
                    threshold + " threshold.");
    else
        s.push_back("The scan is evaluated as Failed because " +
                    std::to_string(at_or_above) + " finding(s) reach the " +
                    threshold + " threshold.");

    // 3. Heuristic share.
    if (findings.empty()) {
        s.push_back("No heuristic judgements were required.");
    } else {
        int heuristic = 0;
        for (const Finding& f : findings)
            if (f.confidence == Confidence::Heuristic) ++heuristic;
        int pct = static_cast<int>(100.0 * heuristic / findings.size() + 0.5);
        s.push_back(std::to_string(pct) +
                    "% of findings are heuristic and deserve manual confirmation.");
    }

    // 4. Advisory pragmas.
    if (stats.review_pragma_count == 0)
        s.push_back("No advisory review pragmas appear in the scanned code.");
    else
        s.push_back(std::to_string(stats.review_pragma_count) +
                    " advisory review pragma(s) were honored during the scan.");

    // 5. Parser health.
    if (stats.parse_error_count == 0)
        s.push_back("Every scanned file parsed cleanly.");
    else
        s.push_back(std::to_string(stats.parse_error_count) +
                    " file(s) failed to parse and were excluded from analysis.");

    // 6. Frame coverage.
    {
        std::map<std::string, int> frames;
        for (const Finding& f : findings) ++frames[f.frame];
        s.push_back("Findings touch " + std::to_string(frames.size()) + " of the " +
                    std::to_string(registry().frames.size()) + " catalog frames.");
    }

    // 7. Top severity.
    if (findings.empty()) {
        s.push_back("No weakness severity was recorded.");
    } else {
        Severity top = Severity::Low;
        for (const Finding& f : findings)
            if (static_cast<int>(f.severity) > static_cast<int>(top))
                top = f.severity;
        s.push_back(std::string("The most severe finding is rated ") +
                    severity_name(top) + ".");
    }

    // 8. Recommendation.
    if (r.passed)
        s.push_back("Maintain the current guard discipline as the modules evolve.");
    else
        s.push_back("Address the findings at or above the " + threshold +
                    " threshold before deployment.");

    return s;
}

}  // namespace

Report build_report(std::vector<Finding> findings, const ReportStats& stats,
                    const Config& cfg, std::vector<std::string> target_paths,
                    int file_count) {
    Report r;
    r.tool = kToolName;
    r.version = kToolVersion;
    r.target_paths = std::move(target_paths);
    r.file_count = file_count;
    std::sort(findings.begin(), findings.end(), finding_order);
    r.findings = std::move(findings);

    r.dimensions.code_quality.parse_error_count = stats.parse_error_count;
    r.dimensions.code_quality.comment_density =
        stats.total_lines == 0
            ? 0.0
            : static_cast<double>(stats.comment_tokens) / stats.total_lines;
    r.dimensions.code_quality.avg_function_length =
        stats.function_count == 0
            ? 0.0
            : static_cast<double>(stats.function_stmt_total) / stats.function_count;

    std::map<std::string, FrameActivity> frames;
    for (const Finding& f : r.findings) {
        FrameActivity& fa = frames[f.frame];
        fa.frame = f.frame;
        if (f.confidence == Confidence::Precise)
            ++fa.precise;
        else
            ++fa.heuristic;
    }
    for (auto& [code, fa] : frames)
        r.dimensions.security_practices.push_back(std::move(fa));

    auto mapped = [&](const std::string& rule) {
        return rule_fired(r.findings, rule) ? FraudStatus::Flagged
                                            : FraudStatus::Clear;
    };
    r.dimensions.fraud_analysis = {
        {"fee-scam", FraudStatus::NotAssessed},
        {"redirection", FraudStatus::NotAssessed},
        {"unlimited-minting", mapped("MWC-111")},
        {"emergency-fees", FraudStatus::NotAssessed},
        {"ownership-concentration", FraudStatus::NotAssessed},
        {"blacklisting", FraudStatus::NotAssessed},
        {"transaction-restrictions", mapped("MWC-100")},
    };

    r.passed = true;
    for (const Finding& f : r.findings)
        if (static_cast<int>(f.severity) >= static_cast<int>(cfg.fail_on))
            r.passed = false;

    r.summary = make_summary(r, stats, cfg);
    return r;
}

std::string render_json(const Report& r) {
    ordered_json doc;
    doc["tool"] = r.tool;
    doc["version"] = r.version;
    doc["target"] = {{"paths", r.target_paths}, {"files", r.file_count}};
    doc["findings"] = ordered_json::array();
    for (const Finding& f : r.findings) {
        ordered_json jf;
        jf["rule"] = f.rule_id;
        jf["frame"] = f.frame;
        jf["severity"] = severity_name(f.severity);
        jf["confidence"] = confidence_name(f.confidence);
        jf["file"] = f.span.file;
        jf["line"] = f.span.line;
        jf["column"] = f.span.column;
        jf["message"] = f.message;
        jf["fix_hint"] = f.fix_hint;
        doc["findings"].push_back(std::move(jf));
    }
    ordered_json dims;
    dims["code_quality"] = {
        {"comment_density", r.dimensions.code_quality.comment_density},
        {"avg_function_length", r.dimensions.code_quality.avg_function_length},
        {"parse_error_count", r.dimensions.code_quality.parse_error_count},
    };
    dims["security_practices"] = ordered_json::array();
    for (const FrameActivity& fa : r.dimensions.security_practices)
        dims["security_practices"].push_back(
            {{"frame", fa.frame}, {"precise", fa.precise}, {"heuristic", fa.heuristic}});
    dims["fraud_analysis"] = ordered_json::array();
    for (const FraudChecklistItem& item : r.dimensions.fraud_analysis)
        dims["fraud_analysis"].push_back(
            {{"name", item.name}, {"status", fraud_status_name(item.status)}});
    doc["dimensions"] = std::move(dims);
    doc["verdict"] = r.passed ? "Passed" : "Failed";
    doc["summary"] = r.summary;
    return doc.dump(2) + "\n";
}

std::string render_sarif(const Report& r) {
    const Registry& reg = registry();
    ordered_json doc;
    doc["$schema"] = "https://json.schemastore.org/sarif-2.1.0.json";
    doc["version"] = "2.1.0";

    ordered_json rules = ordered_json::array();
    std::vector<std::string> seen;
    for (const Finding& f : r.findings) {
        if (std::find(seen.begin(), seen.end(), f.rule_id) != seen.end()) continue;
        seen.push_back(f.rule_id);
    }
    std::sort(seen.begin(), seen.end());
    for (const std::string& id : seen) {
        ordered_json rule;
        rule["id"] = id;
        const CategoryRecord* rec = reg.find(id);
        if (rec) {
            rule["name"] = rec->box_title;
            rule["shortDescription"] = {
                {"text", rec->title_taxonomy ? *rec->title_taxonomy : rec->box_title}};
            rule["defaultConfiguration"] = {
                {"level", sarif_level(rec->severity_default)}};
            rule["properties"] = {{"frame", rec->frame},
                                  {"strategy", strategy_name(rec->strategy)}};
        }
        rules.push_back(std::move(rule));
    }

    ordered_json results = ordered_json::array();
    for (const Finding& f : r.findings) {
        ordered_json res;
        res["ruleId"] = f.rule_id;
        res["level"] = sarif_level(f.severity);
        res["message"] = {{"text", f.message}};
        res["locations"] = ordered_json::array();
        res["locations"].push_back(
            {{"physicalLocation",
              {{"artifactLocation", {{"uri", f.span.file}}},
               {"region",
                {{"startLine", f.span.line}, {"startColumn", f.span.column}}}}}});
        results.push_back(std::move(res));
    }

    ordered_json run;
    run["tool"] = {{"driver",
                    {{"name", r.tool}, {"version", r.version}, {"rules", rules}}}};
    run["results"] = std::move(results);
    doc["runs"] = ordered_json::array({std::move(run)});
    return doc.dump(2) + "\n";
}

std::string render_markdown(const Report& r) {
    std::string md;
    md += "# " + r.tool + " report\n\n";
    std::string targets;
    for (const std::string& p : r.target_paths)
        targets += (targets.empty() ? "" : ", ") + p;
    md += "Target: " + (targets.empty() ? std::string("(none)") : targets) + " (" +
          std::to_string(r.file_count) + " file(s))\n\n";

    md += "## Findings\n\n";
    if (r.findings.empty()) {
        md += "No findings.\n\n";
    } else {
        for (const Finding& f : r.findings) {
            md += "- **" + f.rule_id + "** [" + severity_name(f.severity) + ", " +
                  confidence_name(f.confidence) + "] " + f.span.file + ":" +
                  std::to_string(f.span.line) + " — " + f.message + "\n";
            if (!f.snippet.empty()) md += "  - `" + f.snippet + "`\n";
            if (!f.fix_hint.empty()) md += "  - fix: " + f.fix_hint + "\n";
        }
        md += "\n";
    }

    md += "## Code Quality\n\n";
    md += "- comment density: " + fmt2(r.dimensions.code_quality.comment_density) +
          " comment tokens per line\n";
    md += "- average function length: " +
          fmt2(r.dimensions.code_quality.avg_function_length) + " statements\n";
    md += "- parse errors: " +
          std::to_string(r.dimensions.code_quality.parse_error_count) + "\n\n";

    md += "## Security Practices\n\n";
    if (r.dimensions.security_practices.empty()) {
        md += "No frame recorded findings.\n\n";
    } else {
        for (const FrameActivity& fa : r.dimensions.security_practices)
            md += "- " + fa.frame + ": " + std::to_string(fa.precise) +
                  " precise, " + std::to_string(fa.heuristic) + " heuristic\n";
        md += "\n";
    }

    md += "## Fraud Analysis\n\n";
    for (const FraudChecklistItem& item : r.dimensions.fraud_analysis)
        md += "- " + item.name + ": " + fraud_status_name(item.status) + "\n";
    md += "\n";

    md += "## Overall Assessment\n\n";
    md += std::string("**") + (r.passed ? "Passed" : "Failed") + "**\n\n";

    md += "## Posture Summary\n\n";
    for (std::size_t i = 0; i < r.summary.size(); ++i)
        md += std::to_string(i + 1) + ". " + r.summary[i] + "\n";
    return md;
}

std::string render_report(const Report& r, const std::string& format) {
    if (format == "json") return render_json(r);
    if (format == "sarif") return render_sarif(r);
    if (format == "md" || format == "markdown") return render_markdown(r);
    throw UsageError("unknown report format '" + format +
                     "' (expected json, sarif, or md)");
}

}  // namespace mwc
