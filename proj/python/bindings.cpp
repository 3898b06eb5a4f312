// SPDX-License-Identifier: Apache-2.0
//
// Python extension module. Structured results cross the language boundary as
// JSON strings; the mwclint package turns them back into dictionaries, so
// this file stays free of Python object plumbing.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mwc/config.hpp"
#include "mwc/corpus.hpp"
#include "mwc/errors.hpp"
#include "mwc/parser.hpp"
#include "mwc/printer.hpp"
#include "mwc/registry.hpp"
#include "mwc/report.hpp"
#include "mwc/scan.hpp"
#include "mwc/version.hpp"

namespace py = pybind11;
using ordered_json = nlohmann::ordered_json;

namespace {

using namespace mwc;

Config make_config(const std::string& config_json) {
    if (config_json.empty()) return default_config(registry());
    return config_from_json_text(config_json, registry());
}

ordered_json record_json(const CategoryRecord& rec) {
    ordered_json j;
    j["id"] = rec.id;
    j["number"] = rec.number;
    j["suffix"] = rec.suffix;
    j["title"] = rec.box_title;
    if (rec.title_taxonomy) j["title_taxonomy"] = *rec.title_taxonomy;
    if (rec.title_frame) j["title_frame"] = *rec.title_frame;
    j["frame"] = rec.frame;
    j["strategy"] = strategy_name(rec.strategy);
    j["severity"] = severity_name(rec.severity_default);
    if (rec.analysis_hint) j["analysis_hint"] = *rec.analysis_hint;
    j["fix_hint"] = rec.fix_hint;
    j["aliases"] = rec.aliases;
    return j;
}

std::string rules_json() {
    ordered_json out = ordered_json::array();
    for (const CategoryRecord& rec : registry().records)
        out.push_back(record_json(rec));
    return out.dump();
}

std::string frames_json() {
    ordered_json out = ordered_json::array();
    for (const Frame& f : registry().frames) {
        ordered_json j;
        j["code"] = f.code;
        j["name"] = f.name;
        j["members"] = f.member_ids;
        j["supplementary"] = f.supplementary;
        out.push_back(std::move(j));
    }
    return out.dump();
}

std::string explain_json(const std::string& rule_id) {
    LookupResult lr = lookup(rule_id);
    ordered_json j = record_json(*lr.record);
    if (!lr.note.empty()) j["note"] = lr.note;
    return j.dump();
}

std::string crosswalk_json(const std::string& rule_id) {
    std::optional<std::string> filter;
    if (!rule_id.empty()) filter = rule_id;
    ordered_json out = ordered_json::array();
    for (const SwcCrosswalkEntry* row : swc_crosswalk(filter)) {
        ordered_json j;
        j["aspect"] = row->aspect;
        j["swc"] = row->swc_side;
        j["mwc"] = row->mwc_side;
        ordered_json pairs = ordered_json::array();
        for (const auto& [swc, mwc_id] : row->direct_id_pairs)
            pairs.push_back({{"swc", swc}, {"mwc", mwc_id}});
        j["pairs"] = std::move(pairs);
        out.push_back(std::move(j));
    }
    return out.dump();
}

std::string scan_text(const std::string& text, const std::string& name,
                      const std::string& config_json, const std::string& format) {
    ScanOutcome outcome = scan_buffer(text, name, make_config(config_json));
    return render_report(outcome.report, format);
}

std::string scan_paths(const std::vector<std::string>& paths,
                       const std::string& config_json, const std::string& format,
                       int jobs) {
    ScanOptions opts;
    opts.paths = paths;
    opts.jobs = jobs < 1 ? 1 : jobs;
    ScanOutcome outcome = run_scan(opts, make_config(config_json));
    return render_report(outcome.report, format);
}

std::string check_source(const std::string& text, const std::string& name) {
    ParseResult r = parse_source(text, name);
    ordered_json j;
    j["ok"] = r.ok();
    ordered_json diags = ordered_json::array();
    if (!r.ok()) {
        for (const Diag& d : r.errors()) {
            ordered_json dj;
            dj["file"] = d.span.file;
            dj["line"] = d.span.line;
            dj["column"] = d.span.column;
            dj["message"] = d.message;
            if (!d.expected.empty()) dj["expected"] = d.expected;
            diags.push_back(std::move(dj));
        }
    }
    j["diagnostics"] = std::move(diags);
    return j.dump();
}

std::string format_source(const std::string& text, const std::string& name) {
    ParseResult r = parse_source(text, name);
    if (!r.ok()) {
        std::string msg = "source does not parse:";
        for (const Diag& d : r.errors()) msg += "\n  " + format_diag(d);
        throw UsageError(msg);
    }
    return pretty_print(r.ast());
}

std::string evaluate_fixtures(const std::string& corpus_dir,
                              const std::string& config_json) {
    CorpusMetrics m = evaluate_corpus(load_corpus(corpus_dir),
                                      make_config(config_json));
    ordered_json j;
    ordered_json rules = ordered_json::array();
    for (const RuleMetrics& rm : m.per_rule)
        rules.push_back({{"rule", rm.rule_id},
                         {"tp", rm.tp},
                         {"fn", rm.fn},
                         {"fp_fixed", rm.fp_fixed}});
    j["per_rule"] = std::move(rules);
    j["tp_total"] = m.tp_total;
    j["fn_total"] = m.fn_total;
    j["fp_fixed_total"] = m.fp_fixed_total;
    j["recall"] = m.recall();
    j["gate_passed"] = m.gate_passed();
    j["failures"] = m.failures;
    return j.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Core operations of the mwc-lint static analyzer";

    py::register_exception<mwc::NotFoundError>(m, "NotFoundError", PyExc_KeyError);
    py::register_exception<mwc::UnsupportedRuleError>(m, "UnsupportedRuleError",
                                                      PyExc_ValueError);
    py::register_exception<mwc::UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<mwc::ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<mwc::CorpusError>(m, "CorpusError", PyExc_ValueError);
    py::register_exception<mwc::RegistryError>(m, "RegistryError",
                                               PyExc_RuntimeError);

    m.def("version", [] { return std::string(mwc::kToolVersion); },
          "Tool version string.");
    m.def("tool_name", [] { return std::string(mwc::kToolName); },
          "Tool name used in report headers.");
    m.def("rules", &rules_json, "All catalog records as a JSON array.");
    m.def("frames", &frames_json, "All frames as a JSON array.");
    m.def("explain", &explain_json, py::arg("rule_id"),
          "One catalog record as JSON; bare numbers resolve with a note.");
    m.def("crosswalk", &crosswalk_json, py::arg("rule_id") = "",
          "SWC comparison rows as JSON, optionally filtered to one rule.");
    m.def("scan_text", &scan_text, py::arg("text"),
          py::arg("name") = "buffer.move", py::arg("config_json") = "",
          py::arg("format") = "json",
          "Scan one in-memory buffer and return the rendered report.");
    m.def("scan_paths", &scan_paths, py::arg("paths"),
          py::arg("config_json") = "", py::arg("format") = "json",
          py::arg("jobs") = 1,
          "Scan files or directories and return the rendered report.");
    m.def("check_source", &check_source, py::arg("text"),
          py::arg("name") = "buffer.move",
          "Parse a buffer; returns {ok, diagnostics} as JSON.");
    m.def("format_source", &format_source, py::arg("text"),
          py::arg("name") = "buffer.move",
          "Pretty-print a buffer; raises on parse errors.");
    m.def("evaluate_fixtures", &evaluate_fixtures, py::arg("corpus_dir"),
          py::arg("config_json") = "",
          "Run the detector gate over a fixture corpus; returns metrics JSON.");
    m.def("default_config", [] { return mwc::default_config_json(mwc::registry()); },
          "The built-in configuration as pretty JSON.");
}
