// SPDX-License-Identifier: Apache-2.0
#include "mwc/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "mwc/detectors.hpp"
#include "mwc/model.hpp"
#include "mwc/parser.hpp"
#include "mwc/registry.hpp"

namespace fs = std::filesystem;

namespace mwc {

namespace {

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw CorpusError("cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<ExpectedFinding> parse_expected(const fs::path& path,
                                            const std::string& rule_id) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw CorpusError(path.string() + ": invalid JSON: " + e.what());
    }
    if (!doc.is_object() || !doc.contains("rule") || !doc.contains("findings"))
        throw CorpusError(path.string() + ": expected {\"rule\", \"findings\"}");
    if (doc["rule"] != rule_id)
        throw CorpusError(path.string() + ": rule '" +
                          doc["rule"].get<std::string>() +
                          "' does not match directory rule '" + rule_id + "'");
    if (!doc["findings"].is_array() || doc["findings"].empty())
        throw CorpusError(path.string() +
                          ": a vulnerable fixture needs at least one expected finding");
    std::vector<ExpectedFinding> out;
    for (const auto& f : doc["findings"]) {
        if (!f.is_object() || !f.contains("rule") || !f.contains("line") ||
            !f["line"].is_number_integer() || f["line"].get<int>() <= 0)
            throw CorpusError(path.string() +
                              ": each finding needs a rule and a positive line");
        out.push_back(ExpectedFinding{f["rule"].get<std::string>(),
                                      f["line"].get<int>()});
    }
    return out;
}

}  // namespace

std::vector<Fixture> load_corpus(const std::string& dir) {
    const Registry& reg = registry();
    fs::path root(dir);
    if (!fs::is_directory(root))
        throw CorpusError("corpus directory not found: " + dir);

    std::vector<Fixture> fixtures;
    std::vector<fs::path> rule_dirs;
    for (const auto& entry : fs::directory_iterator(root))
        if (entry.is_directory()) rule_dirs.push_back(entry.path());
    std::sort(rule_dirs.begin(), rule_dirs.end());

    for (const fs::path& rd : rule_dirs) {
        std::string rule_id = rd.filename().string();
        const CategoryRecord* rec = reg.find(rule_id);
        if (!rec)
            throw CorpusError(rd.string() + ": '" + rule_id +
                              "' is not a registry rule id");
        if (rec->strategy == Strategy::Advisory)
            throw CorpusError(rd.string() + ": '" + rule_id +
                              "' is advisory and cannot have detector fixtures");

        std::vector<fs::path> vulns;
        for (const auto& entry : fs::directory_iterator(rd)) {
            std::string fname = entry.path().filename().string();
            if (fname.size() > 10 && fname.ends_with(".vuln.move"))
                vulns.push_back(entry.path());
        }
        std::sort(vulns.begin(), vulns.end());
        if (vulns.empty())
            throw CorpusError(rd.string() + ": no .vuln.move fixture");
        if (vulns.size() > 1)
            throw CorpusError(rd.string() +
                              ": one vuln/fixed pair per rule directory");

        Fixture fx;
        fx.rule_id = rule_id;
        std::string fname = vulns[0].filename().string();
        fx.name = fname.substr(0, fname.size() - std::string(".vuln.move").size());
        fx.vuln_path = vulns[0].string();
        fs::path fixed = rd / (fx.name + ".fixed.move");
        if (!fs::exists(fixed))
            throw CorpusError(rd.string() + ": missing fixed pair " +
                              fixed.filename().string());
        fx.fixed_path = fixed.string();
        fs::path expected = rd / "expected.json";
        if (!fs::exists(expected))
            throw CorpusError(rd.string() + ": missing expected.json");
        fx.expected = parse_expected(expected, rule_id);
        fixtures.push_back(std::move(fx));
    }
    return fixtures;
}

namespace {

std::vector<Finding> run_on_file(const std::string& path, const Config& cfg) {
    std::string text = read_file(path);
    ParseResult pr = parse_source(text, path);
    if (!pr.ok()) {
        std::string msg = "fixture does not parse: " + path;
        for (const Diag& d : pr.errors()) msg += "\n  " + format_diag(d);
        throw CorpusError(msg);
    }
    std::vector<const Ast*> asts{&pr.ast()};
    SemanticModel model = resolve(asts);
    std::vector<SourceFile> sources{{path, text}};
    return run_all(model, cfg, sources);
}

}  // namespace

CorpusMetrics evaluate_corpus(const std::vector<Fixture>& fixtures,
                              const Config& cfg) {
    CorpusMetrics metrics;
    std::map<std::string, RuleMetrics> per_rule;

    for (const Fixture& fx : fixtures) {
        RuleMetrics& rm = per_rule[fx.rule_id];
        rm.rule_id = fx.rule_id;

        std::vector<Finding> vuln_findings = run_on_file(fx.vuln_path, cfg);
        for (const ExpectedFinding& exp : fx.expected) {
            bool hit = false;
            for (const Finding& f : vuln_findings)
                if (f.rule_id == exp.rule && f.span.line == exp.line) hit = true;
            if (hit) {
                ++rm.tp;
            } else {
                ++rm.fn;
                metrics.failures.push_back(fx.vuln_path + ": expected " + exp.rule +
                                           " at line " + std::to_string(exp.line) +
                                           ", not reported");
            }
        }

        std::vector<Finding> fixed_findings = run_on_file(fx.fixed_path, cfg);
        for (const Finding& f : fixed_findings) {
            if (f.rule_id != fx.rule_id) continue;
            ++rm.fp_fixed;
            metrics.failures.push_back(fx.fixed_path + ": unexpected " + f.rule_id +
                                       " at line " + std::to_string(f.span.line));
        }
    }

    for (auto& [id, rm] : per_rule) {
        metrics.tp_total += rm.tp;
        metrics.fn_total += rm.fn;
        metrics.fp_fixed_total += rm.fp_fixed;
        metrics.per_rule.push_back(std::move(rm));
    }
    return metrics;
}

}  // namespace mwc
