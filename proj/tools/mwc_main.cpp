// SPDX-License-Identifier: Apache-2.0
//
// mwc — command-line front end: scans Move-style module sources against the
// MWC catalog, lists and explains categories, queries the SWC crosswalk,
// evaluates fixture corpora and scaffolds config files.

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mwc/config.hpp"
#include "mwc/corpus.hpp"
#include "mwc/errors.hpp"
#include "mwc/registry.hpp"
#include "mwc/report.hpp"
#include "mwc/scan.hpp"
#include "mwc/severity.hpp"
#include "mwc/version.hpp"

namespace {

constexpr int kExitUsage = 3;

// --config beats the MWC_CONFIG environment variable beats built-in defaults.
mwc::Config resolve_config(const std::string& config_path) {
    if (!config_path.empty()) return mwc::load_config_file(config_path, mwc::registry());
    if (const char* env = std::getenv("MWC_CONFIG"); env && *env)
        return mwc::load_config_file(env, mwc::registry());
    return mwc::default_config(mwc::registry());
}

void apply_rule_selection(mwc::Config& cfg, const std::vector<std::string>& ids) {
    std::vector<std::string> rules;
    for (const std::string& id : ids) {
        const mwc::CategoryRecord* rec = mwc::registry().find(id);
        if (!rec) throw mwc::UsageError("--rules: unknown rule id '" + id + "'");
        if (rec->strategy == mwc::Strategy::Advisory)
            throw mwc::UsageError("--rules: " + id +
                                  " is advisory-only and has no detector; it is "
                                  "raised through review pragmas instead");
        rules.push_back(id);
    }
    std::sort(rules.begin(), rules.end());
    rules.erase(std::unique(rules.begin(), rules.end()), rules.end());
    cfg.enabled_rules = std::move(rules);
}

int cmd_scan(const std::vector<std::string>& paths, const std::string& config_path,
             const std::string& format_flag, const std::vector<std::string>& rule_ids,
             const std::string& fail_on, int jobs) {
    mwc::Config cfg = resolve_config(config_path);
    if (!rule_ids.empty()) apply_rule_selection(cfg, rule_ids);
    if (!fail_on.empty()) cfg.fail_on = mwc::parse_severity(fail_on);
    const std::string format = format_flag.empty() ? cfg.format : format_flag;

    mwc::ScanOptions opts;
    opts.paths = paths;
    opts.jobs = jobs;
    mwc::ScanOutcome outcome = mwc::run_scan(opts, cfg);

    for (const mwc::Diag& d : outcome.parse_errors) std::cerr << mwc::format_diag(d) << "\n";
    for (const mwc::Diag& d : outcome.semantic_errors) std::cerr << mwc::format_diag(d) << "\n";
    std::cout << mwc::render_report(outcome.report, format);
    return outcome.exit_code;
}

int cmd_rules(const std::string& frame_code, const std::string& strategy_name) {
    const mwc::Registry& reg = mwc::registry();
    std::optional<mwc::Strategy> strategy;
    if (!strategy_name.empty()) strategy = mwc::parse_strategy(strategy_name);

    std::vector<const mwc::CategoryRecord*> records;
    if (!frame_code.empty()) {
        const mwc::Frame* frame = reg.find_frame(frame_code);
        if (!frame) throw mwc::UsageError("unknown frame code '" + frame_code + "'");
        for (const std::string& id : frame->member_ids) records.push_back(reg.find(id));
    } else {
        for (const mwc::CategoryRecord& rec : reg.records) records.push_back(&rec);
    }

    for (const mwc::CategoryRecord* rec : records) {
        if (!rec || (strategy && rec->strategy != *strategy)) continue;
        std::cout << std::left << std::setw(10) << rec->id << std::setw(13) << rec->frame
                  << std::setw(11) << mwc::strategy_name(rec->strategy) << std::setw(10)
                  << mwc::severity_name(rec->severity_default) << rec->box_title << "\n";
    }
    return 0;
}

int cmd_explain(const std::string& id) {
    const mwc::Registry& reg = mwc::registry();
    mwc::LookupResult lr = mwc::lookup(reg, id);
    const mwc::CategoryRecord& rec = *lr.record;
    const mwc::Frame* frame = reg.find_frame(rec.frame);

    std::cout << rec.id << " " << rec.box_title << "\n";
    std::cout << "  frame:     " << rec.frame;
    if (frame) std::cout << " - " << frame->name;
    std::cout << "\n";
    std::cout << "  strategy:  " << mwc::strategy_name(rec.strategy) << "\n";
    std::cout << "  severity:  " << mwc::severity_name(rec.severity_default) << "\n";
    if (rec.title_taxonomy) std::cout << "  catalog:   " << *rec.title_taxonomy << "\n";
    if (rec.title_frame) std::cout << "  listing:   " << *rec.title_frame << "\n";
    if (rec.analysis_hint) std::cout << "  analysis:  " << *rec.analysis_hint << "\n";
    std::cout << "  fix:       " << rec.fix_hint << "\n";
    if (!rec.aliases.empty()) {
        std::cout << "  aliases:   ";
        for (std::size_t i = 0; i < rec.aliases.size(); ++i)
            std::cout << (i ? ", " : "") << rec.aliases[i];
        std::cout << "\n";
    }
    if (!lr.note.empty()) std::cout << "  note:      " << lr.note << "\n";
    return 0;
}

int cmd_map(const std::string& id) {
    std::optional<std::string> query;
    if (!id.empty()) query = id;
    std::vector<const mwc::SwcCrosswalkEntry*> rows = mwc::swc_crosswalk(mwc::registry(), query);
    if (rows.empty()) {
        std::cout << "no crosswalk rows mention " << id << "\n";
        return 0;
    }
    for (const mwc::SwcCrosswalkEntry* row : rows) {
        std::cout << row->aspect << "\n";
        std::cout << "  SWC: " << row->swc_side << "\n";
        std::cout << "  MWC: " << row->mwc_side << "\n";
        for (const auto& [swc, mwc_id] : row->direct_id_pairs)
            std::cout << "  pair: " << swc << " <-> " << mwc_id << "\n";
    }
    return 0;
}

int cmd_eval(const std::string& corpus_dir, const std::string& config_path) {
    mwc::Config cfg = resolve_config(config_path);
    std::vector<mwc::Fixture> fixtures = mwc::load_corpus(corpus_dir);
    mwc::CorpusMetrics metrics = mwc::evaluate_corpus(fixtures, cfg);

    std::cout << std::left << std::setw(10) << "rule" << std::right << std::setw(9)
              << "expected" << std::setw(6) << "hit" << std::setw(8) << "missed"
              << std::setw(10) << "fixed-fp" << "\n";
    for (const mwc::RuleMetrics& rm : metrics.per_rule) {
        std::cout << std::left << std::setw(10) << rm.rule_id << std::right << std::setw(9)
                  << (rm.tp + rm.fn) << std::setw(6) << rm.tp << std::setw(8) << rm.fn
                  << std::setw(10) << rm.fp_fixed << "\n";
    }
    std::ostringstream recall;
    recall << std::fixed << std::setprecision(3) << metrics.recall();
    std::cout << "recall: " << recall.str() << "\n";
    std::cout << "fixed-set false positives: " << metrics.fp_fixed_total << "\n";
    std::cout << "corpus gate: " << (metrics.gate_passed() ? "PASS" : "FAIL") << "\n";
    for (const std::string& failure : metrics.failures)
        std::cerr << "mismatch: " << failure << "\n";
    return metrics.gate_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(mwc::kToolName) + " " + mwc::kToolVersion +
                 " - Move-style smart-contract weakness scanner"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(mwc::kToolName) + " " + mwc::kToolVersion);

    std::vector<std::string> scan_paths;
    std::string scan_config, scan_format, scan_fail_on;
    std::vector<std::string> scan_rules;
    int scan_jobs = 1;
    CLI::App* scan = app.add_subcommand("scan", "Scan .move files or directories");
    scan->add_option("paths", scan_paths, "Files or directories to scan")
        ->required()
        ->expected(-1);
    scan->add_option("--config", scan_config, "Config file (JSON); MWC_CONFIG is the fallback");
    scan->add_option("--format", scan_format, "Report format")
        ->check(CLI::IsMember({"json", "sarif", "md"}));
    scan->add_option("--rules", scan_rules, "Comma-separated rule ids to enable")
        ->delimiter(',');
    scan->add_option("--fail-on", scan_fail_on, "Verdict threshold")
        ->check(CLI::IsMember({"low", "medium", "high", "critical"}));
    scan->add_option("--jobs", scan_jobs, "Parse worker threads")
        ->check(CLI::PositiveNumber);

    std::string rules_frame, rules_strategy;
    CLI::App* rules = app.add_subcommand("rules", "List catalog rules");
    rules->add_option("--frame", rules_frame, "Only rules of this frame code");
    rules->add_option("--strategy", rules_strategy, "Only rules using this strategy")
        ->check(CLI::IsMember({"syntactic", "flow", "advisory"}));

    std::string explain_id;
    CLI::App* explain = app.add_subcommand("explain", "Describe one rule");
    explain->add_option("id", explain_id, "Rule id, e.g. MWC-103")->required();

    std::string map_id;
    CLI::App* map = app.add_subcommand("map", "Show the SWC crosswalk");
    map->add_option("id", map_id, "Restrict to rows mentioning this MWC id");

    std::string eval_corpus, eval_config;
    CLI::App* eval = app.add_subcommand("eval", "Score a vuln/fixed fixture corpus");
    eval->add_option("--corpus", eval_corpus, "Corpus directory")->required();
    eval->add_option("--config", eval_config, "Config file (JSON)");

    CLI::App* init = app.add_subcommand("init-config", "Print the default config JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*scan)
            return cmd_scan(scan_paths, scan_config, scan_format, scan_rules, scan_fail_on,
                            scan_jobs);
        if (*rules) return cmd_rules(rules_frame, rules_strategy);
        if (*explain) return cmd_explain(explain_id);
        if (*map) return cmd_map(map_id);
        if (*eval) return cmd_eval(eval_corpus, eval_config);
        if (*init) {
            std::cout << mwc::default_config_json(mwc::registry());
            return 0;
        }
    } catch (const mwc::MwcError& e) {
        std::cerr << "mwc: error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "mwc: internal error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
