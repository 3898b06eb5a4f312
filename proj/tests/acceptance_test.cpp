// SPDX-License-Identifier: Apache-2.0
//
// Release acceptance gate. Each numbered criterion prints exactly one
// PASS/FAIL line; the process exits with the number of failed criteria.
// Compile-time inputs: MWC_CORPUS_DIR (fixture corpus), MWC_REGISTRY_JSON
// (unused here but kept uniform), MWC_CLI_PATH (the built `mwc` binary).

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "mwc/cfg.hpp"
#include "mwc/config.hpp"
#include "mwc/corpus.hpp"
#include "mwc/detectors.hpp"
#include "mwc/model.hpp"
#include "mwc/parser.hpp"
#include "mwc/printer.hpp"
#include "mwc/registry.hpp"
#include "mwc/report.hpp"
#include "mwc/scan.hpp"

#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace mwc;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Accumulates failure text for one criterion; empty means PASS.
struct Check {
    std::string errors;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) errors += (errors.empty() ? "" : "; ") + what;
    }
};

// ---------------------------------------------------------------------------
// 1. Registry integrity
// ---------------------------------------------------------------------------

void criterion_registry(Check& c) {
    auto start = Clock::now();
    const Registry& reg = registry();

    std::set<int> numbers;
    for (const CategoryRecord& r : reg.records) numbers.insert(r.number);
    c.require(numbers.size() == 37, "expected 37 distinct category numbers");
    c.require(*numbers.begin() == 100 && *numbers.rbegin() == 136,
              "numbers must span 100-136");
    c.require(reg.records.size() == 38, "expected 38 records (120a/120b split)");
    c.require(reg.find("MWC-120a") != nullptr && reg.find("MWC-120b") != nullptr,
              "both MWC-120a and MWC-120b must exist");

    const std::map<std::string, int> primary_counts = {
        {"BMI", 3}, {"IMI", 3}, {"SRS", 4}, {"MTS", 3}, {"GSM", 3}, {"FLA", 4}};
    for (const auto& [code, count] : primary_counts) {
        const Frame* f = reg.find_frame(code);
        if (!f) {
            c.require(false, "frame " + code + " missing");
            continue;
        }
        c.require(!f->supplementary, code + " must be a primary frame");
        c.require(static_cast<int>(f->member_ids.size()) == count,
                  code + " must list " + std::to_string(count) + " members");
    }

    bool pair_found = false;
    for (const SwcCrosswalkEntry& e : reg.crosswalk)
        for (const auto& [swc, mwc_id] : e.direct_id_pairs)
            if (swc == "SWC-101" && mwc_id == "MWC-101") pair_found = true;
    c.require(pair_found, "crosswalk must pair SWC-101 with MWC-101");

    double elapsed = ms_since(start);
    c.require(elapsed < 100.0, "registry checks took " + std::to_string(elapsed) +
                                   " ms (budget 100 ms)");
    char buf[64];
    std::snprintf(buf, sizeof buf, "38 records, %.1f ms", elapsed);
    c.detail = buf;
}

// ---------------------------------------------------------------------------
// 2. Corpus gate
// ---------------------------------------------------------------------------

void criterion_corpus_gate(Check& c) {
    auto start = Clock::now();
    std::vector<Fixture> fixtures = load_corpus(MWC_CORPUS_DIR);
    CorpusMetrics m = evaluate_corpus(fixtures, default_config(registry()));
    double elapsed = ms_since(start);

    std::set<std::string> covered;
    for (const RuleMetrics& rm : m.per_rule) {
        covered.insert(rm.rule_id);
        if (rm.fn != 0)
            c.require(false, rm.rule_id + " missed " + std::to_string(rm.fn) +
                                 " expected finding(s)");
        if (rm.fp_fixed != 0)
            c.require(false, rm.rule_id + " fired " + std::to_string(rm.fp_fixed) +
                                 " time(s) on its fixed fixture");
    }
    for (const CategoryRecord& r : registry().records)
        if (r.strategy != Strategy::Advisory)
            c.require(covered.count(r.id) == 1, r.id + " has no corpus fixture");

    c.require(m.recall() == 1.0, "recall below 1.0");
    c.require(m.fp_fixed_total == 0, "fixed-set false positives present");
    c.require(elapsed < 1000.0, "corpus evaluation took " +
                                    std::to_string(elapsed) + " ms (budget 1 s)");
    char buf[96];
    std::snprintf(buf, sizeof buf, "%zu fixtures, recall %.3f, fixed-fp %d, %.0f ms",
                  fixtures.size(), m.recall(), m.fp_fixed_total, elapsed);
    c.detail = buf;
}

// ---------------------------------------------------------------------------
// 3. Parser totality and round-trip
// ---------------------------------------------------------------------------

void criterion_parser_roundtrip(Check& c) {
    int files = 0;
    for (const auto& path : testing_support::corpus_move_files()) {
        ++files;
        std::string text = testing_support::read_file(path);
        ParseResult first = parse_source(text, path.string());
        if (!first.ok()) {
            c.require(false, path.filename().string() + " does not parse");
            continue;
        }
        std::string printed = pretty_print(first.ast());
        ParseResult second = parse_source(printed, path.string());
        if (!second.ok()) {
            c.require(false, path.filename().string() +
                                 ": pretty output fails to reparse");
            continue;
        }
        c.require(equal(first.ast(), second.ast()),
                  path.filename().string() + ": round-trip changed the tree");
    }
    c.detail = std::to_string(files) + " files round-tripped";
}

// ---------------------------------------------------------------------------
// 4. Flow-analysis oracle equivalence
// ---------------------------------------------------------------------------

// Compares both analyses against the naive oracles on one graph. Returns the
// number of disagreements.
int compare_against_oracles(const oracles::SyntheticCfg& s) {
    int disagreements = 0;
    const Cfg& cfg = s.cfg;

    std::vector<bool> fast = reachable_set(cfg);
    std::set<int> slow = oracles::reachable_closure(cfg);
    for (int b = 0; b < static_cast<int>(cfg.blocks.size()); ++b)
        if (fast[b] != (slow.count(b) == 1)) ++disagreements;

    GuardPredicate pred = oracles::symbol_predicate();
    for (int b = 0; b < static_cast<int>(cfg.blocks.size()); ++b)
        for (int i = 0; i <= static_cast<int>(cfg.blocks[b].stmts.size()); ++i) {
            UseSite use{b, i};
            if (check_dominating_guard(cfg, use, pred) !=
                oracles::guard_holds(cfg, use, pred))
                ++disagreements;
        }
    return disagreements;
}

void criterion_flow_oracles(Check& c) {
    long long cases = 0;
    int disagreements = 0;

    // Exhaustive sweep: every graph with up to 3 blocks, every per-block
    // statement template, every edge subset.
    const auto& templates = oracles::block_templates();
    const int t = static_cast<int>(templates.size());
    for (int n = 1; n <= 3; ++n) {
        std::vector<int> assignment(n, 0);
        while (true) {
            const int edge_slots = n * n;
            for (int mask = 0; mask < (1 << edge_slots); ++mask) {
                oracles::SyntheticCfg s;
                for (int b = 0; b < n; ++b) s.add_block();
                for (int b = 0; b < n; ++b)
                    for (const auto& [kind, symbol] : templates[assignment[b]])
                        s.add_stmt(b, kind, symbol);
                for (int slot = 0; slot < edge_slots; ++slot)
                    if (mask & (1 << slot)) s.add_edge(slot / n, slot % n);
                disagreements += compare_against_oracles(s);
                ++cases;
            }
            int pos = n - 1;
            while (pos >= 0 && assignment[pos] == t - 1) assignment[pos--] = 0;
            if (pos < 0) break;
            ++assignment[pos];
        }
    }

    // Randomized sweep over larger graphs.
    std::mt19937 rng(424242);
    const int kRandom = 1200;
    for (int i = 0; i < kRandom; ++i) {
        oracles::SyntheticCfg s = oracles::random_cfg(rng, 12);
        disagreements += compare_against_oracles(s);
        ++cases;
    }

    c.require(disagreements == 0,
              std::to_string(disagreements) + " oracle disagreement(s)");
    c.detail = std::to_string(cases) + " graphs (" + std::to_string(kRandom) +
               " random up to 12 blocks), 0 disagreements";
    if (disagreements != 0)
        c.detail = std::to_string(cases) + " graphs compared";
}

// ---------------------------------------------------------------------------
// 5. Loop non-termination check
// ---------------------------------------------------------------------------

std::vector<Finding> loop_findings(const std::string& body) {
    std::string text = "module 0x1::Loop {\n    fun run() {\n" + body +
                       "    }\n}\n";
    testing_support::Analysis a = testing_support::analyze({{"loop.move", text}});
    return run_rule("MWC-103", a.model, default_config(registry()), a.sources);
}

void criterion_loop_check(Check& c) {
    std::vector<Finding> runaway = loop_findings(
        "        let mut i = 0;\n"
        "        while (i >= 0) {\n"
        "            i = i + 1;\n"
        "        }\n");
    c.require(runaway.size() == 1, "the runaway loop must be flagged once");

    std::vector<Finding> bounded = loop_findings(
        "        let mut i = 0;\n"
        "        while (i < 10) {\n"
        "            i = i + 1;\n"
        "        }\n");
    c.require(bounded.empty(), "the bounded loop must not be flagged");

    std::vector<Finding> decreasing = loop_findings(
        "        let mut i = 10;\n"
        "        while (i >= 0) {\n"
        "            i = i - 1;\n"
        "        }\n");
    c.require(decreasing.empty(), "the decreasing loop must not be flagged");
    c.detail = "runaway flagged, bounded and decreasing clean";
}

// ---------------------------------------------------------------------------
// 6. Scan determinism across worker counts
// ---------------------------------------------------------------------------

std::string run_cli(const std::string& args, int& exit_code) {
    std::string cmd = std::string("\"") + MWC_CLI_PATH + "\" " + args +
                      " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        exit_code = -1;
        return {};
    }
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

void criterion_determinism(Check& c) {
    // In-process first: the library contract.
    Config cfg = default_config(registry());
    ScanOptions one{{MWC_CORPUS_DIR}, 1};
    ScanOptions four{{MWC_CORPUS_DIR}, 4};
    std::string lib_one = render_json(run_scan(one, cfg).report);
    std::string lib_four = render_json(run_scan(four, cfg).report);
    c.require(lib_one == lib_four, "library scan differs across worker counts");
    c.require(!lib_one.empty(), "library scan produced no report");

    // Then the shipped binary, end to end.
    std::string corpus = std::string("\"") + MWC_CORPUS_DIR + "\"";
    int code_one = 0;
    int code_four = 0;
    std::string cli_one =
        run_cli("scan " + corpus + " --format json --jobs 1", code_one);
    std::string cli_four =
        run_cli("scan " + corpus + " --format json --jobs 4", code_four);
    c.require(!cli_one.empty(), "CLI produced no output");
    c.require(code_one == code_four, "CLI exit codes differ across worker counts");
    c.require(cli_one == cli_four, "CLI reports differ across worker counts");
    c.require(cli_one == lib_one, "CLI report differs from the library report");
    c.detail = std::to_string(cli_one.size()) + " bytes identical for 1 and 4 jobs";
}

// ---------------------------------------------------------------------------
// 7. Report contract
// ---------------------------------------------------------------------------

Finding synthetic_finding(std::mt19937& rng) {
    static const std::vector<std::string> ids = {"MWC-100", "MWC-103", "MWC-106",
                                                 "MWC-111", "MWC-113", "MWC-128"};
    static const Severity sevs[] = {Severity::Low, Severity::Medium,
                                    Severity::High, Severity::Critical};
    Finding f;
    f.rule_id = ids[rng() % ids.size()];
    const CategoryRecord* rec = registry().find(f.rule_id);
    f.frame = rec ? rec->frame : "BMI";
    f.severity = sevs[rng() % 4];
    f.confidence = rng() % 2 ? Confidence::Precise : Confidence::Heuristic;
    f.span = Span{"f" + std::to_string(rng() % 3) + ".move",
                  1 + static_cast<int>(rng() % 50),
                  1 + static_cast<int>(rng() % 20), 0};
    f.message = f.rule_id + " synthetic";
    f.fix_hint = "review";
    return f;
}

void criterion_report_contract(Check& c) {
    std::mt19937 rng(987654);
    const Severity sevs[] = {Severity::Low, Severity::Medium, Severity::High,
                             Severity::Critical};
    ReportStats stats;
    stats.total_lines = 10;

    std::vector<Report> sampled;
    for (int trial = 0; trial < 100; ++trial) {
        Config cfg = default_config(registry());
        cfg.fail_on = sevs[rng() % 4];
        std::vector<Finding> findings;
        const int n = static_cast<int>(rng() % 7);
        bool any_at_or_above = false;
        for (int i = 0; i < n; ++i) {
            findings.push_back(synthetic_finding(rng));
            if (static_cast<int>(findings.back().severity) >=
                static_cast<int>(cfg.fail_on))
                any_at_or_above = true;
        }
        Report r = build_report(std::move(findings), stats, cfg, {"x"}, 1);
        if (r.passed != !any_at_or_above)
            c.require(false, "verdict mismatch on trial " + std::to_string(trial));
        if (r.summary.size() != 8)
            c.require(false, "summary is not 8 sentences on trial " +
                                 std::to_string(trial));
        if (trial % 10 == 0) sampled.push_back(std::move(r));
    }

    c.require(sampled.size() == 10, "expected 10 sampled reports");
    for (const Report& r : sampled) {
        nlohmann::json doc = nlohmann::json::parse(render_sarif(r));
        std::size_t results = doc["runs"][0]["results"].size();
        if (results != r.findings.size())
            c.require(false, "SARIF results " + std::to_string(results) +
                                 " != findings " +
                                 std::to_string(r.findings.size()));
    }
    c.detail = "100 randomized verdicts, 10 SARIF samples";
}

// ---------------------------------------------------------------------------
// 8. Config monotonicity
// ---------------------------------------------------------------------------

using Key = std::tuple<std::string, std::string, int, int>;

std::multiset<Key> finding_keys(const std::vector<Finding>& findings,
                                const std::string& skip_rule = "") {
    std::multiset<Key> keys;
    for (const Finding& f : findings)
        if (f.rule_id != skip_rule)
            keys.insert({f.rule_id, f.span.file, f.span.line, f.span.column});
    return keys;
}

void criterion_config_monotonicity(Check& c) {
    Config base_cfg = default_config(registry());
    ScanOptions opts{{MWC_CORPUS_DIR}, 1};
    std::vector<Finding> base = run_scan(opts, base_cfg).report.findings;
    c.require(!base.empty(), "baseline corpus scan found nothing");

    int rules_checked = 0;
    for (const CategoryRecord& rec : registry().records) {
        if (rec.strategy == Strategy::Advisory) continue;
        ++rules_checked;
        Config cfg = base_cfg;
        cfg.enabled_rules.clear();
        for (const std::string& id : base_cfg.enabled_rules)
            if (id != rec.id) cfg.enabled_rules.push_back(id);

        std::vector<Finding> pruned = run_scan(opts, cfg).report.findings;
        if (finding_keys(pruned) != finding_keys(base, rec.id)) {
            c.require(false, "disabling " + rec.id +
                                 " did not remove exactly its findings");
            continue;
        }
        for (const Finding& f : pruned)
            if (f.rule_id == rec.id)
                c.require(false, rec.id + " still fired while disabled");
    }
    c.detail = std::to_string(rules_checked) + " single-rule exclusions verified";
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* label;
        std::function<void(Check&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "registry integrity and crosswalk", criterion_registry},
        {2, "corpus gate (recall 1.0, fixed-set fp 0)", criterion_corpus_gate},
        {3, "parser totality and print round-trip", criterion_parser_roundtrip},
        {4, "flow analyses match brute-force oracles", criterion_flow_oracles},
        {5, "runaway loop flagged, safe loops clean", criterion_loop_check},
        {6, "scan output identical across worker counts", criterion_determinism},
        {7, "report verdict, summary and SARIF contract", criterion_report_contract},
        {8, "disabling one rule removes exactly its findings",
         criterion_config_monotonicity},
    };

    int failures = 0;
    for (const Criterion& cr : criteria) {
        Check check;
        try {
            cr.run(check);
        } catch (const std::exception& e) {
            check.require(false, std::string("exception: ") + e.what());
        }
        if (check.errors.empty()) {
            std::cout << "criterion " << cr.id << ": PASS — " << cr.label;
            if (!check.detail.empty()) std::cout << " [" << check.detail << "]";
            std::cout << "\n";
        } else {
            ++failures;
            std::cout << "criterion " << cr.id << ": FAIL — " << cr.label << ": "
                      << check.errors << "\n";
        }
    }
    std::cout.flush();
    return failures;
}
