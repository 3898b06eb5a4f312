// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <string>

#include "mwc/config.hpp"
#include "mwc/corpus.hpp"
#include "mwc/errors.hpp"
#include "mwc/registry.hpp"

#include "support/helpers.hpp"

using namespace mwc;
namespace fs = std::filesystem;

namespace {

Config default_cfg() { return default_config(registry()); }

// A scratch corpus directory, deleted on scope exit.
struct ScratchCorpus {
    fs::path root;

    ScratchCorpus() {
        root = fs::temp_directory_path() /
               ("mwc-corpus-test-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter()++));
        fs::create_directories(root);
    }
    ~ScratchCorpus() { fs::remove_all(root); }

    static int& counter() {
        static int n = 0;
        return n;
    }

    void write(const std::string& rel, const std::string& text) {
        fs::path p = root / rel;
        fs::create_directories(p.parent_path());
        std::ofstream out(p, std::ios::binary);
        out << text;
    }
};

const char* kVuln =
    "module 0x1::Asset {\n"
    "    public fun mint() {\n"
    "        supply = supply + 1000;\n"
    "    }\n"
    "}\n";
const char* kFixed =
    "module 0x1::Asset {\n"
    "    public fun mint(admin: &signer) {\n"
    "        supply = supply + 1000;\n"
    "    }\n"
    "}\n";
const char* kExpected =
    "{\"rule\": \"MWC-111\", \"findings\": [{\"rule\": \"MWC-111\", \"line\": 3}]}\n";

}  // namespace

TEST_CASE("the shipped corpus loads with one pair per checkable rule") {
    std::vector<Fixture> fixtures = load_corpus(MWC_CORPUS_DIR);
    CHECK(fixtures.size() == 30);
    std::set<std::string> rules;
    for (const Fixture& f : fixtures) {
        rules.insert(f.rule_id);
        CHECK(fs::exists(f.vuln_path));
        CHECK(fs::exists(f.fixed_path));
        REQUIRE_FALSE(f.expected.empty());
        for (const ExpectedFinding& e : f.expected) {
            CHECK(e.rule == f.rule_id);
            CHECK(e.line > 0);
        }
    }
    std::set<std::string> checkable;
    for (const CategoryRecord& r : registry().records)
        if (r.strategy != Strategy::Advisory) checkable.insert(r.id);
    CHECK(rules == checkable);
}

TEST_CASE("the shipped corpus passes the gate") {
    CorpusMetrics m = evaluate_corpus(load_corpus(MWC_CORPUS_DIR), default_cfg());
    CHECK(m.recall() == doctest::Approx(1.0));
    CHECK(m.fp_fixed_total == 0);
    CHECK(m.fn_total == 0);
    CHECK(m.gate_passed());
    CHECK(m.failures.empty());
    CHECK(m.per_rule.size() == 30);
    for (const RuleMetrics& rm : m.per_rule) {
        INFO(rm.rule_id);
        CHECK(rm.tp >= 1);
        CHECK(rm.fn == 0);
        CHECK(rm.fp_fixed == 0);
    }
}

TEST_CASE("a minimal scratch corpus evaluates cleanly") {
    ScratchCorpus c;
    c.write("MWC-111/mint.vuln.move", kVuln);
    c.write("MWC-111/mint.fixed.move", kFixed);
    c.write("MWC-111/expected.json", kExpected);
    std::vector<Fixture> fixtures = load_corpus(c.root.string());
    REQUIRE(fixtures.size() == 1);
    CHECK(fixtures[0].rule_id == "MWC-111");
    CHECK(fixtures[0].name == "mint");
    CorpusMetrics m = evaluate_corpus(fixtures, default_cfg());
    CHECK(m.gate_passed());
}

TEST_CASE("missed findings and fixed-set hits fail the gate with messages") {
    ScratchCorpus c;
    c.write("MWC-111/mint.vuln.move", kVuln);
    // The "fixed" variant still mints without a signer: same-rule hit.
    c.write("MWC-111/mint.fixed.move", kVuln);
    c.write("MWC-111/expected.json",
            "{\"rule\": \"MWC-111\", \"findings\": ["
            "{\"rule\": \"MWC-111\", \"line\": 3},"
            "{\"rule\": \"MWC-111\", \"line\": 4}]}\n");
    CorpusMetrics m = evaluate_corpus(load_corpus(c.root.string()), default_cfg());
    CHECK_FALSE(m.gate_passed());
    CHECK(m.tp_total == 1);
    CHECK(m.fn_total == 1);  // nothing at line 4
    CHECK(m.fp_fixed_total == 1);
    CHECK(m.recall() == doctest::Approx(0.5));
    REQUIRE_FALSE(m.failures.empty());
    bool mentions_line = false;
    for (const std::string& f : m.failures)
        if (f.find("line 4") != std::string::npos) mentions_line = true;
    CHECK(mentions_line);
}

TEST_CASE("structural corpus problems are rejected") {
    {
        ScratchCorpus c;  // unknown rule directory
        c.write("MWC-999/x.vuln.move", kVuln);
        c.write("MWC-999/x.fixed.move", kFixed);
        c.write("MWC-999/expected.json", kExpected);
        CHECK_THROWS_AS((void)load_corpus(c.root.string()), CorpusError);
    }
    {
        ScratchCorpus c;  // advisory rules carry no fixtures
        c.write("MWC-112/x.vuln.move", kVuln);
        c.write("MWC-112/x.fixed.move", kFixed);
        c.write("MWC-112/expected.json",
                "{\"rule\": \"MWC-112\", \"findings\": [{\"rule\": \"MWC-112\", "
                "\"line\": 1}]}\n");
        CHECK_THROWS_AS((void)load_corpus(c.root.string()), CorpusError);
    }
    {
        ScratchCorpus c;  // missing fixed pair
        c.write("MWC-111/mint.vuln.move", kVuln);
        c.write("MWC-111/expected.json", kExpected);
        CHECK_THROWS_AS((void)load_corpus(c.root.string()), CorpusError);
    }
    {
        ScratchCorpus c;  // missing expectations
        c.write("MWC-111/mint.vuln.move", kVuln);
        c.write("MWC-111/mint.fixed.move", kFixed);
        CHECK_THROWS_AS((void)load_corpus(c.root.string()), CorpusError);
    }
    {
        ScratchCorpus c;  // two fixture pairs in one rule directory
        c.write("MWC-111/a.vuln.move", kVuln);
        c.write("MWC-111/a.fixed.move", kFixed);
        c.write("MWC-111/b.vuln.move", kVuln);
        c.write("MWC-111/b.fixed.move", kFixed);
        c.write("MWC-111/expected.json", kExpected);
        CHECK_THROWS_AS((void)load_corpus(c.root.string()), CorpusError);
    }
    {
        ScratchCorpus c;  // expectations must name the directory's rule
        c.write("MWC-111/mint.vuln.move", kVuln);
        c.write("MWC-111/mint.fixed.move", kFixed);
        c.write("MWC-111/expected.json",
                "{\"rule\": \"MWC-110\", \"findings\": [{\"rule\": \"MWC-110\", "
                "\"line\": 3}]}\n");
        CHECK_THROWS_AS((void)load_corpus(c.root.string()), CorpusError);
    }
    {
        ScratchCorpus c;  // malformed JSON
        c.write("MWC-111/mint.vuln.move", kVuln);
        c.write("MWC-111/mint.fixed.move", kFixed);
        c.write("MWC-111/expected.json", "{not json");
        CHECK_THROWS_AS((void)load_corpus(c.root.string()), CorpusError);
    }
    {
        ScratchCorpus c;  // non-positive line numbers
        c.write("MWC-111/mint.vuln.move", kVuln);
        c.write("MWC-111/mint.fixed.move", kFixed);
        c.write("MWC-111/expected.json",
                "{\"rule\": \"MWC-111\", \"findings\": [{\"rule\": \"MWC-111\", "
                "\"line\": 0}]}\n");
        CHECK_THROWS_AS((void)load_corpus(c.root.string()), CorpusError);
    }
    {
        ScratchCorpus c;  // fixtures must parse
        c.write("MWC-111/mint.vuln.move", "module 0x1::A { fun (");
        c.write("MWC-111/mint.fixed.move", kFixed);
        c.write("MWC-111/expected.json", kExpected);
        CHECK_THROWS_AS((void)evaluate_corpus(load_corpus(c.root.string()),
                                              default_cfg()),
                        CorpusError);
    }
    CHECK_THROWS_AS((void)load_corpus("/nonexistent/corpus-dir"), CorpusError);
}
