// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "mwc/config.hpp"
#include "mwc/errors.hpp"

namespace mwc {

struct ExpectedFinding {
    std::string rule;
    int line = 0;
};

// One vuln/fixed fixture pair under corpus/<rule>/.
struct Fixture {
    std::string rule_id;
    std::string name;        // fixture base name
    std::string vuln_path;
    std::string fixed_path;
    std::vector<ExpectedFinding> expected;  // applies to the vuln file
};

// Loads corpus/<MWC-xxx>/ directories. Throws CorpusError on an unknown or
// advisory rule directory, a missing vuln/fixed pair, or malformed
// expected.json.
std::vector<Fixture> load_corpus(const std::string& dir);

struct RuleMetrics {
    std::string rule_id;
    int tp = 0;
    int fn = 0;
    int fp_fixed = 0;  // same-rule findings on the fixed variant
};

struct CorpusMetrics {
    std::vector<RuleMetrics> per_rule;
    int tp_total = 0;
    int fn_total = 0;
    int fp_fixed_total = 0;
    std::vector<std::string> failures;  // human-readable mismatches

    double recall() const {
        int denom = tp_total + fn_total;
        return denom == 0 ? 1.0 : static_cast<double>(tp_total) / denom;
    }
    bool gate_passed() const { return fn_total == 0 && fp_fixed_total == 0; }
};

// Scans each fixture in isolation and scores findings against expectations.
// A true positive is the expected rule reported at the exact expected line;
// findings of other rules are ignored on both variants.
CorpusMetrics evaluate_corpus(const std::vector<Fixture>& fixtures,
                              const Config& cfg);

}  // namespace mwc
