// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "mwc/config.hpp"
#include "mwc/findings.hpp"
#include "mwc/model.hpp"

namespace mwc {

struct DetectorInfo {
    std::string rule_id;
    Strategy strategy = Strategy::Syntactic;
    Confidence confidence = Confidence::Precise;
};

// One entry per checkable (non-advisory) rule, sorted by id.
const std::vector<DetectorInfo>& detector_catalog();

// Runs every enabled detector plus pragma processing over the model.
// Output is sorted by (file, line, rule_id) and deduplicated.
std::vector<Finding> run_all(const SemanticModel& model, const Config& cfg,
                             const std::vector<SourceFile>& sources);

// Runs one rule. Advisory or unknown ids throw UnsupportedRuleError.
std::vector<Finding> run_rule(const std::string& rule_id, const SemanticModel& model,
                              const Config& cfg,
                              const std::vector<SourceFile>& sources);

// While loops whose guard compares an unsigned counter with `>=` against a
// literal while no body assignment decreases the counter.
std::vector<const Stmt*> loop_nontermination(const FunctionAnalysis& fa);

struct LockConflict {
    const FunctionAnalysis* first = nullptr;   // acquires lock_a before lock_b
    const FunctionAnalysis* second = nullptr;  // acquires lock_b before lock_a
    std::string lock_a;  // canonical pair, lock_a < lock_b
    std::string lock_b;
    Span anchor;  // second function's earlier acquisition of the pair
};

// Function pairs that acquire the same two locks in opposite orders.
std::vector<LockConflict> lock_order_conflicts(const SemanticModel& model,
                                               const Config& cfg);

}  // namespace mwc
