// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

#include "mwc/ast.hpp"
#include "mwc/effects.hpp"

namespace mwc {

enum class EdgeKind { Fallthrough, BranchTrue, BranchFalse, LoopBack };

const char* edge_kind_name(EdgeKind k);

// One statement slot inside a basic block. If/While statements occupy the
// guard position of their block (`is_condition`); a block's trailing
// expression is carried with `stmt == nullptr`.
struct CfgStmt {
    const Stmt* stmt = nullptr;
    const Expr* trailing = nullptr;
    bool is_condition = false;
    int index = 0;  // dense per-function index, assigned in construction order
    Span span;
};

struct BasicBlock {
    int id = 0;
    std::vector<CfgStmt> stmts;
};

struct CfgEdge {
    int from = 0;
    int to = 0;
    EdgeKind kind = EdgeKind::Fallthrough;
};

struct Cfg {
    std::vector<BasicBlock> blocks;
    std::vector<CfgEdge> edges;
    int entry = 0;
    int stmt_count = 0;

    std::vector<int> successors(int block) const;
    std::vector<int> predecessors(int block) const;
};

// Builds the control-flow graph of a function body. Blocks are created in
// source order; `return` terminates its block (statements after it start an
// unreachable block with no incoming edges).
Cfg build_cfg(const FunctionDecl& fn);

// Block ids reachable from entry by following edges.
std::vector<bool> reachable_set(const Cfg& cfg);

// A guard the analysis may credit: either an assert statement's condition or
// an If/While branch condition (both outgoing edges count as checked).
struct GuardFact {
    const Expr* condition = nullptr;
    bool is_assert = false;
};

using GuardPredicate = std::function<bool(const GuardFact&)>;

struct UseSite {
    int block = 0;
    int stmt_index = 0;  // position within the block's stmts
};

// True when every path from entry to the use site passes a statement or
// branch condition satisfying `pred` before reaching it. Vacuously true for
// unreachable use sites.
bool check_dominating_guard(const Cfg& cfg, UseSite use, const GuardPredicate& pred);

using EffectPredicate = std::function<bool(const EffectSet&)>;

struct EffectWitness {
    int first_block = 0;
    int first_index = 0;  // position within block
    int second_block = 0;
    int second_index = 0;
};

// All ordered statement pairs (s1, s2) where s1 satisfies `first`, s2
// satisfies `second`, and s2 can execute after s1 (same block later, or via
// any edge path). `effects` is indexed by CfgStmt::index.
std::vector<EffectWitness> order_of_effects(const Cfg& cfg,
                                            const std::vector<EffectSet>& effects,
                                            const EffectPredicate& first,
                                            const EffectPredicate& second);

// Effects for every CfgStmt, indexed by CfgStmt::index.
std::vector<EffectSet> cfg_effects(const Cfg& cfg, const FunctionBindings& bindings,
                                   const Config& cfg_opts);

}  // namespace mwc
