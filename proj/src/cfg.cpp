// SPDX-License-Identifier: Apache-2.0
#include "mwc/cfg.hpp"

#include <algorithm>
#include <deque>

namespace mwc {

const char* edge_kind_name(EdgeKind k) {
    switch (k) {
        case EdgeKind::Fallthrough: return "fallthrough";
        case EdgeKind::BranchTrue: return "branch-true";
        case EdgeKind::BranchFalse: return "branch-false";
        case EdgeKind::LoopBack: return "loop-back";
    }
    return "fallthrough";
}

std::vector<int> Cfg::successors(int block) const {
    std::vector<int> out;
    for (const CfgEdge& e : edges)
        if (e.from == block) out.push_back(e.to);
    return out;
}

std::vector<int> Cfg::predecessors(int block) const {
    std::vector<int> out;
    for (const CfgEdge& e : edges)
        if (e.to == block) out.push_back(e.from);
    return out;
}

namespace {

class CfgBuilder {
  public:
    Cfg build(const FunctionDecl& fn) {
        cfg_.entry = new_block();
        BuildEnd end = emit_block(fn.body, cfg_.entry);
        (void)end;
        cfg_.stmt_count = next_index_;
        return std::move(cfg_);
    }

  private:
    Cfg cfg_;
    int next_index_ = 0;

    struct BuildEnd {
        int block;        // block execution falls out of
        bool terminated;  // a return ended every path through this fragment
    };

    int new_block() {
        int id = static_cast<int>(cfg_.blocks.size());
        cfg_.blocks.push_back(BasicBlock{id, {}});
        return id;
    }

    void edge(int from, int to, EdgeKind kind) {
        cfg_.edges.push_back(CfgEdge{from, to, kind});
    }

    void append(int block, CfgStmt s) {
        s.index = next_index_++;
        cfg_.blocks[block].stmts.push_back(std::move(s));
    }

    BuildEnd emit_block(const Block& b, int entry) {
        int cur = entry;
        bool terminated = false;
        for (const Stmt& s : b.stmts) {
            if (terminated) {
                // Code after a return: fresh block with no incoming edges.
                cur = new_block();
                terminated = false;
            }
            if (const auto* ifs = std::get_if<IfStmt>(&s.node)) {
                CfgStmt cs;
                cs.stmt = &s;
                cs.is_condition = true;
                cs.span = s.span;
                append(cur, std::move(cs));

                int then_start = new_block();
                edge(cur, then_start, EdgeKind::BranchTrue);
                BuildEnd then_end = emit_block(ifs->then_block, then_start);

                if (ifs->else_block) {
                    int else_start = new_block();
                    edge(cur, else_start, EdgeKind::BranchFalse);
                    BuildEnd else_end = emit_block(*ifs->else_block, else_start);
                    if (then_end.terminated && else_end.terminated) {
                        terminated = true;
                        continue;
                    }
                    int join = new_block();
                    if (!then_end.terminated)
                        edge(then_end.block, join, EdgeKind::Fallthrough);
                    if (!else_end.terminated)
                        edge(else_end.block, join, EdgeKind::Fallthrough);
                    cur = join;
                } else {
                    int join = new_block();
                    edge(cur, join, EdgeKind::BranchFalse);
                    if (!then_end.terminated)
                        edge(then_end.block, join, EdgeKind::Fallthrough);
                    cur = join;
                }
                continue;
            }
            if (const auto* wh = std::get_if<WhileStmt>(&s.node)) {
                int guard = new_block();
                edge(cur, guard, EdgeKind::Fallthrough);
                CfgStmt cs;
                cs.stmt = &s;
                cs.is_condition = true;
                cs.span = s.span;
                append(guard, std::move(cs));

                int body_start = new_block();
                edge(guard, body_start, EdgeKind::BranchTrue);
                BuildEnd body_end = emit_block(wh->body, body_start);
                if (!body_end.terminated)
                    edge(body_end.block, guard, EdgeKind::LoopBack);

                int exit = new_block();
                edge(guard, exit, EdgeKind::BranchFalse);
                cur = exit;
                continue;
            }
            CfgStmt cs;
            cs.stmt = &s;
            cs.span = s.span;
            append(cur, std::move(cs));
            if (std::holds_alternative<ReturnStmt>(s.node)) terminated = true;
        }
        if (b.trailing) {
            if (terminated) {
                cur = new_block();
                terminated = false;
            }
            CfgStmt cs;
            cs.trailing = b.trailing.get();
            cs.span = b.trailing->span;
            append(cur, std::move(cs));
        }
        return BuildEnd{cur, terminated};
    }
};

}  // namespace

Cfg build_cfg(const FunctionDecl& fn) {
    CfgBuilder builder;
    return builder.build(fn);
}

std::vector<bool> reachable_set(const Cfg& cfg) {
    std::vector<bool> seen(cfg.blocks.size(), false);
    std::deque<int> work{cfg.entry};
    seen[cfg.entry] = true;
    while (!work.empty()) {
        int b = work.front();
        work.pop_front();
        for (const CfgEdge& e : cfg.edges) {
            if (e.from == b && !seen[e.to]) {
                seen[e.to] = true;
                work.push_back(e.to);
            }
        }
    }
    return seen;
}

namespace {

bool stmt_is_assert(const CfgStmt& cs) {
    return cs.stmt && std::holds_alternative<AssertStmt>(cs.stmt->node);
}

const Expr* assert_condition(const CfgStmt& cs) {
    const auto& a = std::get<AssertStmt>(cs.stmt->node);
    return a.cond.get();
}

const Expr* condition_expr(const CfgStmt& cs) {
    if (const auto* ifs = std::get_if<IfStmt>(&cs.stmt->node)) return ifs->cond.get();
    if (const auto* wh = std::get_if<WhileStmt>(&cs.stmt->node)) return wh->cond.get();
    return nullptr;
}

// Does executing the whole block pass a satisfying guard?
bool block_satisfies(const Cfg& cfg, int block, const GuardPredicate& pred) {
    for (const CfgStmt& cs : cfg.blocks[block].stmts) {
        if (stmt_is_assert(cs) && pred(GuardFact{assert_condition(cs), true}))
            return true;
        if (cs.is_condition) {
            const Expr* cond = condition_expr(cs);
            if (cond && pred(GuardFact{cond, false})) return true;
        }
    }
    return false;
}

}  // namespace

bool check_dominating_guard(const Cfg& cfg, UseSite use, const GuardPredicate& pred) {
    // unguarded[b]: some path reaches the START of b without passing a guard.
    std::vector<char> unguarded(cfg.blocks.size(), 0);
    unguarded[cfg.entry] = 1;
    std::deque<int> work{cfg.entry};
    while (!work.empty()) {
        int b = work.front();
        work.pop_front();
        if (block_satisfies(cfg, b, pred)) continue;
        for (const CfgEdge& e : cfg.edges) {
            if (e.from == b && !unguarded[e.to]) {
                unguarded[e.to] = 1;
                work.push_back(e.to);
            }
        }
    }
    if (!unguarded[use.block]) return true;  // covers unreachable sites too
    // The start of the use block is reachable unguarded; asserts earlier in
    // the same block may still cover the use.
    const BasicBlock& blk = cfg.blocks[use.block];
    for (int i = 0; i < use.stmt_index && i < static_cast<int>(blk.stmts.size()); ++i) {
        const CfgStmt& cs = blk.stmts[i];
        if (stmt_is_assert(cs) && pred(GuardFact{assert_condition(cs), true}))
            return true;
    }
    return false;
}

std::vector<EffectWitness> order_of_effects(const Cfg& cfg,
                                            const std::vector<EffectSet>& effects,
                                            const EffectPredicate& first,
                                            const EffectPredicate& second) {
    const int n = static_cast<int>(cfg.blocks.size());
    // reach[a][b]: b is reachable from a via one or more edges.
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (int a = 0; a < n; ++a) {
        std::deque<int> work;
        for (const CfgEdge& e : cfg.edges)
            if (e.from == a && !reach[a][e.to]) {
                reach[a][e.to] = 1;
                work.push_back(e.to);
            }
        while (!work.empty()) {
            int b = work.front();
            work.pop_front();
            for (const CfgEdge& e : cfg.edges)
                if (e.from == b && !reach[a][e.to]) {
                    reach[a][e.to] = 1;
                    work.push_back(e.to);
                }
        }
    }

    std::vector<EffectWitness> out;
    for (const BasicBlock& b1 : cfg.blocks) {
        for (int i = 0; i < static_cast<int>(b1.stmts.size()); ++i) {
            if (!first(effects[b1.stmts[i].index])) continue;
            // Later statements in the same block.
            for (int k = i + 1; k < static_cast<int>(b1.stmts.size()); ++k) {
                if (second(effects[b1.stmts[k].index]))
                    out.push_back(EffectWitness{b1.id, i, b1.id, k});
            }
            // Statements in blocks reachable from here.
            for (const BasicBlock& b2 : cfg.blocks) {
                if (!reach[b1.id][b2.id]) continue;
                for (int k = 0; k < static_cast<int>(b2.stmts.size()); ++k) {
                    if (second(effects[b2.stmts[k].index]))
                        out.push_back(EffectWitness{b1.id, i, b2.id, k});
                }
            }
        }
    }
    return out;
}

std::vector<EffectSet> cfg_effects(const Cfg& cfg, const FunctionBindings& bindings,
                                   const Config& cfg_opts) {
    std::vector<EffectSet> out(cfg.stmt_count);
    for (const BasicBlock& b : cfg.blocks) {
        for (const CfgStmt& cs : b.stmts)
            out[cs.index] = stmt_effects(cs.stmt, cs.trailing, bindings, cfg_opts);
    }
    return out;
}

}  // namespace mwc
