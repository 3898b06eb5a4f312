// SPDX-License-Identifier: Apache-2.0
#include "mwc/detectors.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <set>
#include <tuple>

#include "mwc/lexer.hpp"
#include "mwc/registry.hpp"

namespace mwc {

bool finding_order(const Finding& a, const Finding& b) {
    if (a.span.file != b.span.file) return a.span.file < b.span.file;
    if (a.span.line != b.span.line) return a.span.line < b.span.line;
    if (a.rule_id != b.rule_id) return a.rule_id < b.rule_id;
    return a.span.column < b.span.column;
}

namespace {

// ---------------------------------------------------------------------------
// Shared detector context and small helpers
// ---------------------------------------------------------------------------

struct Ctx {
    const SemanticModel& model;
    const Config& cfg;
    const std::vector<SourceFile>& sources;
    const Registry& reg;
    std::map<const FunctionAnalysis*, std::vector<EffectSet>> effects;
    std::map<std::string, Confidence> confidence;

    const std::vector<EffectSet>& fx(const FunctionAnalysis& fa) const {
        return effects.at(&fa);
    }

    std::string line_text(const std::string& file, int line) const {
        for (const SourceFile& sf : sources) {
            if (sf.path != file) continue;
            int cur = 1;
            std::size_t start = 0;
            while (cur < line) {
                std::size_t nl = sf.text.find('\n', start);
                if (nl == std::string::npos) return "";
                start = nl + 1;
                ++cur;
            }
            std::size_t end = sf.text.find('\n', start);
            std::string s = sf.text.substr(start, end == std::string::npos
                                                      ? std::string::npos
                                                      : end - start);
            std::size_t a = s.find_first_not_of(" \t\r");
            std::size_t b = s.find_last_not_of(" \t\r");
            if (a == std::string::npos) return "";
            return s.substr(a, b - a + 1);
        }
        return "";
    }

    Finding make(const std::string& rule_id, const Span& span,
                 std::string message) const {
        const CategoryRecord* rec = reg.find(rule_id);
        Finding f;
        f.rule_id = rule_id;
        if (rec) {
            f.frame = rec->frame;
            f.severity = cfg.severity_for(*rec);
            f.fix_hint = rec->fix_hint;
        }
        // Rules without a checker (advisory pragmas) are always heuristic.
        auto it = confidence.find(rule_id);
        f.confidence = it == confidence.end() ? Confidence::Heuristic : it->second;
        f.span = span;
        f.message = std::move(message);
        f.snippet = line_text(span.file, span.line);
        return f;
    }
};

bool fn_is_public(const FunctionDecl& fn) {
    return fn.visibility == Visibility::Public || fn.visibility == Visibility::Entry;
}

bool fn_has_assert(const FunctionDecl& fn) {
    bool found = false;
    visit_block_stmts(fn.body, [&](const Stmt& s) {
        if (std::holds_alternative<AssertStmt>(s.node)) found = true;
    });
    return found;
}

// Final written name of an assignment target: field member or bare name.
std::string target_leaf_name(const Expr& target) {
    if (target.kind == Expr::Kind::Field) return target.name;
    if (target.kind == Expr::Kind::Name) return target.name;
    return "";
}

// Calls appearing anywhere in one CFG statement slot.
std::vector<const Expr*> stmt_calls(const CfgStmt& cs) {
    std::vector<const Expr*> out;
    auto grab = [&](const Expr& e) {
        if (e.kind == Expr::Kind::Call) out.push_back(&e);
    };
    if (cs.stmt)
        visit_stmt_exprs(*cs.stmt, grab);
    else if (cs.trailing)
        visit_expr(*cs.trailing, grab);
    return out;
}

bool cfgstmt_mentions(const CfgStmt& cs, const std::string& name) {
    bool found = false;
    auto check = [&](const Expr& e) {
        if (e.kind == Expr::Kind::Name && e.name == name) found = true;
    };
    if (cs.stmt)
        visit_stmt_exprs(*cs.stmt, check);
    else if (cs.trailing)
        visit_expr(*cs.trailing, check);
    return found;
}

bool expr_has_convention_ident(const Expr& e, const std::vector<std::string>& list) {
    for (const std::string& id : collect_identifiers(e))
        if (name_matches_any(id, list)) return true;
    return false;
}

bool type_uses_name(const TypeRef& t, const std::string& name) {
    if (t.kind == TypeRef::Kind::Named && t.name == name) return true;
    if (t.elem) return type_uses_name(*t.elem, name);
    return false;
}

bool is_unsigned_primitive(const TypeRef& t) {
    const TypeRef& s = strip_refs(t);
    return s.kind == TypeRef::Kind::Primitive && !s.name.empty() &&
           s.name[0] == 'u' && is_primitive_type_name(s.name);
}

// ---------------------------------------------------------------------------
// MWC-100: freeze flag set with no unfreeze path
// ---------------------------------------------------------------------------

void det_100(const Ctx& c, std::vector<Finding>& out) {
    for (const Ast* ast : c.model.asts) {
        for (const ModuleDecl& mod : ast->modules) {
            struct FreezeWrite {
                const Stmt* stmt;
                std::string field;
            };
            std::vector<FreezeWrite> true_writes;
            std::set<std::string> false_written;
            std::set<std::string> assert_idents;
            for (const FunctionDecl& fn : mod.functions) {
                visit_block_stmts(fn.body, [&](const Stmt& s) {
                    if (const auto* as = std::get_if<AssignStmt>(&s.node)) {
                        if (!as->target || !as->value) return;
                        std::string leaf = target_leaf_name(*as->target);
                        if (leaf.empty() ||
                            !name_matches_any(leaf, c.cfg.conventions.freeze_names))
                            return;
                        if (as->value->kind == Expr::Kind::BoolLit) {
                            if (as->value->bvalue)
                                true_writes.push_back({&s, leaf});
                            else
                                false_written.insert(leaf);
                        }
                    } else if (const auto* a = std::get_if<AssertStmt>(&s.node)) {
                        if (a->cond)
                            for (const std::string& id : collect_identifiers(*a->cond))
                                assert_idents.insert(id);
                    }
                });
            }
            for (const FreezeWrite& w : true_writes) {
                if (false_written.count(w.field)) continue;
                if (!assert_idents.count(w.field)) continue;
                out.push_back(c.make(
                    "MWC-100", w.stmt->span,
                    "'" + w.field + "' is set here and guards other operations, but no "
                    "function in module '" + mod.name + "' ever clears it"));
            }
        }
    }
}

// ---------------------------------------------------------------------------
// MWC-101: borrow_global without a dominating existence check
// ---------------------------------------------------------------------------

bool exists_guard_matches(const Expr& cond, const Expr& borrow) {
    bool ok = false;
    visit_expr(cond, [&](const Expr& e) {
        if (!is_exists_call(e)) return;
        if (e.args.empty() || borrow.args.empty()) return;
        if (!equal(*e.args[0], *borrow.args[0])) return;
        if (!e.type_args.empty() && !borrow.type_args.empty() &&
            !equal(e.type_args[0], borrow.type_args[0]))
            return;
        ok = true;
    });
    return ok;
}

void det_101(const Ctx& c, std::vector<Finding>& out) {
    for (const auto& fa : c.model.functions) {
        const Cfg& cfg = fa->cfg;
        for (const BasicBlock& b : cfg.blocks) {
            for (int i = 0; i < static_cast<int>(b.stmts.size()); ++i) {
                for (const Expr* call : stmt_calls(b.stmts[i])) {
                    if (call->path.empty()) continue;
                    const std::string& last = call->path.back();
                    if (last != "borrow_global" && last != "borrow_global_mut")
                        continue;
                    auto pred = [&](const GuardFact& f) {
                        return f.condition && exists_guard_matches(*f.condition, *call);
                    };
                    if (!check_dominating_guard(cfg, UseSite{b.id, i}, pred))
                        out.push_back(c.make(
                            "MWC-101", b.stmts[i].span,
                            "'" + call_path_string(*call) + "' can abort: no path to "
                            "this statement checks the resource exists first"));
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// MWC-102: state change followed by an abortable call with no prior guard
// ---------------------------------------------------------------------------

void det_102(const Ctx& c, std::vector<Finding>& out) {
    for (const auto& fa : c.model.functions) {
        const auto& fx = c.fx(*fa);
        // Earliest assert line in the function, if any.
        int first_assert_line = -1;
        visit_block_stmts(fa->decl->body, [&](const Stmt& s) {
            if (std::holds_alternative<AssertStmt>(s.node)) {
                if (first_assert_line < 0 || s.span.line < first_assert_line)
                    first_assert_line = s.span.line;
            }
        });
        for (const BasicBlock& b : fa->cfg.blocks) {
            for (int i = 0; i < static_cast<int>(b.stmts.size()); ++i) {
                const CfgStmt& s1 = b.stmts[i];
                const EffectSet& e1 = fx[s1.index];
                if (!e1.writes_global && !e1.external_call) continue;
                bool hit = false;
                for (int k = i + 1; k < static_cast<int>(b.stmts.size()) && !hit;
                     ++k) {
                    const CfgStmt& s2 = b.stmts[k];
                    if (s2.stmt && std::holds_alternative<AssertStmt>(s2.stmt->node))
                        continue;
                    if (stmt_calls(s2).empty()) continue;
                    if (first_assert_line >= 0 && first_assert_line < s1.span.line)
                        continue;
                    hit = true;
                }
                if (hit)
                    out.push_back(c.make(
                        "MWC-102", s1.span,
                        "this state change is followed by a call that can abort; "
                        "a later failure cannot roll it back"));
            }
        }
    }
}

// ---------------------------------------------------------------------------
// MWC-103: unsigned counter loop that never terminates
// ---------------------------------------------------------------------------

void det_103(const Ctx& c, std::vector<Finding>& out) {
    for (const auto& fa : c.model.functions) {
        for (const Stmt* s : loop_nontermination(*fa))
            out.push_back(c.make(
                "MWC-103", s->span,
                "loop guard can never become false: the counter is unsigned and "
                "no body update decreases it"));
    }
}

// ---------------------------------------------------------------------------
// MWC-104: address parameter reaches an external call unvalidated
// ---------------------------------------------------------------------------

void det_104(const Ctx& c, std::vector<Finding>& out) {
    for (const auto& fa : c.model.functions) {
        std::set<std::string> addr_params;
        for (const Param& p : fa->decl->params) {
            const TypeRef& t = strip_refs(p.type);
            if (t.kind == TypeRef::Kind::Primitive && t.name == "address")
                addr_params.insert(p.name);
        }
        if (addr_params.empty()) continue;
        for (const BasicBlock& b : fa->cfg.blocks) {
            for (int i = 0; i < static_cast<int>(b.stmts.size()); ++i) {
                for (const Expr* call : stmt_calls(b.stmts[i])) {
                    if (classify_call(call->path, c.cfg).cls != CallClass::External)
                        continue;
                    for (const auto& arg : call->args) {
                        if (!arg || arg->kind != Expr::Kind::Name) continue;
                        if (!addr_params.count(arg->name)) continue;
                        auto pred = [&](const GuardFact& f) {
                            return f.is_assert && f.condition &&
                                   expr_mentions_name(*f.condition, arg->name);
                        };
                        if (!check_dominating_guard(fa->cfg, UseSite{b.id, i}, pred))
                            out.push_back(c.make(
                                "MWC-104", b.stmts[i].span,
                                "address parameter '" + arg->name + "' reaches an "
                                "external call without any validating assert"));
                    }
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// MWC-105: unreachable statements
// ---------------------------------------------------------------------------

void det_105(const Ctx& c, std::vector<Finding>& out) {
    for (const auto& fa : c.model.functions) {
        if (fa->cfg.blocks.empty()) continue;
        std::vector<bool> reach = reachable_set(fa->cfg);
        for (const BasicBlock& b : fa->cfg.blocks) {
            if (reach[b.id] || b.stmts.empty()) continue;
            out.push_back(c.make(
                "MWC-105", b.stmts[0].span,
                "unreachable code: no path from the function entry gets here"));
        }
    }
}

// ---------------------------------------------------------------------------
// MWC-106: external call can re-enter before a later state write
// ---------------------------------------------------------------------------

void det_106(const Ctx& c, std::vector<Finding>& out) {
    for (const auto& fa : c.model.functions) {
        const auto& fx = c.fx(*fa);
        auto wit = order_of_effects(
            fa->cfg, fx, [](const EffectSet& e) { return e.external_call; },
            [](const EffectSet& e) { return e.writes_global; });
        std::set<std::pair<int, int>> firsts;
        for (const EffectWitness& w : wit) {
            if (!firsts.insert({w.first_block, w.first_index}).second) continue;
            const CfgStmt& cs = fa->cfg.blocks[w.first_block].stmts[w.first_index];
            out.push_back(c.make(
                "MWC-106", cs.span,
                "external call happens before module state is updated; a re-entrant "
                "caller observes stale state"));
        }
    }
}

// ---------------------------------------------------------------------------
// MWC-107: callback dispatch paired with state mutation
// ---------------------------------------------------------------------------

void det_107(const Ctx& c, std::vector<Finding>& out) {
    static const std::regex mutation_words("(state|mutat|modif)",
                                           std::regex::icase);
    for (const auto& fa : c.model.functions) {
        const auto& fx = c.fx(*fa);
        for (const BasicBlock& b : fa->cfg.blocks) {
            for (const CfgStmt& cs : b.stmts) {
                bool is_callback_call = false;
                for (const Expr* call : stmt_calls(cs)) {
                    if (classify_call(call->path, c.cfg).cls != CallClass::External)
                        continue;
                    for (const std::string& seg : call->path)
                        if (name_matches_any(seg, c.cfg.conventions.callback_names))
                            is_callback_call = true;
                }
                if (!is_callback_call) continue;
                bool later_write = false;
                for (const BasicBlock& b2 : fa->cfg.blocks)
                    for (const CfgStmt& cs2 : b2.stmts)
                        if (fx[cs2.index].writes_global && cs2.span.line > cs.span.line)
                            later_write = true;
                bool comment_mutation =
                    cs.stmt && std::regex_search(cs.stmt->trailing_comment,
                                                 mutation_words);
                if (later_write || comment_mutation)
                    out.push_back(c.make(
                        "MWC-107", cs.span,
                        "callback dispatch can mutate module state concurrently with "
                        "this function"));
            }
        }
    }
}

// ---------------------------------------------------------------------------
// MWC-108: storage write after an external call in the same block
// ---------------------------------------------------------------------------

void det_108(const Ctx& c, std::vector<Finding>& out) {
    for (const auto& fa : c.model.functions) {
        const auto& fx = c.fx(*fa);
        for (const BasicBlock& b : fa->cfg.blocks) {
            bool seen_external = false;
            for (const CfgStmt& cs : b.stmts) {
                const EffectSet& e = fx[cs.index];
                if (e.writes_global && seen_external)
                    out.push_back(c.make(
                        "MWC-108", cs.span,
                        "storage write interleaves with the preceding external call; "
                        "ordering is not atomic"));
                if (e.external_call) seen_external = true;
            }
        }
    }
}

// ---------------------------------------------------------------------------
// MWC-109: opposite lock acquisition orders
// ---------------------------------------------------------------------------

void det_109(const Ctx& c, std::vector<Finding>& out) {
    for (const LockConflict& lc : lock_order_conflicts(c.model, c.cfg)) {
        out.push_back(c.make(
            "MWC-109", lc.anchor,
            "'" + lc.second->decl->name + "' acquires '" + lc.lock_b + "' then '" +
                lc.lock_a + "' while '" + lc.first->decl->name +
                "' acquires them in the opposite order; the pair can deadlock"));
    }
}

// ---------------------------------------------------------------------------
// MWC-110: unchecked balance deduction
// ---------------------------------------------------------------------------

void det_110(const Ctx& c, std::vector<Finding>& out) {
    for (const auto& fa : c.model.functions) {
        if (fn_has_assert(*fa->decl)) continue;
        visit_block_stmts(fa->decl->body, [&](const Stmt& s) {
            const auto* as = std::get_if<AssignStmt>(&s.node);
            if (!as || !as->target || !as->value) return;
            std::string leaf = target_leaf_name(*as->target);
            if (leaf.empty() ||
                !name_matches_any(leaf, c.cfg.conventions.supply_names))
                return;
            if (as->value->kind == Expr::Kind::Binary && as->value->name == "-")
                out.push_back(c.make(
                    "MWC-110", s.span,
                    "'" + leaf + "' is reduced without any ownership or balance "
                    "assert in '" + fa->decl->name + "'"));
        });
    }
}

// ---------------------------------------------------------------------------
// MWC-111: supply mutation without signer or capability
// ---------------------------------------------------------------------------

void det_111(const Ctx& c, std::vector<Finding>& out) {
    for (const auto& fa : c.model.functions) {
        if (!fn_is_public(*fa->decl)) continue;
        bool has_authority = false;
        for (const Param& p : fa->decl->params) {
            const TypeRef& t = strip_refs(p.type);
            if (t.kind == TypeRef::Kind::Primitive && t.name == "signer")
                has_authority = true;
            if (t.kind == TypeRef::Kind::Named &&
                name_matches_any(t.name, c.cfg.conventions.capability_names))
                has_authority = true;
        }
        if (has_authority) continue;
        const auto& fx = c.fx(*fa);
        for (const BasicBlock& b : fa->cfg.blocks) {
            for (const CfgStmt& cs : b.stmts) {
                if (!cs.stmt || !fx[cs.index].writes_global) continue;
                const auto* as = std::get_if<AssignStmt>(&cs.stmt->node);
                if (!as || !as->target) continue;
                std::string leaf = target_leaf_name(*as->target);
                if (leaf.empty() ||
                    !name_matches_any(leaf, c.cfg.conventions.supply_names))
                    continue;
                out.push_back(c.make(
                    "MWC-111", cs.span,
                    "public '" + fa->decl->name + "' changes '" + leaf +
                        "' but takes no signer or capability parameter"));
            }
        }
    }
}

// ---------------------------------------------------------------------------
// MWC-113: cheap EVM entry point driving storage writes
// ---------------------------------------------------------------------------

void det_113(const Ctx& c, std::vector<Finding>& out) {
    for (const auto& fa : c.model.functions) {
        const auto& fx = c.fx(*fa);
        const CfgStmt* first_evm = nullptr;
        bool any_write = false;
        for (const BasicBlock& b : fa->cfg.blocks) {
            for (const CfgStmt& cs : b.stmts) {
                if (fx[cs.index].evm_call &&
                    (!first_evm || cs.index < first_evm->index))
                    first_evm = &cs;
                if (fx[cs.index].writes_global) any_write = true;
            }
        }
        if (first_evm && any_write)
            out.push_back(c.make(
                "MWC-113", first_evm->span,
                "EVM-priced call triggers Move storage writes in '" +
                    fa->decl->name + "'; execution cost is not reflected in gas"));
    }
}

// ---------------------------------------------------------------------------
// MWC-116: unconstrained generic in a storage-shaped function
// ---------------------------------------------------------------------------

void det_116(const Ctx& c, std::vector<Finding>& out) {
    for (const auto& fa : c.model.functions) {
        const FunctionDecl& fn = *fa->decl;
        if (!name_matches_any(fn.name, c.cfg.conventions.store_fn_names)) continue;
        for (const GenericParam& g : fn.generics) {
            if (!g.constraints.empty()) continue;
            bool used = false;
            for (const Param& p : fn.params)
                if (type_uses_name(p.type, g.name)) used = true;
            if (used)
                out.push_back(c.make(
                    "MWC-116", fn.span,
                    "generic '" + g.name + "' in '" + fn.name +
                        "' has no ability constraints; any type can be stored"));
        }
    }
}

// ---------------------------------------------------------------------------
// MWC-117: wildcard imports
// ---------------------------------------------------------------------------

void det_117(const Ctx& c, std::vector<Finding>& out) {
    for (const Ast* ast : c.model.asts) {
        for (const ModuleDecl& mod : ast->modules) {
            for (const UseDecl& u : mod.uses) {
                if (!u.wildcard) continue;
                std::string path;
                for (const std::string& seg : u.path)
                    path += (path.empty() ? "" : "::") + seg;
                out.push_back(c.make(
                    "MWC-117", u.span,
                    "wildcard import of '" + path +
                        "::*' pulls unreviewed names into scope"));
            }
        }
    }
}

// ---------------------------------------------------------------------------
// MWC-118: resource-typed parameter accepted without validation
// ---------------------------------------------------------------------------

void det_118(const Ctx& c, std::vector<Finding>& out) {
    for (const auto& fa : c.model.functions) {
        const FunctionDecl& fn = *fa->decl;
        if (!fn_is_public(fn) || fn_has_assert(fn)) continue;
        for (const Param& p : fn.params) {
            if (p.type.kind != TypeRef::Kind::Named) continue;
            const StructDecl* sd = c.model.find_struct(fa->ast, p.type.name);
            if (!sd || (!has_ability(*sd, "key") && !has_ability(*sd, "store")))
                continue;
            out.push_back(c.make(
                "MWC-118", fn.span,
                "public '" + fn.name + "' consumes resource '" + p.type.name +
                    "' with no validation of its contents"));
            break;
        }
    }
}

// ---------------------------------------------------------------------------
// MWC-119: capability wrapper with no runtime checks
// ---------------------------------------------------------------------------

void det_119(const Ctx& c, std::vector<Finding>& out) {
    for (const auto& fa : c.model.functions) {
        const FunctionDecl& fn = *fa->decl;
        if (!name_matches_any(fn.name, c.cfg.conventions.wrap_names)) continue;
        if (fn_has_assert(fn)) continue;
        for (const Param& p : fn.params) {
            const TypeRef& t = strip_refs(p.type);
            bool cap_name =
                name_matches_any(p.name, c.cfg.conventions.capability_names);
            bool cap_type = t.kind == TypeRef::Kind::Named &&
                            name_matches_any(t.name, c.cfg.conventions.capability_names);
            if (!cap_name && !cap_type) continue;
            out.push_back(c.make(
                "MWC-119", fn.span,
                "'" + fn.name + "' forwards capability '" + p.name +
                    "' without any permission check"));
            break;
        }
    }
}

// ---------------------------------------------------------------------------
// MWC-120a: signature verification with no nonce or context
// ---------------------------------------------------------------------------

void det_120a(const Ctx& c, std::vector<Finding>& out) {
    for (const auto& fa : c.model.functions) {
        for (const BasicBlock& b : fa->cfg.blocks) {
            for (const CfgStmt& cs : b.stmts) {
                for (const Expr* call : stmt_calls(cs)) {
                    if (classify_call(call->path, c.cfg).cls != CallClass::Crypto)
                        continue;
                    if (call->path.empty() ||
                        !name_matches_any(call->path.back(),
                                          c.cfg.conventions.verify_names))
                        continue;
                    bool has_context = false;
                    for (const auto& arg : call->args)
                        if (arg && expr_has_convention_ident(
                                       *arg, c.cfg.conventions.nonce_names))
                            has_context = true;
                    if (!has_context)
                        out.push_back(c.make(
                            "MWC-120a", cs.span,
                            "signature check '" + call_path_string(*call) +
                                "' binds no nonce or domain context; the signature "
                                "can be replayed"));
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// MWC-121: fallback effect with an unchecked path to exit
// ---------------------------------------------------------------------------

// True when some path from the start of `block` to a function exit crosses
// no assert statement.
bool unguarded_exit(const Cfg& cfg, int block, std::map<int, int>& memo) {
    auto it = memo.find(block);
    if (it != memo.end()) return it->second == 1;
    memo[block] = 0;  // in progress: a cycle alone proves nothing
    bool result;
    bool has_assert = false;
    for (const CfgStmt& cs : cfg.blocks[block].stmts)
        if (cs.stmt && std::holds_alternative<AssertStmt>(cs.stmt->node))
            has_assert = true;
    if (has_assert) {
        result = false;
    } else {
        std::vector<int> succ = cfg.successors(block);
        if (succ.empty()) {
            result = true;
        } else {
            result = false;
            for (int s : succ)
                if (unguarded_exit(cfg, s, memo)) result = true;
        }
    }
    memo[block] = result ? 1 : 2;
    return result;
}

void det_121(const Ctx& c, std::vector<Finding>& out) {
    for (const auto& fa : c.model.functions) {
        if (fa->decl->visibility != Visibility::Fallback) continue;
        const auto& fx = c.fx(*fa);
        for (const BasicBlock& b : fa->cfg.blocks) {
            for (int i = 0; i < static_cast<int>(b.stmts.size()); ++i) {
                const CfgStmt& cs = b.stmts[i];
                const EffectSet& e = fx[cs.index];
                if (!e.writes_global && !e.external_call) continue;
                if (stmt_calls(cs).empty()) continue;
                bool guarded_in_block = false;
                for (int k = i + 1; k < static_cast<int>(b.stmts.size()); ++k)
                    if (b.stmts[k].stmt &&
                        std::holds_alternative<AssertStmt>(b.stmts[k].stmt->node))
                        guarded_in_block = true;
                if (guarded_in_block) continue;
                std::map<int, int> memo;
                std::vector<int> succ = fa->cfg.successors(b.id);
                bool unchecked = succ.empty();
                for (int s : succ)
                    if (unguarded_exit(fa->cfg, s, memo)) unchecked = true;
                if (unchecked)
                    out.push_back(c.make(
                        "MWC-121", cs.span,
                        "fallback effect completes with no post-condition check on "
                        "some path to exit"));
            }
        }
    }
}

// ---------------------------------------------------------------------------
// MWC-123: discarded result of an internal call
// ---------------------------------------------------------------------------

void det_123(const Ctx& c, std::vector<Finding>& out) {
    for (const CallEdge& edge : c.model.call_graph) {
        if (!edge.resolved || !edge.resolved->return_type) continue;
        for (const BasicBlock& b : edge.caller->cfg.blocks) {
            for (const CfgStmt& cs : b.stmts) {
                if (!cs.stmt) continue;
                const auto* es = std::get_if<ExprStmt>(&cs.stmt->node);
                if (!es || es->expr.get() != edge.call) continue;
                out.push_back(c.make(
                    "MWC-123", cs.span,
                    "result of '" + edge.callee +
                        "' is discarded; its error state does not propagate"));
            }
        }
    }
}

// ---------------------------------------------------------------------------
// MWC-125: order-dependent award visible before any commitment
// ---------------------------------------------------------------------------

bool is_comparison_op(const std::string& op) {
    return op == "<" || op == ">" || op == "<=" || op == ">=" || op == "==" ||
           op == "!=";
}

void det_125(const Ctx& c, std::vector<Finding>& out) {
    for (const Ast* ast : c.model.asts) {
        for (const ModuleDecl& mod : ast->modules) {
            bool has_commit = false;
            for (const FunctionDecl& fn : mod.functions)
                visit_block_exprs(fn.body, [&](const Expr& e) {
                    if (e.kind != Expr::Kind::Call) return;
                    for (const std::string& seg : e.path)
                        if (name_matches_any(seg, c.cfg.conventions.commit_names))
                            has_commit = true;
                });
            if (has_commit) continue;
            for (const FunctionDecl& fn : mod.functions) {
                if (!fn_is_public(fn)) continue;
                const FunctionAnalysis* fa = nullptr;
                for (const auto& f : c.model.functions)
                    if (f->decl == &fn) fa = f.get();
                if (!fa) continue;
                visit_block_stmts(fn.body, [&](const Stmt& s) {
                    const auto* ifs = std::get_if<IfStmt>(&s.node);
                    if (!ifs || !ifs->cond) return;
                    const Expr& cond = *ifs->cond;
                    if (cond.kind != Expr::Kind::Binary ||
                        !is_comparison_op(cond.name))
                        return;
                    bool mentions_param = false;
                    bool mentions_global = false;
                    visit_expr(cond, [&](const Expr& e) {
                        if (e.kind != Expr::Kind::Name) return;
                        if (fa->bindings.params.count(e.name)) mentions_param = true;
                        else if (fa->bindings.is_global_root(e.name))
                            mentions_global = true;
                    });
                    if (!mentions_param || !mentions_global) return;
                    bool sender_award = false;
                    visit_block_stmts(ifs->then_block, [&](const Stmt& inner) {
                        const auto* as = std::get_if<AssignStmt>(&inner.node);
                        if (as && as->value &&
                            expr_has_convention_ident(*as->value,
                                                      c.cfg.conventions.sender_names))
                            sender_award = true;
                    });
                    if (sender_award)
                        out.push_back(c.make(
                            "MWC-125", s.span,
                            "winner selection is visible in the order submissions "
                            "arrive; no commitment phase protects '" + fn.name + "'"));
                });
            }
        }
    }
}

// ---------------------------------------------------------------------------
// MWC-126: ABI decode materializing a resource type
// ---------------------------------------------------------------------------

void det_126(const Ctx& c, std::vector<Finding>& out) {
    for (const auto& fa : c.model.functions) {
        for (const BasicBlock& b : fa->cfg.blocks) {
            for (const CfgStmt& cs : b.stmts) {
                for (const Expr* call : stmt_calls(cs)) {
                    bool decodeish = false;
                    for (const std::string& seg : call->path)
                        if (name_matches_any(seg, c.cfg.conventions.abi_decode_names))
                            decodeish = true;
                    if (!decodeish || call->type_args.empty()) continue;
                    const TypeRef& t = strip_refs(call->type_args[0]);
                    if (t.kind != TypeRef::Kind::Named) continue;
                    const StructDecl* sd = c.model.find_struct(fa->ast, t.name);
                    if (!sd || (!has_ability(*sd, "key") && !has_ability(*sd, "store")))
                        continue;
                    out.push_back(c.make(
                        "MWC-126", cs.span,
                        "decoding raw bytes into resource '" + t.name +
                            "' bypasses its module's constructor invariants"));
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// MWC-127: one address hosting several module declarations
// ---------------------------------------------------------------------------

void det_127(const Ctx& c, std::vector<Finding>& out) {
    for (const auto& [addr, entries] : c.model.module_addresses) {
        if (entries.size() < 2) continue;
        std::vector<ModuleAddressEntry> sorted = entries;
        std::sort(sorted.begin(), sorted.end(),
                  [](const ModuleAddressEntry& a, const ModuleAddressEntry& b) {
                      if (a.file_index != b.file_index)
                          return a.file_index < b.file_index;
                      return a.module_decl->span.line < b.module_decl->span.line;
                  });
        for (std::size_t k = 1; k < sorted.size(); ++k)
            out.push_back(c.make(
                "MWC-127", sorted[k].module_decl->span,
                "address " + addr + " already hosts module '" +
                    sorted[0].module_decl->name +
                    "'; module identity must be globally unique"));
    }
}

// ---------------------------------------------------------------------------
// MWC-128: hash call without a domain-separation tag
// ---------------------------------------------------------------------------

void det_128(const Ctx& c, std::vector<Finding>& out) {
    for (const auto& fa : c.model.functions) {
        for (const BasicBlock& b : fa->cfg.blocks) {
            for (const CfgStmt& cs : b.stmts) {
                for (const Expr* call : stmt_calls(cs)) {
                    bool hashish = false;
                    for (const std::string& seg : call->path)
                        if (name_matches_any(seg, c.cfg.conventions.hash_call_names))
                            hashish = true;
                    if (!hashish) continue;
                    bool separated = false;
                    if (!call->args.empty() && call->args[0]) {
                        const Expr& a0 = *call->args[0];
                        bool combining = a0.kind == Expr::Kind::Call ||
                                         (a0.kind == Expr::Kind::Binary &&
                                          a0.name == "+");
                        separated = combining &&
                                    expr_has_convention_ident(
                                        a0, c.cfg.conventions.domain_names);
                    }
                    if (!separated)
                        out.push_back(c.make(
                            "MWC-128", cs.span,
                            "hash input carries no domain-separation tag; digests "
                            "collide across uses of the same preimage"));
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// MWC-129: dual-signer check without authorization of the second key
// ---------------------------------------------------------------------------

void det_129(const Ctx& c, std::vector<Finding>& out) {
    for (const auto& fa : c.model.functions) {
        bool auth_assert = false;
        visit_block_stmts(fa->decl->body, [&](const Stmt& s) {
            const auto* a = std::get_if<AssertStmt>(&s.node);
            if (a && a->cond &&
                expr_has_convention_ident(*a->cond, c.cfg.conventions.auth_names))
                auth_assert = true;
        });
        if (auth_assert) continue;
        for (const BasicBlock& b : fa->cfg.blocks) {
            for (const CfgStmt& cs : b.stmts) {
                auto scan = [&](const Expr& e) {
                    if (e.kind != Expr::Kind::Binary || e.name != "&&") return;
                    if (!e.lhs || !e.rhs) return;
                    const Expr& l = *e.lhs;
                    const Expr& r = *e.rhs;
                    auto is_verify = [&](const Expr& v) {
                        return v.kind == Expr::Kind::Call && !v.path.empty() &&
                               name_matches_any(v.path.back(),
                                                c.cfg.conventions.verify_names);
                    };
                    if (!is_verify(l) || !is_verify(r)) return;
                    if (l.args.empty() || r.args.empty()) return;
                    if (!l.args[0] || !r.args[0]) return;
                    if (l.args[0]->kind != Expr::Kind::Name ||
                        r.args[0]->kind != Expr::Kind::Name)
                        return;
                    if (l.args[0]->name == r.args[0]->name) return;
                    out.push_back(c.make(
                        "MWC-129", cs.span,
                        "both signatures are verified but '" + r.args[0]->name +
                            "' is never authorized for this operation"));
                };
                if (cs.stmt)
                    visit_stmt_exprs(*cs.stmt, scan);
                else if (cs.trailing)
                    visit_expr(*cs.trailing, scan);
            }
        }
    }
}

// ---------------------------------------------------------------------------
// MWC-130: event emitted with a shape differing from its schema
// ---------------------------------------------------------------------------

void det_130(const Ctx& c, std::vector<Finding>& out) {
    for (const auto& fa : c.model.functions) {
        for (const BasicBlock& b : fa->cfg.blocks) {
            for (const CfgStmt& cs : b.stmts) {
                if (!cs.stmt) continue;
                const auto* em = std::get_if<EmitStmt>(&cs.stmt->node);
                if (!em) continue;
                auto it = c.cfg.event_schemas.find(em->event);
                if (it == c.cfg.event_schemas.end()) continue;
                if (em->args.size() == it->second.size()) continue;
                out.push_back(c.make(
                    "MWC-130", cs.span,
                    "event '" + em->event + "' emitted with " +
                        std::to_string(em->args.size()) + " fields; its schema has " +
                        std::to_string(it->second.size())));
            }
        }
    }
}

// ---------------------------------------------------------------------------
// MWC-131: view function returning a key resource
// ---------------------------------------------------------------------------

void det_131(const Ctx& c, std::vector<Finding>& out) {
    for (const auto& fa : c.model.functions) {
        const FunctionDecl& fn = *fa->decl;
        if (!fn_is_public(fn) || !fn.params.empty() || !fn.return_type) continue;
        const TypeRef& t = strip_refs(*fn.return_type);
        if (t.kind != TypeRef::Kind::Named) continue;
        const StructDecl* sd = c.model.find_struct(fa->ast, t.name);
        if (!sd || !has_ability(*sd, "key")) continue;
        out.push_back(c.make(
            "MWC-131", fn.span,
            "public view '" + fn.name + "' returns key resource '" + t.name +
                "' directly, leaking internal state layout"));
    }
}

// ---------------------------------------------------------------------------
// MWC-132: distinctive abort code observable from a public function
// ---------------------------------------------------------------------------

void det_132(const Ctx& c, std::vector<Finding>& out) {
    for (const auto& fa : c.model.functions) {
        if (!fn_is_public(*fa->decl)) continue;
        visit_block_stmts(fa->decl->body, [&](const Stmt& s) {
            const auto* a = std::get_if<AssertStmt>(&s.node);
            if (!a || !a->code || a->code->kind != Expr::Kind::IntLit) return;
            for (std::uint64_t generic : c.cfg.generic_abort_codes)
                if (a->code->value == generic) return;
            out.push_back(c.make(
                "MWC-132", s.span,
                "abort code " + a->code->text +
                    " is observable and maps back to a specific internal branch"));
        });
    }
}

// ---------------------------------------------------------------------------
// MWC-133: bridge payload forwarded with no dominating assert
// ---------------------------------------------------------------------------

void det_133(const Ctx& c, std::vector<Finding>& out) {
    for (const auto& fa : c.model.functions) {
        for (const BasicBlock& b : fa->cfg.blocks) {
            for (int i = 0; i < static_cast<int>(b.stmts.size()); ++i) {
                for (const Expr* call : stmt_calls(b.stmts[i])) {
                    if (classify_call(call->path, c.cfg).cls != CallClass::Bridge)
                        continue;
                    bool payload_arg = false;
                    for (const auto& arg : call->args)
                        if (arg && expr_has_convention_ident(
                                       *arg, c.cfg.conventions.payload_names))
                            payload_arg = true;
                    if (!payload_arg) continue;
                    auto pred = [](const GuardFact& f) { return f.is_assert; };
                    if (!check_dominating_guard(fa->cfg, UseSite{b.id, i}, pred))
                        out.push_back(c.make(
                            "MWC-133", b.stmts[i].span,
                            "bridge payload leaves the module with no assert on any "
                            "path before this call"));
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// MWC-136: oracle result used before any verification
// ---------------------------------------------------------------------------

// Searches forward from just after (block, idx) for a use of `name`. An
// assert mentioning the name on the way marks the path verified.
bool unverified_use(const Cfg& cfg, int block, int idx, const std::string& name,
                    std::set<int>& visiting) {
    const BasicBlock& b = cfg.blocks[block];
    for (int k = idx; k < static_cast<int>(b.stmts.size()); ++k) {
        const CfgStmt& cs = b.stmts[k];
        bool is_assert =
            cs.stmt && std::holds_alternative<AssertStmt>(cs.stmt->node);
        if (is_assert && cfgstmt_mentions(cs, name)) return false;
        if (cfgstmt_mentions(cs, name)) return true;
    }
    for (int s : cfg.successors(block)) {
        if (!visiting.insert(s).second) continue;
        if (unverified_use(cfg, s, 0, name, visiting)) return true;
    }
    return false;
}

void det_136(const Ctx& c, std::vector<Finding>& out) {
    for (const auto& fa : c.model.functions) {
        for (const BasicBlock& b : fa->cfg.blocks) {
            for (int i = 0; i < static_cast<int>(b.stmts.size()); ++i) {
                const CfgStmt& cs = b.stmts[i];
                if (!cs.stmt) continue;
                std::string bound;
                const Expr* init = nullptr;
                if (const auto* let = std::get_if<LetStmt>(&cs.stmt->node)) {
                    bound = let->name;
                    init = let->init.get();
                } else if (const auto* as = std::get_if<AssignStmt>(&cs.stmt->node)) {
                    if (as->target && as->target->kind == Expr::Kind::Name) {
                        bound = as->target->name;
                        init = as->value.get();
                    }
                }
                if (bound.empty() || !init) continue;
                bool from_oracle = false;
                visit_expr(*init, [&](const Expr& e) {
                    if (e.kind == Expr::Kind::Call &&
                        classify_call(e.path, c.cfg).cls == CallClass::OracleFeed)
                        from_oracle = true;
                });
                if (!from_oracle) continue;
                std::set<int> visiting;
                if (unverified_use(fa->cfg, b.id, i + 1, bound, visiting))
                    out.push_back(c.make(
                        "MWC-136", cs.span,
                        "'" + bound + "' comes from an oracle and is used without "
                        "any verifying assert"));
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Catalog and engine
// ---------------------------------------------------------------------------

using RuleFn = void (*)(const Ctx&, std::vector<Finding>&);

struct RuleEntry {
    const char* id;
    Confidence confidence;
    RuleFn fn;
};

const RuleEntry kRules[] = {
    {"MWC-100", Confidence::Precise, det_100},
    {"MWC-101", Confidence::Precise, det_101},
    {"MWC-102", Confidence::Heuristic, det_102},
    {"MWC-103", Confidence::Precise, det_103},
    {"MWC-104", Confidence::Precise, det_104},
    {"MWC-105", Confidence::Precise, det_105},
    {"MWC-106", Confidence::Precise, det_106},
    {"MWC-107", Confidence::Heuristic, det_107},
    {"MWC-108", Confidence::Precise, det_108},
    {"MWC-109", Confidence::Precise, det_109},
    {"MWC-110", Confidence::Precise, det_110},
    {"MWC-111", Confidence::Precise, det_111},
    {"MWC-113", Confidence::Heuristic, det_113},
    {"MWC-116", Confidence::Precise, det_116},
    {"MWC-117", Confidence::Precise, det_117},
    {"MWC-118", Confidence::Heuristic, det_118},
    {"MWC-119", Confidence::Heuristic, det_119},
    {"MWC-120a", Confidence::Precise, det_120a},
    {"MWC-121", Confidence::Precise, det_121},
    {"MWC-123", Confidence::Heuristic, det_123},
    {"MWC-125", Confidence::Heuristic, det_125},
    {"MWC-126", Confidence::Precise, det_126},
    {"MWC-127", Confidence::Precise, det_127},
    {"MWC-128", Confidence::Precise, det_128},
    {"MWC-129", Confidence::Heuristic, det_129},
    {"MWC-130", Confidence::Heuristic, det_130},
    {"MWC-131", Confidence::Precise, det_131},
    {"MWC-132", Confidence::Heuristic, det_132},
    {"MWC-133", Confidence::Heuristic, det_133},
    {"MWC-136", Confidence::Precise, det_136},
};

Ctx make_ctx(const SemanticModel& model, const Config& cfg,
             const std::vector<SourceFile>& sources) {
    Ctx c{model, cfg, sources, registry(), {}, {}};
    for (const auto& fa : model.functions)
        c.effects[fa.get()] = cfg_effects(fa->cfg, fa->bindings, cfg);
    for (const RuleEntry& e : kRules) c.confidence[e.id] = e.confidence;
    return c;
}

// ---------------------------------------------------------------------------
// Pragmas: `// mwc: review MWC-xxx` raises an informational finding,
// `// mwc: allow MWC-xxx` suppresses that rule on the next statement's line.
// ---------------------------------------------------------------------------

struct PragmaScan {
    std::vector<Finding> review_findings;
    std::set<std::tuple<std::string, std::string, int>> suppressed;  // rule,file,line
    int review_count = 0;
};

PragmaScan scan_pragmas(const Ctx& c) {
    PragmaScan out;
    static const std::regex pragma_re(
        R"(^//\s*mwc:\s*(review|allow)\s+(MWC-\d{3}[ab]?)\s*$)");
    for (const SourceFile& sf : c.sources) {
        LexResult lex = tokenize(sf.text, sf.path);
        for (std::size_t t = 0; t < lex.tokens.size(); ++t) {
            const Token& tok = lex.tokens[t];
            if (tok.kind != TokenKind::Comment) continue;
            std::smatch m;
            if (!std::regex_match(tok.text, m, pragma_re)) continue;
            std::string verb = m[1];
            std::string id = m[2];
            const CategoryRecord* rec = nullptr;
            try {
                rec = lookup(c.reg, id).record;
            } catch (const NotFoundError&) {
                continue;  // unknown id in a comment: not a finding, not an error
            }
            if (verb == "review") {
                Finding f = c.make(rec->id, tok.span,
                                   "flagged for manual review: " + rec->box_title);
                out.review_findings.push_back(std::move(f));
                ++out.review_count;
            } else {
                for (std::size_t n = t + 1; n < lex.tokens.size(); ++n) {
                    const Token& next = lex.tokens[n];
                    if (next.kind == TokenKind::Comment) continue;
                    if (next.kind == TokenKind::Eof) break;
                    out.suppressed.insert({rec->id, sf.path, next.span.line});
                    break;
                }
            }
        }
    }
    return out;
}

std::vector<Finding> finalize(std::vector<Finding> findings,
                              const PragmaScan& pragmas) {
    std::vector<Finding> kept;
    kept.reserve(findings.size());
    for (Finding& f : findings) {
        if (pragmas.suppressed.count({f.rule_id, f.span.file, f.span.line}))
            continue;
        kept.push_back(std::move(f));
    }
    std::sort(kept.begin(), kept.end(), finding_order);
    kept.erase(std::unique(kept.begin(), kept.end(),
                           [](const Finding& a, const Finding& b) {
                               return a.rule_id == b.rule_id &&
                                      a.span.file == b.span.file &&
                                      a.span.line == b.span.line &&
                                      a.span.column == b.span.column;
                           }),
               kept.end());
    return kept;
}

}  // namespace

const std::vector<DetectorInfo>& detector_catalog() {
    static const std::vector<DetectorInfo> catalog = [] {
        std::vector<DetectorInfo> out;
        const Registry& reg = registry();
        for (const RuleEntry& e : kRules) {
            DetectorInfo info;
            info.rule_id = e.id;
            info.confidence = e.confidence;
            const CategoryRecord* rec = reg.find(e.id);
            info.strategy = rec ? rec->strategy : Strategy::Syntactic;
            out.push_back(std::move(info));
        }
        return out;
    }();
    return catalog;
}

std::vector<Finding> run_all(const SemanticModel& model, const Config& cfg,
                             const std::vector<SourceFile>& sources) {
    Ctx c = make_ctx(model, cfg, sources);
    std::vector<Finding> findings;
    for (const RuleEntry& e : kRules) {
        if (!cfg.rule_enabled(e.id)) continue;
        e.fn(c, findings);
    }
    PragmaScan pragmas = scan_pragmas(c);
    for (Finding& f : pragmas.review_findings) findings.push_back(std::move(f));
    return finalize(std::move(findings), pragmas);
}

std::vector<Finding> run_rule(const std::string& rule_id, const SemanticModel& model,
                              const Config& cfg,
                              const std::vector<SourceFile>& sources) {
    const RuleEntry* entry = nullptr;
    for (const RuleEntry& e : kRules)
        if (rule_id == e.id) entry = &e;
    if (!entry) {
        const CategoryRecord* rec = registry().find(rule_id);
        if (rec && rec->strategy == Strategy::Advisory)
            throw UnsupportedRuleError(
                rule_id + " is advisory: it has no detector and is raised only via "
                          "review pragmas");
        throw UnsupportedRuleError("no detector for rule '" + rule_id + "'");
    }
    Ctx c = make_ctx(model, cfg, sources);
    std::vector<Finding> findings;
    entry->fn(c, findings);
    PragmaScan pragmas = scan_pragmas(c);
    for (Finding& f : pragmas.review_findings)
        if (f.rule_id == rule_id) findings.push_back(std::move(f));
    return finalize(std::move(findings), pragmas);
}

std::vector<const Stmt*> loop_nontermination(const FunctionAnalysis& fa) {
    const FunctionDecl& fn = *fa.decl;
    std::set<std::string> unsigned_names;
    for (const Param& p : fn.params)
        if (is_unsigned_primitive(p.type)) unsigned_names.insert(p.name);
    visit_block_stmts(fn.body, [&](const Stmt& s) {
        const auto* let = std::get_if<LetStmt>(&s.node);
        if (!let) return;
        if (let->type) {
            if (is_unsigned_primitive(*let->type)) unsigned_names.insert(let->name);
        } else if (let->init && let->init->kind == Expr::Kind::IntLit) {
            unsigned_names.insert(let->name);
        }
    });

    std::vector<const Stmt*> out;
    visit_block_stmts(fn.body, [&](const Stmt& s) {
        const auto* wh = std::get_if<WhileStmt>(&s.node);
        if (!wh || !wh->cond) return;
        const Expr& cond = *wh->cond;
        if (cond.kind != Expr::Kind::Binary || cond.name != ">=") return;
        if (!cond.lhs || cond.lhs->kind != Expr::Kind::Name) return;
        if (!cond.rhs || cond.rhs->kind != Expr::Kind::IntLit) return;
        const std::string& v = cond.lhs->name;
        if (!unsigned_names.count(v)) return;
        bool can_decrease = false;
        visit_block_stmts(wh->body, [&](const Stmt& inner) {
            const auto* as = std::get_if<AssignStmt>(&inner.node);
            if (!as || !as->target || as->target->kind != Expr::Kind::Name ||
                as->target->name != v)
                return;
            const Expr* val = as->value.get();
            bool non_decreasing = false;
            if (val) {
                if (val->kind == Expr::Kind::Name && val->name == v)
                    non_decreasing = true;
                if (val->kind == Expr::Kind::Binary && val->name == "+" && val->lhs &&
                    val->rhs) {
                    bool lv = val->lhs->kind == Expr::Kind::Name &&
                              val->lhs->name == v;
                    bool rv = val->rhs->kind == Expr::Kind::Name &&
                              val->rhs->name == v;
                    bool li = val->lhs->kind == Expr::Kind::IntLit;
                    bool ri = val->rhs->kind == Expr::Kind::IntLit;
                    if ((lv && ri) || (li && rv)) non_decreasing = true;
                }
            }
            if (!non_decreasing) can_decrease = true;
        });
        if (!can_decrease) out.push_back(&s);
    });
    return out;
}

std::vector<LockConflict> lock_order_conflicts(const SemanticModel& model,
                                               const Config& cfg) {
    struct LockSeq {
        const FunctionAnalysis* fa;
        std::map<std::string, int> pos;
        std::map<std::string, Span> first_span;
        std::vector<std::string> names;  // sorted
    };
    std::vector<LockSeq> seqs;
    for (const auto& fa : model.functions) {
        LockSeq seq;
        seq.fa = fa.get();
        int counter = 0;
        for (const BasicBlock& b : fa->cfg.blocks) {
            for (const CfgStmt& cs : b.stmts) {
                for (const Expr* call : stmt_calls(cs)) {
                    CallInfo info = classify_call(call->path, cfg);
                    if (info.cls != CallClass::Lock) continue;
                    if (seq.pos.count(info.lock_name)) continue;
                    seq.pos[info.lock_name] = counter++;
                    seq.first_span[info.lock_name] = cs.span;
                    seq.names.push_back(info.lock_name);
                }
            }
        }
        std::sort(seq.names.begin(), seq.names.end());
        if (seq.names.size() >= 2) seqs.push_back(std::move(seq));
    }

    std::vector<LockConflict> out;
    for (std::size_t i = 0; i < seqs.size(); ++i) {
        for (std::size_t j = i + 1; j < seqs.size(); ++j) {
            const LockSeq& f = seqs[i];
            const LockSeq& g = seqs[j];
            for (std::size_t x = 0; x < f.names.size(); ++x) {
                for (std::size_t y = x + 1; y < f.names.size(); ++y) {
                    const std::string& a = f.names[x];  // a < b by sort
                    const std::string& b = f.names[y];
                    if (!g.pos.count(a) || !g.pos.count(b)) continue;
                    bool f_ab = f.pos.at(a) < f.pos.at(b);
                    bool g_ab = g.pos.at(a) < g.pos.at(b);
                    if (f_ab == g_ab) continue;
                    LockConflict lc;
                    lc.lock_a = a;
                    lc.lock_b = b;
                    if (f_ab) {
                        lc.first = f.fa;
                        lc.second = g.fa;
                    } else {
                        lc.first = g.fa;
                        lc.second = f.fa;
                    }
                    // The second function takes lock_b first; that acquisition
                    // anchors the report.
                    lc.anchor = (f_ab ? g : f).first_span.at(b);
                    out.push_back(std::move(lc));
                }
            }
        }
    }
    return out;
}

}  // namespace mwc
