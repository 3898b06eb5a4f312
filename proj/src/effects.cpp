// SPDX-License-Identifier: Apache-2.0
#include "mwc/effects.hpp"

namespace mwc {

namespace {

bool is_storage_primitive(const std::string& last, bool& read, bool& write) {
    if (last == "borrow_global" || last == "borrow_global_mut" || last == "exists") {
        read = true;
        return true;
    }
    if (last == "move_to" || last == "move_from") {
        write = true;
        if (last == "move_from") read = true;
        return true;
    }
    return false;
}

bool segment_equals_any(const std::string& seg, const std::vector<std::string>& list) {
    for (const std::string& e : list)
        if (ci_equals(seg, e)) return true;
    return false;
}

bool any_segment_contains(const std::vector<std::string>& path,
                          const std::vector<std::string>& list) {
    for (const std::string& seg : path)
        if (name_matches_any(seg, list)) return true;
    return false;
}

}  // namespace

const char* call_class_name(CallClass c) {
    switch (c) {
        case CallClass::Unknown: return "unknown";
        case CallClass::Storage: return "storage";
        case CallClass::External: return "external";
        case CallClass::Crypto: return "crypto";
        case CallClass::OracleFeed: return "oracle";
        case CallClass::Bridge: return "bridge";
        case CallClass::Lock: return "lock";
    }
    return "unknown";
}

CallInfo classify_call(const std::vector<std::string>& path, const Config& cfg) {
    CallInfo info;
    if (path.empty()) return info;
    const Conventions& cv = cfg.conventions;
    const std::string& first = path.front();
    const std::string& last = path.back();

    info.evm = any_segment_contains(path, cv.evm_markers);

    // Storage primitives are recognized ahead of every convention.
    if (is_storage_primitive(last, info.storage_read, info.storage_write)) {
        info.cls = CallClass::Storage;
        return info;
    }
    if (segment_equals_any(first, cv.external_prefixes)) {
        info.cls = CallClass::External;
        return info;
    }
    if (any_segment_contains(path, cv.crypto_markers)) {
        info.cls = CallClass::Crypto;
        return info;
    }
    if (segment_equals_any(first, cv.oracle_prefixes)) {
        info.cls = CallClass::OracleFeed;
        return info;
    }
    if (segment_equals_any(first, cv.bridge_prefixes)) {
        info.cls = CallClass::Bridge;
        return info;
    }
    if (last.rfind(cv.lock_prefix, 0) == 0) {
        info.cls = CallClass::Lock;
        info.lock_name = last;
        return info;
    }
    return info;
}

FunctionBindings collect_bindings(const FunctionDecl& fn) {
    FunctionBindings b;
    for (const Param& p : fn.params) {
        b.params.insert(p.name);
        if (p.type.kind == TypeRef::Kind::Reference) b.reference_params.insert(p.name);
    }
    // Collect let-bound names from the whole body, nested blocks included.
    std::function<void(const Block&)> walk_block = [&](const Block& blk) {
        for (const Stmt& s : blk.stmts) {
            if (const auto* let = std::get_if<LetStmt>(&s.node)) {
                b.locals.insert(let->name);
                if (let->init) {
                    bool from_borrow = false;
                    visit_expr(*let->init, [&](const Expr& e) {
                        if (e.kind == Expr::Kind::Call && !e.path.empty()) {
                            const std::string& last = e.path.back();
                            if (last == "borrow_global" || last == "borrow_global_mut")
                                from_borrow = true;
                        }
                    });
                    if (from_borrow) b.global_aliases.insert(let->name);
                }
            } else if (const auto* ifs = std::get_if<IfStmt>(&s.node)) {
                walk_block(ifs->then_block);
                if (ifs->else_block) walk_block(*ifs->else_block);
            } else if (const auto* wh = std::get_if<WhileStmt>(&s.node)) {
                walk_block(wh->body);
            }
        }
    };
    walk_block(fn.body);
    return b;
}

namespace {

// Applies call/read effects of one expression tree.
void apply_expr_effects(const Expr& expr, const FunctionBindings& bindings,
                        const Config& cfg, EffectSet& out) {
    visit_expr(expr, [&](const Expr& e) {
        if (e.kind == Expr::Kind::Name) {
            if (bindings.is_global_root(e.name)) out.reads_global = true;
            return;
        }
        if (e.kind != Expr::Kind::Call) return;
        CallInfo info = classify_call(e.path, cfg);
        if (info.evm) out.evm_call = true;
        switch (info.cls) {
            case CallClass::Storage:
                if (info.storage_read) out.reads_global = true;
                if (info.storage_write) out.writes_global = true;
                break;
            case CallClass::External:
                out.external_call = true;
                break;
            case CallClass::Crypto:
                out.crypto_call = true;
                break;
            case CallClass::OracleFeed:
                out.oracle_call = true;
                break;
            case CallClass::Bridge:
                out.bridge_call = true;
                break;
            case CallClass::Lock:
                out.locks_acquired.push_back(info.lock_name);
                break;
            case CallClass::Unknown:
                break;
        }
    });
}

// Root name of a Name/Field chain, or empty.
const std::string* chain_root(const Expr& e) {
    const Expr* cur = &e;
    while (cur->kind == Expr::Kind::Field && cur->lhs) cur = cur->lhs.get();
    if (cur->kind == Expr::Kind::Name) return &cur->name;
    return nullptr;
}

}  // namespace

EffectSet stmt_effects(const Stmt* stmt, const Expr* trailing,
                       const FunctionBindings& bindings, const Config& cfg) {
    EffectSet out;
    if (!stmt) {
        if (trailing) apply_expr_effects(*trailing, bindings, cfg, out);
        return out;
    }
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, LetStmt>) {
                if (n.init) apply_expr_effects(*n.init, bindings, cfg, out);
            } else if constexpr (std::is_same_v<T, AssignStmt>) {
                if (n.value) apply_expr_effects(*n.value, bindings, cfg, out);
                if (n.target) {
                    if (const std::string* root = chain_root(*n.target)) {
                        bool through_ref = n.target->kind == Expr::Kind::Field &&
                                           bindings.reference_params.count(*root);
                        if (through_ref || bindings.is_global_root(*root))
                            out.writes_global = true;
                    }
                }
            } else if constexpr (std::is_same_v<T, IfStmt> ||
                                 std::is_same_v<T, WhileStmt>) {
                if (n.cond) apply_expr_effects(*n.cond, bindings, cfg, out);
            } else if constexpr (std::is_same_v<T, ReturnStmt>) {
                out.returns = true;
                if (n.value) apply_expr_effects(*n.value, bindings, cfg, out);
            } else if constexpr (std::is_same_v<T, ExprStmt>) {
                if (n.expr) apply_expr_effects(*n.expr, bindings, cfg, out);
            } else if constexpr (std::is_same_v<T, AssertStmt>) {
                out.assert_guard = true;
                if (n.cond) apply_expr_effects(*n.cond, bindings, cfg, out);
                if (n.code) apply_expr_effects(*n.code, bindings, cfg, out);
            } else {
                static_assert(std::is_same_v<T, EmitStmt>);
                out.emits_event = true;
                for (const auto& a : n.args)
                    if (a) apply_expr_effects(*a, bindings, cfg, out);
            }
        },
        stmt->node);
    return out;
}

}  // namespace mwc
