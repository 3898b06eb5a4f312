// SPDX-License-Identifier: Apache-2.0
#include "mwc/ast.hpp"

#include <algorithm>

namespace mwc {

TypeRef::TypeRef(const TypeRef& other)
    : kind(other.kind), name(other.name), is_mut(other.is_mut), span(other.span) {
    if (other.elem) elem = std::make_unique<TypeRef>(*other.elem);
}

TypeRef& TypeRef::operator=(const TypeRef& other) {
    if (this == &other) return *this;
    kind = other.kind;
    name = other.name;
    is_mut = other.is_mut;
    span = other.span;
    elem = other.elem ? std::make_unique<TypeRef>(*other.elem) : nullptr;
    return *this;
}

bool is_primitive_type_name(const std::string& name) {
    return name == "u8" || name == "u64" || name == "u128" || name == "bool" ||
           name == "address" || name == "signer";
}

const TypeRef& strip_refs(const TypeRef& t) {
    const TypeRef* cur = &t;
    while (cur->kind == TypeRef::Kind::Reference && cur->elem) cur = cur->elem.get();
    return *cur;
}

bool is_exists_call(const Expr& e) {
    return e.kind == Expr::Kind::Call && e.path.size() == 1 &&
           e.path[0] == "exists" && e.type_args.size() == 1 && e.args.size() == 1;
}

std::string call_path_string(const Expr& call) {
    std::string out;
    for (std::size_t i = 0; i < call.path.size(); ++i) {
        if (i) out += "::";
        out += call.path[i];
    }
    return out;
}

const char* visibility_name(Visibility v) {
    switch (v) {
        case Visibility::Private: return "private";
        case Visibility::Public: return "public";
        case Visibility::Entry: return "entry";
        case Visibility::Fallback: return "fallback";
    }
    return "private";
}

// ---------------------------------------------------------------------------
// Structural equality
// ---------------------------------------------------------------------------

namespace {

bool equal_ptr(const ExprPtr& a, const ExprPtr& b) {
    if (!a || !b) return !a && !b;
    return equal(*a, *b);
}

}  // namespace

bool equal(const TypeRef& a, const TypeRef& b) {
    if (a.kind != b.kind || a.name != b.name || a.is_mut != b.is_mut) return false;
    if (!a.elem || !b.elem) return !a.elem && !b.elem;
    return equal(*a.elem, *b.elem);
}

bool equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Expr::Kind::IntLit:
            return a.text == b.text;
        case Expr::Kind::BoolLit:
            return a.bvalue == b.bvalue;
        case Expr::Kind::StrLit:
            return a.text == b.text;
        case Expr::Kind::Name:
            return a.name == b.name;
        case Expr::Kind::Field:
            return a.name == b.name && equal_ptr(a.lhs, b.lhs);
        case Expr::Kind::Binary:
            return a.name == b.name && equal_ptr(a.lhs, b.lhs) &&
                   equal_ptr(a.rhs, b.rhs);
        case Expr::Kind::Unary:
            return a.name == b.name && equal_ptr(a.lhs, b.lhs);
        case Expr::Kind::Call: {
            if (a.path != b.path) return false;
            if (a.type_args.size() != b.type_args.size()) return false;
            for (std::size_t i = 0; i < a.type_args.size(); ++i)
                if (!equal(a.type_args[i], b.type_args[i])) return false;
            if (a.args.size() != b.args.size()) return false;
            for (std::size_t i = 0; i < a.args.size(); ++i)
                if (!equal_ptr(a.args[i], b.args[i])) return false;
            return true;
        }
        case Expr::Kind::VecLit: {
            if (a.args.size() != b.args.size()) return false;
            for (std::size_t i = 0; i < a.args.size(); ++i)
                if (!equal_ptr(a.args[i], b.args[i])) return false;
            return true;
        }
    }
    return false;
}

bool equal(const Block& a, const Block& b) {
    if (a.stmts.size() != b.stmts.size()) return false;
    for (std::size_t i = 0; i < a.stmts.size(); ++i)
        if (!equal(a.stmts[i], b.stmts[i])) return false;
    return equal_ptr(a.trailing, b.trailing);
}

bool equal(const Stmt& a, const Stmt& b) {
    if (a.node.index() != b.node.index()) return false;
    return std::visit(
        [&](const auto& na) -> bool {
            using T = std::decay_t<decltype(na)>;
            const auto& nb = std::get<T>(b.node);
            if constexpr (std::is_same_v<T, LetStmt>) {
                if (na.is_mut != nb.is_mut || na.name != nb.name) return false;
                if (na.type.has_value() != nb.type.has_value()) return false;
                if (na.type && !equal(*na.type, *nb.type)) return false;
                return equal_ptr(na.init, nb.init);
            } else if constexpr (std::is_same_v<T, AssignStmt>) {
                return equal_ptr(na.target, nb.target) && equal_ptr(na.value, nb.value);
            } else if constexpr (std::is_same_v<T, IfStmt>) {
                if (!equal_ptr(na.cond, nb.cond)) return false;
                if (!equal(na.then_block, nb.then_block)) return false;
                if (na.else_block.has_value() != nb.else_block.has_value())
                    return false;
                return !na.else_block || equal(*na.else_block, *nb.else_block);
            } else if constexpr (std::is_same_v<T, WhileStmt>) {
                return equal_ptr(na.cond, nb.cond) && equal(na.body, nb.body);
            } else if constexpr (std::is_same_v<T, ReturnStmt>) {
                return equal_ptr(na.value, nb.value);
            } else if constexpr (std::is_same_v<T, ExprStmt>) {
                return equal_ptr(na.expr, nb.expr);
            } else if constexpr (std::is_same_v<T, AssertStmt>) {
                return equal_ptr(na.cond, nb.cond) && equal_ptr(na.code, nb.code);
            } else {
                static_assert(std::is_same_v<T, EmitStmt>);
                if (na.event != nb.event) return false;
                if (na.args.size() != nb.args.size()) return false;
                for (std::size_t i = 0; i < na.args.size(); ++i)
                    if (!equal_ptr(na.args[i], nb.args[i])) return false;
                return true;
            }
        },
        a.node);
}

bool equal(const FunctionDecl& a, const FunctionDecl& b) {
    if (a.visibility != b.visibility || a.name != b.name) return false;
    if (a.is_prototype != b.is_prototype || a.implicit != b.implicit) return false;
    if (a.returns_keyword != b.returns_keyword) return false;
    if (a.generics.size() != b.generics.size()) return false;
    for (std::size_t i = 0; i < a.generics.size(); ++i) {
        if (a.generics[i].name != b.generics[i].name ||
            a.generics[i].constraints != b.generics[i].constraints)
            return false;
    }
    if (a.params.size() != b.params.size()) return false;
    for (std::size_t i = 0; i < a.params.size(); ++i) {
        if (a.params[i].name != b.params[i].name ||
            !equal(a.params[i].type, b.params[i].type))
            return false;
    }
    if (a.return_type.has_value() != b.return_type.has_value()) return false;
    if (a.return_type && !equal(*a.return_type, *b.return_type)) return false;
    return equal(a.body, b.body);
}

bool equal(const StructDecl& a, const StructDecl& b) {
    if (a.name != b.name || a.abilities != b.abilities) return false;
    if (a.fields.size() != b.fields.size()) return false;
    for (std::size_t i = 0; i < a.fields.size(); ++i) {
        if (a.fields[i].name != b.fields[i].name ||
            !equal(a.fields[i].type, b.fields[i].type))
            return false;
    }
    return true;
}

bool equal(const ModuleDecl& a, const ModuleDecl& b) {
    if (a.address != b.address || a.name != b.name || a.implicit != b.implicit)
        return false;
    if (a.uses.size() != b.uses.size()) return false;
    for (std::size_t i = 0; i < a.uses.size(); ++i) {
        if (a.uses[i].path != b.uses[i].path ||
            a.uses[i].wildcard != b.uses[i].wildcard)
            return false;
    }
    if (a.structs.size() != b.structs.size()) return false;
    for (std::size_t i = 0; i < a.structs.size(); ++i)
        if (!equal(a.structs[i], b.structs[i])) return false;
    if (a.functions.size() != b.functions.size()) return false;
    for (std::size_t i = 0; i < a.functions.size(); ++i)
        if (!equal(a.functions[i], b.functions[i])) return false;
    return true;
}

bool equal(const Ast& a, const Ast& b) {
    if (a.modules.size() != b.modules.size()) return false;
    for (std::size_t i = 0; i < a.modules.size(); ++i)
        if (!equal(a.modules[i], b.modules[i])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Visitors
// ---------------------------------------------------------------------------

void visit_expr(const Expr& expr, const std::function<void(const Expr&)>& fn) {
    fn(expr);
    if (expr.lhs) visit_expr(*expr.lhs, fn);
    if (expr.rhs) visit_expr(*expr.rhs, fn);
    for (const auto& a : expr.args)
        if (a) visit_expr(*a, fn);
}

void visit_stmt_exprs(const Stmt& stmt,
                      const std::function<void(const Expr&)>& fn) {
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, LetStmt>) {
                if (n.init) visit_expr(*n.init, fn);
            } else if constexpr (std::is_same_v<T, AssignStmt>) {
                if (n.target) visit_expr(*n.target, fn);
                if (n.value) visit_expr(*n.value, fn);
            } else if constexpr (std::is_same_v<T, IfStmt> ||
                                 std::is_same_v<T, WhileStmt>) {
                if (n.cond) visit_expr(*n.cond, fn);
            } else if constexpr (std::is_same_v<T, ReturnStmt>) {
                if (n.value) visit_expr(*n.value, fn);
            } else if constexpr (std::is_same_v<T, ExprStmt>) {
                if (n.expr) visit_expr(*n.expr, fn);
            } else if constexpr (std::is_same_v<T, AssertStmt>) {
                if (n.cond) visit_expr(*n.cond, fn);
                if (n.code) visit_expr(*n.code, fn);
            } else {
                static_assert(std::is_same_v<T, EmitStmt>);
                for (const auto& a : n.args)
                    if (a) visit_expr(*a, fn);
            }
        },
        stmt.node);
}

void visit_block_stmts(const Block& block, const std::function<void(const Stmt&)>& fn) {
    for (const Stmt& s : block.stmts) {
        fn(s);
        if (const auto* ifs = std::get_if<IfStmt>(&s.node)) {
            visit_block_stmts(ifs->then_block, fn);
            if (ifs->else_block) visit_block_stmts(*ifs->else_block, fn);
        } else if (const auto* wh = std::get_if<WhileStmt>(&s.node)) {
            visit_block_stmts(wh->body, fn);
        }
    }
}

void visit_block_exprs(const Block& block, const std::function<void(const Expr&)>& fn) {
    for (const Stmt& s : block.stmts) {
        visit_stmt_exprs(s, fn);
        if (const auto* ifs = std::get_if<IfStmt>(&s.node)) {
            visit_block_exprs(ifs->then_block, fn);
            if (ifs->else_block) visit_block_exprs(*ifs->else_block, fn);
        } else if (const auto* wh = std::get_if<WhileStmt>(&s.node)) {
            visit_block_exprs(wh->body, fn);
        }
    }
    if (block.trailing) visit_expr(*block.trailing, fn);
}

std::vector<std::string> collect_identifiers(const Expr& expr) {
    std::vector<std::string> out;
    visit_expr(expr, [&](const Expr& e) {
        switch (e.kind) {
            case Expr::Kind::Name:
                out.push_back(e.name);
                break;
            case Expr::Kind::Field:
                out.push_back(e.name);
                break;
            case Expr::Kind::Call:
                for (const auto& seg : e.path) out.push_back(seg);
                break;
            default:
                break;
        }
    });
    return out;
}

bool expr_mentions_name(const Expr& expr, const std::string& name) {
    bool found = false;
    visit_expr(expr, [&](const Expr& e) {
        if (e.kind == Expr::Kind::Name && e.name == name) found = true;
    });
    return found;
}

}  // namespace mwc
