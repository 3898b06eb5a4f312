// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mwc/span.hpp"
#include "mwc/token.hpp"

namespace mwc {

// ---------------------------------------------------------------------------
// Types
// ---------------------------------------------------------------------------

struct TypeRef;
using TypeRefPtr = std::unique_ptr<TypeRef>;

struct TypeRef {
    enum class Kind { Primitive, Named, Vector, Reference };

    Kind kind = Kind::Named;
    std::string name;        // primitive keyword-ish name, or struct/generic name
    bool is_mut = false;     // only for Reference
    TypeRefPtr elem;         // element (Vector) or referent (Reference)
    Span span;

    TypeRef() = default;
    TypeRef(const TypeRef& other);
    TypeRef& operator=(const TypeRef& other);
    TypeRef(TypeRef&&) = default;
    TypeRef& operator=(TypeRef&&) = default;
};

bool is_primitive_type_name(const std::string& name);

// Strips references: `&mut T` -> `T`.
const TypeRef& strip_refs(const TypeRef& t);

// ---------------------------------------------------------------------------
// Expressions
// ---------------------------------------------------------------------------

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
    enum class Kind {
        IntLit,
        BoolLit,
        StrLit,
        Name,
        Field,    // base.name
        Binary,   // lhs op rhs
        Unary,    // !operand (stored in lhs)
        Call,     // path<type_args>(args); Exists is a Call to `exists`
        VecLit,   // [e0, e1, ...]
    };

    Kind kind = Kind::Name;
    Span span;

    std::string text;       // IntLit/StrLit: exact source text
    std::uint64_t value = 0;  // IntLit decoded value (saturating)
    bool bvalue = false;    // BoolLit
    std::string name;       // Name ident, Field member, Binary/Unary operator
    std::vector<std::string> path;  // Call callee segments
    ExprPtr lhs;            // Binary lhs, Unary operand, Field base
    ExprPtr rhs;            // Binary rhs
    std::vector<ExprPtr> args;       // Call arguments / VecLit elements
    std::vector<TypeRef> type_args;  // Call explicit type arguments
};

// True for a Call whose callee is the storage introspection builtin
// `exists<T>(addr)`.
bool is_exists_call(const Expr& e);

std::string call_path_string(const Expr& call);  // "A::b" for Call nodes

// ---------------------------------------------------------------------------
// Statements
// ---------------------------------------------------------------------------

struct Stmt;

struct Block {
    std::vector<Stmt> stmts;
    ExprPtr trailing;  // optional trailing expression (no semicolon)
    Span span;
};

struct LetStmt {
    bool is_mut = false;
    std::string name;
    std::optional<TypeRef> type;
    ExprPtr init;  // may be null for `let x;`
};

struct AssignStmt {
    ExprPtr target;  // Name or Field chain
    ExprPtr value;
};

struct IfStmt {
    ExprPtr cond;
    Block then_block;
    std::optional<Block> else_block;  // else-if is a nested If inside a Block
};

struct WhileStmt {
    ExprPtr cond;
    Block body;
};

struct ReturnStmt {
    ExprPtr value;  // may be null
};

struct ExprStmt {
    ExprPtr expr;
};

struct AssertStmt {
    ExprPtr cond;
    ExprPtr code;  // abort code, may be null
};

struct EmitStmt {
    std::string event;
    std::vector<ExprPtr> args;
};

struct Stmt {
    Span span;
    std::string trailing_comment;  // same-line `//` comment text (no slashes)
    std::variant<LetStmt, AssignStmt, IfStmt, WhileStmt, ReturnStmt, ExprStmt,
                 AssertStmt, EmitStmt>
        node;
};

// ---------------------------------------------------------------------------
// Declarations
// ---------------------------------------------------------------------------

struct Param {
    std::string name;
    TypeRef type;
    Span span;
};

struct GenericParam {
    std::string name;
    std::vector<std::string> constraints;  // ability names; empty = unconstrained
};

enum class Visibility { Private, Public, Entry, Fallback };

const char* visibility_name(Visibility v);

struct FunctionDecl {
    Visibility visibility = Visibility::Private;
    std::string name;
    std::vector<GenericParam> generics;
    std::vector<Param> params;
    std::optional<TypeRef> return_type;
    bool returns_keyword = false;  // declared with `returns (T)` instead of `: T`
    bool is_prototype = false;     // bodyless declaration `store<T>(item: T);`
    bool implicit = false;         // synthesized wrapper for bare statements
    Block body;
    Span span;
};

struct StructField {
    std::string name;
    TypeRef type;
    Span span;
};

struct StructDecl {
    std::string name;
    std::vector<std::string> abilities;  // `has key, store`
    std::vector<StructField> fields;
    Span span;
};

struct UseDecl {
    std::vector<std::string> path;
    bool wildcard = false;  // `use Lib::*;`
    Span span;
};

struct ModuleDecl {
    std::optional<std::string> address;  // literal text, e.g. "0x1"
    std::string name;
    bool implicit = false;  // synthesized for file-level items
    std::vector<UseDecl> uses;
    std::vector<StructDecl> structs;
    std::vector<FunctionDecl> functions;
    Span span;
};

struct Ast {
    std::string file;
    std::vector<ModuleDecl> modules;
    std::vector<Token> comments;  // all comment tokens, in source order
};

// ---------------------------------------------------------------------------
// Structural equality (ignores spans and comments) and expression utilities
// ---------------------------------------------------------------------------

bool equal(const TypeRef& a, const TypeRef& b);
bool equal(const Expr& a, const Expr& b);
bool equal(const Block& a, const Block& b);
bool equal(const Stmt& a, const Stmt& b);
bool equal(const FunctionDecl& a, const FunctionDecl& b);
bool equal(const StructDecl& a, const StructDecl& b);
bool equal(const ModuleDecl& a, const ModuleDecl& b);
bool equal(const Ast& a, const Ast& b);

// Walks every expression in a statement, excluding nested blocks (an If's
// condition is visited; its branches are not).
void visit_stmt_exprs(const Stmt& stmt, const std::function<void(const Expr&)>& fn);

// Walks every statement in a block in source order, recursing into If/While
// bodies.
void visit_block_stmts(const Block& block, const std::function<void(const Stmt&)>& fn);

// Walks every expression anywhere in a block, including nested blocks and
// the trailing expression.
void visit_block_exprs(const Block& block, const std::function<void(const Expr&)>& fn);

// Walks an expression tree, including call arguments.
void visit_expr(const Expr& expr, const std::function<void(const Expr&)>& fn);

// Every identifier mentioned in an expression: names, field members, callee
// path segments.
std::vector<std::string> collect_identifiers(const Expr& expr);

bool expr_mentions_name(const Expr& expr, const std::string& name);

}  // namespace mwc
