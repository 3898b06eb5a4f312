// SPDX-License-Identifier: Apache-2.0
#include "mwc/parser.hpp"

#include <charconv>
#include <utility>

#include "mwc/lexer.hpp"

namespace mwc {

namespace {

// Internal control-flow exception for statement/item level recovery.
struct ParseFailure {
    Diag diag;
};

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

class Parser {
  public:
    Parser(std::vector<Token> all_tokens, std::string file)
        : all_(std::move(all_tokens)), file_(std::move(file)) {
        for (std::size_t i = 0; i < all_.size(); ++i) {
            if (all_[i].kind == TokenKind::Comment) {
                comments_.push_back(all_[i]);
            } else {
                filtered_.push_back(i);
            }
        }
    }

    ParseResult run(std::vector<Diag> lex_errors) {
        Ast ast;
        ast.file = file_;
        ast.comments = comments_;
        errors_ = std::move(lex_errors);

        while (!at_eof()) {
            try {
                parse_top_item(ast);
            } catch (ParseFailure& f) {
                errors_.push_back(std::move(f.diag));
                sync_item();
            }
        }
        if (!errors_.empty()) return ParseResult{std::move(errors_)};
        return ParseResult{std::move(ast)};
    }

  private:
    std::vector<Token> all_;
    std::vector<Token> comments_;
    std::vector<std::size_t> filtered_;  // indices into all_, comments removed
    std::size_t pos_ = 0;                // index into filtered_
    std::string file_;
    std::vector<Diag> errors_;
    int implicit_module_ = -1;   // index into ast.modules
    int toplevel_fn_ = -1;       // index into implicit module's functions

    // --- token helpers -----------------------------------------------------

    const Token& tok(std::size_t filtered_idx) const {
        return all_[filtered_[filtered_idx]];
    }
    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = pos_ + ahead;
        if (i >= filtered_.size()) i = filtered_.size() - 1;
        return tok(i);
    }
    bool at_eof() const { return peek().kind == TokenKind::Eof; }
    bool at_punct(const char* p) const {
        return peek().kind == TokenKind::Punct && peek().text == p;
    }
    bool at_kw(const char* k) const {
        return peek().kind == TokenKind::Keyword && peek().text == k;
    }
    bool at_ident() const { return peek().kind == TokenKind::Identifier; }

    const Token& advance() {
        const Token& t = peek();
        if (pos_ + 1 < filtered_.size()) ++pos_;
        else pos_ = filtered_.size() - 1;
        return t;
    }

    [[noreturn]] void fail(const std::string& message, const std::string& expected) {
        throw ParseFailure{Diag{peek().span, message, expected}};
    }

    Token expect_punct(const char* p) {
        if (!at_punct(p))
            fail("unexpected " + describe(peek()), std::string("'") + p + "'");
        return advance();
    }
    Token expect_kw(const char* k) {
        if (!at_kw(k))
            fail("unexpected " + describe(peek()), std::string("'") + k + "'");
        return advance();
    }
    Token expect_ident(const char* what) {
        if (!at_ident()) fail("unexpected " + describe(peek()), what);
        return advance();
    }

    static std::string describe(const Token& t) {
        if (t.kind == TokenKind::Eof) return "end of input";
        return std::string(token_kind_name(t.kind)) + " '" + t.text + "'";
    }

    // --- recovery ----------------------------------------------------------

    void sync_stmt() {
        while (!at_eof()) {
            if (at_punct(";")) {
                advance();
                return;
            }
            if (at_punct("}")) return;
            advance();
        }
    }

    void sync_item() {
        while (!at_eof()) {
            if (at_punct(";")) {
                advance();
                return;
            }
            if (at_punct("}")) {
                advance();
                return;
            }
            if (at_kw("module") || at_kw("struct") || at_kw("fun") ||
                at_kw("public") || at_kw("entry") || at_kw("fallback") ||
                at_kw("use"))
                return;
            advance();
        }
    }

    // --- trailing comments -------------------------------------------------

    // Attaches a same-line `// ...` comment that immediately follows the last
    // consumed token.
    void attach_trailing_comment(Stmt& stmt) {
        if (pos_ == 0) return;
        std::size_t last_all = filtered_[pos_ - 1];
        if (last_all + 1 >= all_.size()) return;
        const Token& next = all_[last_all + 1];
        if (next.kind != TokenKind::Comment) return;
        if (next.span.line != all_[last_all].span.line) return;
        std::string text = next.text.substr(2);
        stmt.trailing_comment = trim(text);
    }

    // --- implicit containers -----------------------------------------------

    ModuleDecl& implicit_module(Ast& ast) {
        if (implicit_module_ < 0) {
            ModuleDecl m;
            m.implicit = true;
            m.span = peek().span;
            implicit_module_ = static_cast<int>(ast.modules.size());
            ast.modules.push_back(std::move(m));
        }
        return ast.modules[implicit_module_];
    }

    FunctionDecl& toplevel_fn(Ast& ast) {
        ModuleDecl& m = implicit_module(ast);
        if (toplevel_fn_ < 0) {
            FunctionDecl f;
            f.visibility = Visibility::Public;
            f.name = "__toplevel__";
            f.implicit = true;
            f.span = peek().span;
            f.body.span = peek().span;
            toplevel_fn_ = static_cast<int>(m.functions.size());
            m.functions.push_back(std::move(f));
        }
        return m.functions[toplevel_fn_];
    }

    // --- items ---------------------------------------------------------------

    void parse_top_item(Ast& ast) {
        if (at_kw("module")) {
            ast.modules.push_back(parse_module());
            return;
        }
        if (at_kw("use")) {
            implicit_module(ast).uses.push_back(parse_use());
            return;
        }
        if (at_kw("struct")) {
            implicit_module(ast).structs.push_back(parse_struct());
            return;
        }
        if (at_kw("public") || at_kw("entry") || at_kw("fallback") || at_kw("fun")) {
            implicit_module(ast).functions.push_back(parse_function());
            return;
        }
        if (auto proto = try_parse_prototype()) {
            implicit_module(ast).functions.push_back(std::move(*proto));
            return;
        }
        // Bare top-level statement: collected into one synthetic function.
        FunctionDecl& fn = toplevel_fn(ast);
        try {
            fn.body.stmts.push_back(parse_stmt());
        } catch (ParseFailure& f) {
            errors_.push_back(std::move(f.diag));
            sync_stmt();
        }
    }

    ModuleDecl parse_module() {
        ModuleDecl m;
        m.span = peek().span;
        expect_kw("module");
        if (peek().kind == TokenKind::IntLiteral) {
            m.address = advance().text;
            expect_punct("::");
        }
        m.name = expect_ident("module name").text;
        expect_punct("{");
        while (!at_punct("}") && !at_eof()) {
            try {
                if (at_kw("use")) {
                    m.uses.push_back(parse_use());
                } else if (at_kw("struct")) {
                    m.structs.push_back(parse_struct());
                } else if (at_kw("public") || at_kw("entry") || at_kw("fallback") ||
                           at_kw("fun")) {
                    m.functions.push_back(parse_function());
                } else if (auto proto = try_parse_prototype()) {
                    m.functions.push_back(std::move(*proto));
                } else {
                    fail("unexpected " + describe(peek()) + " in module body",
                         "struct, fun or use declaration");
                }
            } catch (ParseFailure& f) {
                errors_.push_back(std::move(f.diag));
                sync_item();
            }
        }
        expect_punct("}");
        return m;
    }

    UseDecl parse_use() {
        UseDecl u;
        u.span = peek().span;
        expect_kw("use");
        u.path.push_back(expect_ident("import path").text);
        while (at_punct("::")) {
            advance();
            if (at_punct("*")) {
                advance();
                u.wildcard = true;
                break;
            }
            u.path.push_back(expect_ident("import path segment").text);
        }
        expect_punct(";");
        return u;
    }

    StructDecl parse_struct() {
        StructDecl s;
        s.span = peek().span;
        expect_kw("struct");
        s.name = expect_ident("struct name").text;
        if (at_kw("has")) {
            advance();
            s.abilities.push_back(expect_ident("ability name").text);
            while (at_punct(",")) {
                advance();
                s.abilities.push_back(expect_ident("ability name").text);
            }
        }
        expect_punct("{");
        while (!at_punct("}") && !at_eof()) {
            StructField f;
            f.span = peek().span;
            f.name = expect_ident("field name").text;
            expect_punct(":");
            f.type = parse_type();
            s.fields.push_back(std::move(f));
            if (at_punct(",")) {
                advance();
                continue;
            }
            break;
        }
        expect_punct("}");
        return s;
    }

    FunctionDecl parse_function() {
        FunctionDecl f;
        f.span = peek().span;
        if (at_kw("public")) {
            advance();
            f.visibility = Visibility::Public;
        } else if (at_kw("entry")) {
            advance();
            f.visibility = Visibility::Entry;
        } else if (at_kw("fallback")) {
            advance();
            f.visibility = Visibility::Fallback;
        }
        expect_kw("fun");
        f.name = expect_ident("function name").text;
        parse_signature(f);
        f.body = parse_block();
        return f;
    }

    // Bodyless declaration without a `fun` keyword: `store<T>(item: T);`.
    // Only committed when the whole shape matches; otherwise the caller falls
    // back to parsing a statement.
    std::optional<FunctionDecl> try_parse_prototype() {
        if (!at_ident()) return std::nullopt;
        std::size_t saved = pos_;
        try {
            FunctionDecl f;
            f.span = peek().span;
            f.is_prototype = true;
            f.name = advance().text;
            parse_signature(f);
            if (f.generics.empty() && f.params.empty()) throw ParseFailure{Diag{}};
            expect_punct(";");
            return f;
        } catch (ParseFailure&) {
            pos_ = saved;
            return std::nullopt;
        }
    }

    void parse_signature(FunctionDecl& f) {
        if (at_punct("<")) {
            advance();
            while (true) {
                GenericParam g;
                g.name = expect_ident("type parameter").text;
                if (at_punct(":")) {
                    advance();
                    g.constraints.push_back(expect_ident("ability constraint").text);
                    while (at_punct("+")) {
                        advance();
                        g.constraints.push_back(
                            expect_ident("ability constraint").text);
                    }
                }
                f.generics.push_back(std::move(g));
                if (at_punct(",")) {
                    advance();
                    continue;
                }
                break;
            }
            expect_punct(">");
        }
        expect_punct("(");
        while (!at_punct(")") && !at_eof()) {
            Param p;
            p.span = peek().span;
            p.name = expect_ident("parameter name").text;
            expect_punct(":");
            p.type = parse_type();
            f.params.push_back(std::move(p));
            if (at_punct(",")) {
                advance();
                continue;
            }
            break;
        }
        expect_punct(")");
        if (at_punct(":")) {
            advance();
            f.return_type = parse_type();
        } else if (at_kw("returns")) {
            advance();
            f.returns_keyword = true;
            expect_punct("(");
            f.return_type = parse_type();
            expect_punct(")");
        }
    }

    // --- types ---------------------------------------------------------------

    TypeRef parse_type() {
        TypeRef t;
        t.span = peek().span;
        if (at_punct("&")) {
            advance();
            t.kind = TypeRef::Kind::Reference;
            if (at_kw("mut")) {
                advance();
                t.is_mut = true;
            }
            t.elem = std::make_unique<TypeRef>(parse_type());
            return t;
        }
        Token name = expect_ident("type name");
        t.name = name.text;
        if (t.name == "vector" && at_punct("<")) {
            advance();
            t.kind = TypeRef::Kind::Vector;
            t.elem = std::make_unique<TypeRef>(parse_type());
            expect_punct(">");
            return t;
        }
        t.kind = is_primitive_type_name(t.name) ? TypeRef::Kind::Primitive
                                                : TypeRef::Kind::Named;
        return t;
    }

    // --- statements ----------------------------------------------------------

    Block parse_block() {
        Block b;
        b.span = peek().span;
        expect_punct("{");
        while (!at_punct("}") && !at_eof()) {
            try {
                if (at_kw("let") || at_kw("if") || at_kw("while") || at_kw("return") ||
                    at_kw("assert") || at_kw("emit")) {
                    b.stmts.push_back(parse_stmt());
                    continue;
                }
                // Expression-leading: statement, assignment, or trailing expr.
                Span start = peek().span;
                ExprPtr e = parse_expr();
                if (at_punct("=")) {
                    b.stmts.push_back(finish_assign(start, std::move(e)));
                } else if (at_punct(";")) {
                    advance();
                    Stmt s;
                    s.span = start;
                    s.node = ExprStmt{std::move(e)};
                    attach_trailing_comment(s);
                    b.stmts.push_back(std::move(s));
                } else if (at_punct("}")) {
                    b.trailing = std::move(e);
                } else {
                    fail("unexpected " + describe(peek()), "';'");
                }
            } catch (ParseFailure& f) {
                errors_.push_back(std::move(f.diag));
                sync_stmt();
            }
        }
        expect_punct("}");
        return b;
    }

    Stmt finish_assign(const Span& start, ExprPtr target) {
        if (target->kind != Expr::Kind::Name && target->kind != Expr::Kind::Field) {
            throw ParseFailure{
                Diag{start, "invalid assignment target", "name or field path"}};
        }
        expect_punct("=");
        Stmt s;
        s.span = start;
        AssignStmt a;
        a.target = std::move(target);
        a.value = parse_expr();
        s.node = std::move(a);
        expect_punct(";");
        attach_trailing_comment(s);
        return s;
    }

    Stmt parse_stmt() {
        Stmt s;
        s.span = peek().span;
        if (at_kw("let")) {
            advance();
            LetStmt let;
            if (at_kw("mut")) {
                advance();
                let.is_mut = true;
            }
            let.name = expect_ident("binding name").text;
            if (at_punct(":")) {
                advance();
                let.type = parse_type();
            }
            if (at_punct("=")) {
                advance();
                let.init = parse_expr();
            }
            expect_punct(";");
            s.node = std::move(let);
            attach_trailing_comment(s);
            return s;
        }
        if (at_kw("if")) {
            advance();
            IfStmt node;
            expect_punct("(");
            node.cond = parse_expr();
            expect_punct(")");
            node.then_block = parse_block();
            if (at_kw("else")) {
                advance();
                if (at_kw("if")) {
                    // else-if chains normalize to a nested block holding an if.
                    Block wrap;
                    wrap.span = peek().span;
                    wrap.stmts.push_back(parse_stmt());
                    node.else_block = std::move(wrap);
                } else {
                    node.else_block = parse_block();
                }
            }
            s.node = std::move(node);
            return s;
        }
        if (at_kw("while")) {
            advance();
            WhileStmt node;
            expect_punct("(");
            node.cond = parse_expr();
            expect_punct(")");
            node.body = parse_block();
            s.node = std::move(node);
            return s;
        }
        if (at_kw("return")) {
            advance();
            ReturnStmt node;
            if (!at_punct(";")) node.value = parse_expr();
            expect_punct(";");
            s.node = std::move(node);
            attach_trailing_comment(s);
            return s;
        }
        if (at_kw("assert")) {
            advance();
            AssertStmt node;
            expect_punct("(");
            node.cond = parse_expr();
            if (at_punct(",")) {
                advance();
                node.code = parse_expr();
            }
            expect_punct(")");
            expect_punct(";");
            s.node = std::move(node);
            attach_trailing_comment(s);
            return s;
        }
        if (at_kw("emit")) {
            advance();
            EmitStmt node;
            node.event = expect_ident("event name").text;
            expect_punct("(");
            while (!at_punct(")") && !at_eof()) {
                node.args.push_back(parse_expr());
                if (at_punct(",")) {
                    advance();
                    continue;
                }
                break;
            }
            expect_punct(")");
            expect_punct(";");
            s.node = std::move(node);
            attach_trailing_comment(s);
            return s;
        }
        // Expression-leading statement (assignment or call).
        Span start = peek().span;
        ExprPtr e = parse_expr();
        if (at_punct("=")) return finish_assign(start, std::move(e));
        expect_punct(";");
        s.span = start;
        s.node = ExprStmt{std::move(e)};
        attach_trailing_comment(s);
        return s;
    }

    // --- expressions ---------------------------------------------------------

    ExprPtr parse_expr() { return parse_or(); }

    ExprPtr make_binary(const char* op, ExprPtr lhs, ExprPtr rhs) {
        auto e = std::make_unique<Expr>();
        e->kind = Expr::Kind::Binary;
        e->span = lhs->span;
        e->name = op;
        e->lhs = std::move(lhs);
        e->rhs = std::move(rhs);
        return e;
    }

    ExprPtr parse_or() {
        ExprPtr e = parse_and();
        while (at_punct("||")) {
            advance();
            e = make_binary("||", std::move(e), parse_and());
        }
        return e;
    }

    ExprPtr parse_and() {
        ExprPtr e = parse_cmp();
        while (at_punct("&&")) {
            advance();
            e = make_binary("&&", std::move(e), parse_cmp());
        }
        return e;
    }

    ExprPtr parse_cmp() {
        ExprPtr e = parse_add();
        while (at_punct("<") || at_punct(">") || at_punct("<=") || at_punct(">=") ||
               at_punct("==") || at_punct("!=")) {
            std::string op = advance().text;
            e = make_binary(op.c_str(), std::move(e), parse_add());
        }
        return e;
    }

    ExprPtr parse_add() {
        ExprPtr e = parse_mul();
        while (at_punct("+") || at_punct("-")) {
            std::string op = advance().text;
            e = make_binary(op.c_str(), std::move(e), parse_mul());
        }
        return e;
    }

    ExprPtr parse_mul() {
        ExprPtr e = parse_unary();
        while (at_punct("*") || at_punct("/")) {
            std::string op = advance().text;
            e = make_binary(op.c_str(), std::move(e), parse_unary());
        }
        return e;
    }

    ExprPtr parse_unary() {
        if (at_punct("!")) {
            Span sp = peek().span;
            advance();
            auto e = std::make_unique<Expr>();
            e->kind = Expr::Kind::Unary;
            e->span = sp;
            e->name = "!";
            e->lhs = parse_unary();
            return e;
        }
        return parse_postfix();
    }

    ExprPtr parse_postfix() {
        ExprPtr e = parse_primary();
        while (at_punct(".")) {
            advance();
            auto f = std::make_unique<Expr>();
            f->kind = Expr::Kind::Field;
            f->span = e->span;
            f->name = expect_ident("field name").text;
            f->lhs = std::move(e);
            e = std::move(f);
        }
        return e;
    }

    ExprPtr parse_primary() {
        const Token& t = peek();
        if (t.kind == TokenKind::IntLiteral) {
            auto e = std::make_unique<Expr>();
            e->kind = Expr::Kind::IntLit;
            e->span = t.span;
            e->text = t.text;
            e->value = decode_int(t.text);
            advance();
            return e;
        }
        if (t.kind == TokenKind::StringLiteral) {
            auto e = std::make_unique<Expr>();
            e->kind = Expr::Kind::StrLit;
            e->span = t.span;
            e->text = t.text;
            advance();
            return e;
        }
        if (at_kw("true") || at_kw("false")) {
            auto e = std::make_unique<Expr>();
            e->kind = Expr::Kind::BoolLit;
            e->span = t.span;
            e->bvalue = t.text == "true";
            advance();
            return e;
        }
        if (at_punct("(")) {
            advance();
            ExprPtr e = parse_expr();
            expect_punct(")");
            return e;
        }
        if (at_punct("[")) {
            auto e = std::make_unique<Expr>();
            e->kind = Expr::Kind::VecLit;
            e->span = t.span;
            advance();
            while (!at_punct("]") && !at_eof()) {
                e->args.push_back(parse_expr());
                if (at_punct(",")) {
                    advance();
                    continue;
                }
                break;
            }
            expect_punct("]");
            return e;
        }
        if (at_ident()) return parse_path_expr();
        fail("unexpected " + describe(t), "expression");
    }

    // name | path call with optional explicit type arguments
    ExprPtr parse_path_expr() {
        Span start = peek().span;
        std::vector<std::string> path;
        path.push_back(advance().text);
        while (at_punct("::")) {
            advance();
            path.push_back(expect_ident("path segment").text);
        }

        std::vector<TypeRef> type_args;
        if (at_punct("<")) {
            // `f<T>(...)` call or `a < b` comparison; commit only when a
            // well-formed type list is immediately followed by `(`.
            std::size_t saved = pos_;
            try {
                advance();
                type_args.push_back(parse_type());
                while (at_punct(",")) {
                    advance();
                    type_args.push_back(parse_type());
                }
                expect_punct(">");
                if (!at_punct("(")) throw ParseFailure{Diag{}};
            } catch (ParseFailure&) {
                pos_ = saved;
                type_args.clear();
            }
        }

        if (at_punct("(")) {
            auto e = std::make_unique<Expr>();
            e->kind = Expr::Kind::Call;
            e->span = start;
            e->path = std::move(path);
            e->type_args = std::move(type_args);
            advance();
            while (!at_punct(")") && !at_eof()) {
                e->args.push_back(parse_expr());
                if (at_punct(",")) {
                    advance();
                    continue;
                }
                break;
            }
            expect_punct(")");
            return e;
        }

        if (path.size() > 1)
            fail("expected call after path '" + path[0] + "::...'", "'('");
        auto e = std::make_unique<Expr>();
        e->kind = Expr::Kind::Name;
        e->span = start;
        e->name = path[0];
        return e;
    }

    static std::uint64_t decode_int(const std::string& text) {
        std::uint64_t v = 0;
        if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
            auto [p, ec] = std::from_chars(text.data() + 2,
                                           text.data() + text.size(), v, 16);
            (void)p;
            if (ec == std::errc::result_out_of_range) v = UINT64_MAX;
        } else {
            auto [p, ec] =
                std::from_chars(text.data(), text.data() + text.size(), v, 10);
            (void)p;
            if (ec == std::errc::result_out_of_range) v = UINT64_MAX;
        }
        return v;
    }
};

}  // namespace

ParseResult parse_source(const std::string& source, const std::string& file) {
    LexResult lexed = tokenize(source, file);
    Parser parser(std::move(lexed.tokens), file);
    return parser.run(std::move(lexed.errors));
}

}  // namespace mwc
