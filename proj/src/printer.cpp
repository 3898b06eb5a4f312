// SPDX-License-Identifier: Apache-2.0
#include "mwc/printer.hpp"

#include <sstream>

namespace mwc {

namespace {

// Binding strength used to decide where parentheses are required.
int precedence(const std::string& op) {
    if (op == "||") return 1;
    if (op == "&&") return 2;
    if (op == "<" || op == ">" || op == "<=" || op == ">=" || op == "==" ||
        op == "!=")
        return 3;
    if (op == "+" || op == "-") return 4;
    if (op == "*" || op == "/") return 5;
    return 6;
}

void print_expr_prec(std::ostream& os, const Expr& e, int parent_prec,
                     bool right_side);

void print_args(std::ostream& os, const std::vector<ExprPtr>& args) {
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) os << ", ";
        print_expr_prec(os, *args[i], 0, false);
    }
}

void print_expr_prec(std::ostream& os, const Expr& e, int parent_prec,
                     bool right_side) {
    switch (e.kind) {
        case Expr::Kind::IntLit:
        case Expr::Kind::StrLit:
            os << e.text;
            return;
        case Expr::Kind::BoolLit:
            os << (e.bvalue ? "true" : "false");
            return;
        case Expr::Kind::Name:
            os << e.name;
            return;
        case Expr::Kind::Field:
            print_expr_prec(os, *e.lhs, 7, false);
            os << "." << e.name;
            return;
        case Expr::Kind::Unary:
            os << e.name;
            print_expr_prec(os, *e.lhs, 6, false);
            return;
        case Expr::Kind::Binary: {
            int prec = precedence(e.name);
            bool parens = prec < parent_prec || (prec == parent_prec && right_side);
            if (parens) os << "(";
            print_expr_prec(os, *e.lhs, prec, false);
            os << " " << e.name << " ";
            print_expr_prec(os, *e.rhs, prec, true);
            if (parens) os << ")";
            return;
        }
        case Expr::Kind::Call: {
            for (std::size_t i = 0; i < e.path.size(); ++i) {
                if (i) os << "::";
                os << e.path[i];
            }
            if (!e.type_args.empty()) {
                os << "<";
                for (std::size_t i = 0; i < e.type_args.size(); ++i) {
                    if (i) os << ", ";
                    os << print_type(e.type_args[i]);
                }
                os << ">";
            }
            os << "(";
            print_args(os, e.args);
            os << ")";
            return;
        }
        case Expr::Kind::VecLit:
            os << "[";
            print_args(os, e.args);
            os << "]";
            return;
    }
}

class Printer {
  public:
    std::string print(const Ast& ast) {
        for (const auto& m : ast.modules) print_module(m);
        return os_.str();
    }

  private:
    std::ostringstream os_;
    int indent_ = 0;

    void line() { os_ << "\n"; }
    void pad() {
        for (int i = 0; i < indent_; ++i) os_ << "    ";
    }

    void print_module(const ModuleDecl& m) {
        if (!m.implicit) {
            pad();
            os_ << "module ";
            if (m.address) os_ << *m.address << "::";
            os_ << m.name << " {";
            line();
            ++indent_;
        }
        bool first = true;
        for (const auto& u : m.uses) {
            first = false;
            pad();
            os_ << "use ";
            for (std::size_t i = 0; i < u.path.size(); ++i) {
                if (i) os_ << "::";
                os_ << u.path[i];
            }
            if (u.wildcard) os_ << "::*";
            os_ << ";";
            line();
        }
        for (const auto& s : m.structs) {
            if (!first) line();
            first = false;
            print_struct(s);
        }
        for (const auto& f : m.functions) {
            if (!first) line();
            first = false;
            print_function(f);
        }
        if (!m.implicit) {
            --indent_;
            pad();
            os_ << "}";
            line();
        }
    }

    void print_struct(const StructDecl& s) {
        pad();
        os_ << "struct " << s.name;
        if (!s.abilities.empty()) {
            os_ << " has ";
            for (std::size_t i = 0; i < s.abilities.size(); ++i) {
                if (i) os_ << ", ";
                os_ << s.abilities[i];
            }
        }
        os_ << " {";
        line();
        ++indent_;
        for (const auto& f : s.fields) {
            pad();
            os_ << f.name << ": " << print_type(f.type) << ",";
            line();
        }
        --indent_;
        pad();
        os_ << "}";
        line();
    }

    void print_signature(const FunctionDecl& f) {
        if (!f.generics.empty()) {
            os_ << "<";
            for (std::size_t i = 0; i < f.generics.size(); ++i) {
                if (i) os_ << ", ";
                os_ << f.generics[i].name;
                if (!f.generics[i].constraints.empty()) {
                    os_ << ": ";
                    for (std::size_t k = 0; k < f.generics[i].constraints.size();
                         ++k) {
                        if (k) os_ << " + ";
                        os_ << f.generics[i].constraints[k];
                    }
                }
            }
            os_ << ">";
        }
        os_ << "(";
        for (std::size_t i = 0; i < f.params.size(); ++i) {
            if (i) os_ << ", ";
            os_ << f.params[i].name << ": " << print_type(f.params[i].type);
        }
        os_ << ")";
        if (f.return_type) {
            if (f.returns_keyword)
                os_ << " returns (" << print_type(*f.return_type) << ")";
            else
                os_ << ": " << print_type(*f.return_type);
        }
    }

    void print_function(const FunctionDecl& f) {
        if (f.implicit) {
            // Synthesized holder for bare top-level statements.
            for (const auto& s : f.body.stmts) print_stmt(s);
            if (f.body.trailing) {
                pad();
                os_ << print_expr(*f.body.trailing);
                line();
            }
            return;
        }
        pad();
        if (f.is_prototype) {
            os_ << f.name;
            print_signature(f);
            os_ << ";";
            line();
            return;
        }
        if (f.visibility != Visibility::Private) os_ << visibility_name(f.visibility) << " ";
        os_ << "fun " << f.name;
        print_signature(f);
        os_ << " ";
        print_block(f.body);
        line();
    }

    void print_block(const Block& b) {
        os_ << "{";
        line();
        ++indent_;
        for (const auto& s : b.stmts) print_stmt(s);
        if (b.trailing) {
            pad();
            os_ << print_expr(*b.trailing);
            line();
        }
        --indent_;
        pad();
        os_ << "}";
    }

    void print_stmt(const Stmt& stmt) {
        pad();
        std::visit(
            [&](const auto& n) {
                using T = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<T, LetStmt>) {
                    os_ << "let ";
                    if (n.is_mut) os_ << "mut ";
                    os_ << n.name;
                    if (n.type) os_ << ": " << print_type(*n.type);
                    if (n.init) os_ << " = " << print_expr(*n.init);
                    os_ << ";";
                } else if constexpr (std::is_same_v<T, AssignStmt>) {
                    os_ << print_expr(*n.target) << " = " << print_expr(*n.value)
                        << ";";
                } else if constexpr (std::is_same_v<T, IfStmt>) {
                    os_ << "if (" << print_expr(*n.cond) << ") ";
                    print_block(n.then_block);
                    if (n.else_block) {
                        os_ << " else ";
                        print_block(*n.else_block);
                    }
                } else if constexpr (std::is_same_v<T, WhileStmt>) {
                    os_ << "while (" << print_expr(*n.cond) << ") ";
                    print_block(n.body);
                } else if constexpr (std::is_same_v<T, ReturnStmt>) {
                    os_ << "return";
                    if (n.value) os_ << " " << print_expr(*n.value);
                    os_ << ";";
                } else if constexpr (std::is_same_v<T, ExprStmt>) {
                    os_ << print_expr(*n.expr) << ";";
                } else if constexpr (std::is_same_v<T, AssertStmt>) {
                    os_ << "assert(" << print_expr(*n.cond);
                    if (n.code) os_ << ", " << print_expr(*n.code);
                    os_ << ");";
                } else {
                    static_assert(std::is_same_v<T, EmitStmt>);
                    os_ << "emit " << n.event << "(";
                    for (std::size_t i = 0; i < n.args.size(); ++i) {
                        if (i) os_ << ", ";
                        os_ << print_expr(*n.args[i]);
                    }
                    os_ << ");";
                }
            },
            stmt.node);
        line();
    }
};

}  // namespace

std::string print_type(const TypeRef& t) {
    switch (t.kind) {
        case TypeRef::Kind::Reference:
            return std::string("&") + (t.is_mut ? "mut " : "") +
                   (t.elem ? print_type(*t.elem) : "");
        case TypeRef::Kind::Vector:
            return "vector<" + (t.elem ? print_type(*t.elem) : "") + ">";
        case TypeRef::Kind::Primitive:
        case TypeRef::Kind::Named:
            return t.name;
    }
    return t.name;
}

std::string print_expr(const Expr& e) {
    std::ostringstream os;
    print_expr_prec(os, e, 0, false);
    return os.str();
}

std::string pretty_print(const Ast& ast) {
    Printer p;
    return p.print(ast);
}

}  // namespace mwc
