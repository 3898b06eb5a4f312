// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "mwc/parser.hpp"
#include "mwc/printer.hpp"

#include "support/helpers.hpp"

using namespace mwc;
using testing_support::parse_ok;

TEST_CASE("pretty output is stable for a small module") {
    Ast ast = parse_ok(
        "module 0x1::Bank {  fun withdraw( amount :u64 ) { ledger = ledger - amount;"
        " External::send(amount); } }");
    const std::string expected =
        "module 0x1::Bank {\n"
        "    fun withdraw(amount: u64) {\n"
        "        ledger = ledger - amount;\n"
        "        External::send(amount);\n"
        "    }\n"
        "}\n";
    CHECK(pretty_print(ast) == expected);
}

TEST_CASE("print then reparse reproduces the structure") {
    const char* snippets[] = {
        "let mut i = 0;\nwhile (i >= 0) {\n    i = i + 1;\n}\n",
        "use Lib::*;\n",
        "store<T>(item: T);\n",
        "fun f(a: u64) {\n    if (a > 1) {\n        g();\n    } else if (a > 0) {\n"
        "        h();\n    } else {\n        k();\n    }\n}\n",
        "module 0x1::E {\n    fun log(from: address) {\n"
        "        emit Transfer(from, from, 1);\n        return;\n    }\n}\n",
        "module 0x1::V {\n    struct Coin has key, store {\n        amount: u64,\n"
        "    }\n    public fun peek(): u64 {\n        total\n    }\n}\n",
        "fun g(addr: address) {\n    assert(exists<State>(addr), 1);\n"
        "    let s = borrow_global_mut<State>(addr);\n    s.value = [1, 2];\n}\n",
    };
    for (const char* snippet : snippets) {
        INFO(snippet);
        Ast first = parse_ok(snippet);
        std::string printed = pretty_print(first);
        Ast second = parse_ok(printed, "printed.move");
        CHECK(equal(first, second));
        // A second round is byte-identical: printing has a fixed point.
        CHECK(pretty_print(second) == printed);
    }
}

TEST_CASE("round-trip holds over every corpus fixture") {
    for (const auto& path : testing_support::corpus_move_files()) {
        INFO(path.string());
        Ast first = parse_ok(testing_support::read_file(path), path.string());
        std::string printed = pretty_print(first);
        Ast second = parse_ok(printed, path.string());
        CHECK(equal(first, second));
        CHECK(pretty_print(second) == printed);
    }
}

TEST_CASE("expression printing keeps precedence readable") {
    Ast ast = parse_ok("let x = a + b * c;\nlet y = (a + b) * c;\n");
    std::string printed = pretty_print(ast);
    CHECK(printed.find("a + b * c") != std::string::npos);
    CHECK(printed.find("(a + b) * c") != std::string::npos);
    Ast again = parse_ok(printed);
    CHECK(equal(ast, again));
}

TEST_CASE("type printing") {
    Ast ast = parse_ok("fun f(v: vector<u8>, r: &mut Token, s: &signer) {\n}\n");
    const FunctionDecl& f = ast.modules[0].functions[0];
    CHECK(print_type(f.params[0].type) == "vector<u8>");
    CHECK(print_type(f.params[1].type) == "&mut Token");
    CHECK(print_type(f.params[2].type) == "&signer");
}
