// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "mwc/ast.hpp"

namespace mwc {

// Deterministic pretty-printer. Guarantees parse(print(parse(x))) is
// structurally equal to parse(x); comments are dropped and spans may move.
std::string pretty_print(const Ast& ast);

std::string print_type(const TypeRef& type);
std::string print_expr(const Expr& expr);

}  // namespace mwc
