// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <variant>
#include <vector>

#include "mwc/ast.hpp"
#include "mwc/span.hpp"

namespace mwc {

// Parsing is total over text inputs: the result is either an AST or a
// non-empty list of diagnostics, never both, and the parser never aborts the
// process. Recovery skips to the next `;` or `}` so one bad statement does
// not mask later errors.
struct ParseResult {
    std::variant<Ast, std::vector<Diag>> value;

    bool ok() const { return std::holds_alternative<Ast>(value); }
    const Ast& ast() const { return std::get<Ast>(value); }
    Ast& ast() { return std::get<Ast>(value); }
    const std::vector<Diag>& errors() const {
        return std::get<std::vector<Diag>>(value);
    }
};

ParseResult parse_source(const std::string& source, const std::string& file);

}  // namespace mwc
