// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "mwc/span.hpp"
#include "mwc/token.hpp"

namespace mwc {

struct LexResult {
    std::vector<Token> tokens;  // always ends with an Eof token
    std::vector<Diag> errors;   // unterminated strings, stray characters
};

// Tokenizes `source`. Never throws; problems are reported as diagnostics and
// lexing continues so later errors are still visible.
LexResult tokenize(const std::string& source, const std::string& file);

bool is_keyword(const std::string& word);

}  // namespace mwc
