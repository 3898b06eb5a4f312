// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mwc/span.hpp"

namespace mwc {

enum class TokenKind {
    Identifier,
    Keyword,
    IntLiteral,
    StringLiteral,
    Punct,
    Comment,
    Eof,
};

// Tokens are lossless: `text` is the exact source slice, and `offset` is the
// byte position, so tokens + inter-token whitespace reproduce the input.
struct Token {
    TokenKind kind = TokenKind::Eof;
    std::string text;
    Span span;
    std::size_t offset = 0;
};

const char* token_kind_name(TokenKind kind);

}  // namespace mwc
