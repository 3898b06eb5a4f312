// SPDX-License-Identifier: Apache-2.0
#include "mwc/lexer.hpp"

#include <array>
#include <cctype>

namespace mwc {

namespace {

const std::array<const char*, 19> kKeywords = {
    "module", "struct", "fun",    "public", "entry",  "fallback", "let",
    "mut",    "if",     "else",   "while",  "return", "assert",   "emit",
    "use",    "has",    "returns", "true",  "false",
};

// Two-character punctuators, checked before single characters.
const std::array<const char*, 7> kPunct2 = {"::", "==", "!=", "<=",
                                            ">=", "&&", "||"};

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

bool is_keyword(const std::string& word) {
    for (const char* k : kKeywords) {
        if (word == k) return true;
    }
    return false;
}

const char* token_kind_name(TokenKind kind) {
    switch (kind) {
        case TokenKind::Identifier: return "identifier";
        case TokenKind::Keyword: return "keyword";
        case TokenKind::IntLiteral: return "integer literal";
        case TokenKind::StringLiteral: return "string literal";
        case TokenKind::Punct: return "punctuation";
        case TokenKind::Comment: return "comment";
        case TokenKind::Eof: return "end of input";
    }
    return "token";
}

LexResult tokenize(const std::string& source, const std::string& file) {
    LexResult out;
    std::size_t i = 0;
    int line = 1;
    int column = 1;

    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n && i < source.size(); ++k) {
            if (source[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
            ++i;
        }
    };

    auto push = [&](TokenKind kind, std::size_t start, std::size_t len,
                    int tok_line, int tok_col) {
        Token t;
        t.kind = kind;
        t.text = source.substr(start, len);
        t.span = Span{file, tok_line, tok_col, static_cast<int>(len)};
        t.offset = start;
        out.tokens.push_back(std::move(t));
    };

    while (i < source.size()) {
        char c = source[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        const std::size_t start = i;
        const int tok_line = line;
        const int tok_col = column;

        if (c == '/' && i + 1 < source.size() && source[i + 1] == '/') {
            std::size_t end = source.find('\n', i);
            std::size_t len =
                (end == std::string::npos ? source.size() : end) - start;
            advance(len);
            push(TokenKind::Comment, start, len, tok_line, tok_col);
            continue;
        }
        if (is_ident_start(c)) {
            std::size_t len = 1;
            while (start + len < source.size() && is_ident_char(source[start + len]))
                ++len;
            advance(len);
            std::string word = source.substr(start, len);
            push(is_keyword(word) ? TokenKind::Keyword : TokenKind::Identifier,
                 start, len, tok_line, tok_col);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            // Decimal or 0x hex; trailing identifier characters are folded in
            // so `0x1` and malformed literals stay one token.
            std::size_t len = 1;
            while (start + len < source.size() && is_ident_char(source[start + len]))
                ++len;
            advance(len);
            push(TokenKind::IntLiteral, start, len, tok_line, tok_col);
            continue;
        }
        if (c == '"') {
            std::size_t j = i + 1;
            bool closed = false;
            while (j < source.size()) {
                if (source[j] == '\\' && j + 1 < source.size()) {
                    j += 2;
                    continue;
                }
                if (source[j] == '"') {
                    closed = true;
                    ++j;
                    break;
                }
                if (source[j] == '\n') break;
                ++j;
            }
            std::size_t len = j - start;
            advance(len);
            push(TokenKind::StringLiteral, start, len, tok_line, tok_col);
            if (!closed) {
                out.errors.push_back(
                    Diag{Span{file, tok_line, tok_col, static_cast<int>(len)},
                         "unterminated string literal", "\""});
            }
            continue;
        }
        bool matched2 = false;
        if (i + 1 < source.size()) {
            for (const char* p : kPunct2) {
                if (source.compare(i, 2, p) == 0) {
                    advance(2);
                    push(TokenKind::Punct, start, 2, tok_line, tok_col);
                    matched2 = true;
                    break;
                }
            }
        }
        if (matched2) continue;
        static const std::string kSingle = "{}()<>[],;:=+-*/!&.#%|";
        if (kSingle.find(c) != std::string::npos) {
            advance(1);
            push(TokenKind::Punct, start, 1, tok_line, tok_col);
            continue;
        }
        advance(1);
        out.errors.push_back(Diag{Span{file, tok_line, tok_col, 1},
                                  std::string("unexpected character '") + c + "'",
                                  ""});
    }

    Token eof;
    eof.kind = TokenKind::Eof;
    eof.span = Span{file, line, column, 0};
    eof.offset = source.size();
    out.tokens.push_back(std::move(eof));
    return out;
}

std::string format_span(const Span& s) {
    return s.file + ":" + std::to_string(s.line) + ":" + std::to_string(s.column);
}

std::string format_diag(const Diag& d) {
    std::string msg = format_span(d.span) + ": " + d.message;
    if (!d.expected.empty()) msg += " (expected " + d.expected + ")";
    return msg;
}

}  // namespace mwc
