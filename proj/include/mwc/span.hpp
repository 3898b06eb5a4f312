// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace mwc {

// Source location. Lines and columns are 1-based; length counts characters.
struct Span {
    std::string file;
    int line = 0;
    int column = 0;
    int length = 0;

    bool operator==(const Span& other) const = default;
};

// A single diagnostic (lexical, syntactic or semantic). `expected` carries an
// expected-token hint for parse errors and is empty otherwise.
struct Diag {
    Span span;
    std::string message;
    std::string expected;
};

std::string format_diag(const Diag& d);
std::string format_span(const Span& s);

}  // namespace mwc
