// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "mwc/severity.hpp"
#include "mwc/span.hpp"

namespace mwc {

struct SourceFile {
    std::string path;
    std::string text;
};

struct Finding {
    std::string rule_id;
    std::string frame;
    Severity severity = Severity::Medium;
    Confidence confidence = Confidence::Precise;
    Span span;
    std::string message;
    std::string snippet;   // offending source line, trimmed
    std::string fix_hint;
};

// Canonical ordering: (file, line, rule_id, column).
bool finding_order(const Finding& a, const Finding& b);

}  // namespace mwc
