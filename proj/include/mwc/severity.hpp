// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

namespace mwc {

enum class Severity { Low = 0, Medium = 1, High = 2, Critical = 3 };

enum class Confidence { Precise, Heuristic };

// How a category is checked: pattern over the AST, control/data-flow
// reasoning, or advisory-only (no checker; surfaced via review pragmas).
enum class Strategy { Syntactic, Flow, Advisory };

const char* severity_name(Severity s);
const char* confidence_name(Confidence c);
const char* strategy_name(Strategy s);

// Throw ConfigError / RegistryError on unknown names.
Severity parse_severity(const std::string& name);
Strategy parse_strategy(const std::string& name);

}  // namespace mwc
