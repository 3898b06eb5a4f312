// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mwc/errors.hpp"
#include "mwc/registry.hpp"
#include "mwc/severity.hpp"

namespace mwc {

// Name conventions used to classify calls and identifiers. Matching is
// case-insensitive; list entries match as substrings of the identifier,
// except the *_prefixes lists which match a whole path segment.
struct Conventions {
    std::vector<std::string> external_prefixes;  // first segment equals one of these
    std::vector<std::string> crypto_markers;     // any segment contains one
    std::vector<std::string> oracle_prefixes;
    std::vector<std::string> bridge_prefixes;
    std::vector<std::string> evm_markers;        // any segment contains one
    std::string lock_prefix;                     // last segment starts with this

    std::vector<std::string> freeze_names;
    std::vector<std::string> supply_names;
    std::vector<std::string> nonce_names;      // nonce/domain/context identifiers
    std::vector<std::string> domain_names;     // hash domain-tag identifiers
    std::vector<std::string> payload_names;
    std::vector<std::string> wrap_names;       // wrapper function names
    std::vector<std::string> store_fn_names;   // storage-ish function names
    std::vector<std::string> commit_names;     // commit-reveal call names
    std::vector<std::string> callback_names;
    std::vector<std::string> capability_names;
    std::vector<std::string> sender_names;
    std::vector<std::string> auth_names;
    std::vector<std::string> hash_call_names;  // hash call segments
    std::vector<std::string> abi_decode_names; // deserialization call segments
    std::vector<std::string> verify_names;     // signature check call segments
};

struct Config {
    std::vector<std::string> enabled_rules;  // sorted ids; default: all non-advisory
    std::map<std::string, Severity> severity_overrides;
    Severity fail_on = Severity::High;
    std::string format = "json";  // default report format; "json", "sarif" or "md"
    Conventions conventions;
    // Event name -> expected field names (arity is what is checked).
    std::map<std::string, std::vector<std::string>> event_schemas;
    std::vector<std::uint64_t> generic_abort_codes;

    bool rule_enabled(const std::string& id) const;
    Severity severity_for(const CategoryRecord& rec) const;
};

// Built-in defaults; all non-advisory rules enabled.
Config default_config(const Registry& reg);

// Defaults overlaid with a JSON document. Unknown rule ids, advisory rules in
// enabled_rules, bad severities and emptied convention lists all throw
// ConfigError.
Config config_from_json_text(const std::string& text, const Registry& reg);
Config load_config_file(const std::string& path, const Registry& reg);

// The default configuration rendered as pretty JSON (init-config output).
std::string default_config_json(const Registry& reg);

// Case-insensitive matching helpers shared by the detectors.
bool ci_contains(const std::string& haystack, const std::string& needle);
bool ci_equals(const std::string& a, const std::string& b);
bool name_matches_any(const std::string& name, const std::vector<std::string>& list);

}  // namespace mwc
