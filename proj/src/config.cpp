// SPDX-License-Identifier: Apache-2.0
#include "mwc/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mwc {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

bool ci_contains(const std::string& haystack, const std::string& needle) {
    if (needle.empty() || needle.size() > haystack.size()) return false;
    auto lower = [](char c) {
        return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    };
    for (std::size_t i = 0; i + needle.size() <= haystack.size(); ++i) {
        bool match = true;
        for (std::size_t k = 0; k < needle.size(); ++k) {
            if (lower(haystack[i + k]) != lower(needle[k])) {
                match = false;
                break;
            }
        }
        if (match) return true;
    }
    return false;
}

bool ci_equals(const std::string& a, const std::string& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::tolower(static_cast<unsigned char>(a[i])) !=
            std::tolower(static_cast<unsigned char>(b[i])))
            return false;
    }
    return true;
}

bool name_matches_any(const std::string& name, const std::vector<std::string>& list) {
    for (const std::string& entry : list)
        if (ci_contains(name, entry)) return true;
    return false;
}

bool Config::rule_enabled(const std::string& id) const {
    return std::find(enabled_rules.begin(), enabled_rules.end(), id) !=
           enabled_rules.end();
}

Severity Config::severity_for(const CategoryRecord& rec) const {
    auto it = severity_overrides.find(rec.id);
    return it == severity_overrides.end() ? rec.severity_default : it->second;
}

Config default_config(const Registry& reg) {
    Config c;
    for (const CategoryRecord& r : reg.records)
        if (r.strategy != Strategy::Advisory) c.enabled_rules.push_back(r.id);

    Conventions& cv = c.conventions;
    cv.external_prefixes = {"External", "EVM", "callback"};
    cv.crypto_markers = {"crypto", "hash", "verify"};
    cv.oracle_prefixes = {"Oracle"};
    cv.bridge_prefixes = {"Bridge"};
    cv.evm_markers = {"evm"};
    cv.lock_prefix = "lock_";
    cv.freeze_names = {"frozen", "freeze", "paused"};
    cv.supply_names = {"supply", "total"};
    cv.nonce_names = {"nonce", "domain", "context", "chain_id"};
    cv.domain_names = {"domain"};
    cv.payload_names = {"payload"};
    cv.wrap_names = {"wrap"};
    cv.store_fn_names = {"store", "save"};
    cv.commit_names = {"commit", "reveal"};
    cv.callback_names = {"callback"};
    cv.capability_names = {"cap", "capability"};
    cv.sender_names = {"sender", "signer", "origin"};
    cv.auth_names = {"auth", "role", "owner", "admin"};
    cv.hash_call_names = {"hash", "sha", "keccak"};
    cv.abi_decode_names = {"abi", "decode"};
    cv.verify_names = {"verify"};

    c.event_schemas = {{"Transfer", {"from", "to", "amount", "metadata"}}};
    c.generic_abort_codes = {0, 1};
    c.fail_on = Severity::High;
    return c;
}

namespace {

void validate_rule_id(const Registry& reg, const std::string& id,
                      bool allow_advisory, const char* where) {
    const CategoryRecord* rec = reg.find(id);
    if (!rec)
        throw ConfigError(std::string(where) + ": unknown rule id '" + id + "'");
    if (!allow_advisory && rec->strategy == Strategy::Advisory)
        throw ConfigError(std::string(where) + ": " + id +
                          " is advisory-only and has no detector; it can only be "
                          "raised through review pragmas");
}

void load_string_list(const json& j, const char* key, std::vector<std::string>& out) {
    if (!j.contains(key)) return;
    const json& v = j.at(key);
    if (!v.is_array())
        throw ConfigError(std::string("conventions.") + key + " must be an array");
    std::vector<std::string> items;
    for (const json& e : v) {
        if (!e.is_string())
            throw ConfigError(std::string("conventions.") + key +
                              " entries must be strings");
        items.push_back(e.get<std::string>());
    }
    if (items.empty())
        throw ConfigError(std::string("conventions.") + key +
                          " must not be empty (delete the key to keep defaults)");
    out = std::move(items);
}

}  // namespace

Config config_from_json_text(const std::string& text, const Registry& reg) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config JSON is malformed: ") + e.what());
    }
    if (!root.is_object()) throw ConfigError("config JSON must be an object");

    Config c = default_config(reg);

    if (root.contains("enabled_rules")) {
        if (!root.at("enabled_rules").is_array())
            throw ConfigError("enabled_rules must be an array of rule ids");
        std::vector<std::string> rules;
        for (const json& e : root.at("enabled_rules")) {
            std::string id = e.get<std::string>();
            validate_rule_id(reg, id, /*allow_advisory=*/false, "enabled_rules");
            rules.push_back(id);
        }
        std::sort(rules.begin(), rules.end());
        rules.erase(std::unique(rules.begin(), rules.end()), rules.end());
        c.enabled_rules = std::move(rules);
    }

    if (root.contains("severity_overrides")) {
        if (!root.at("severity_overrides").is_object())
            throw ConfigError("severity_overrides must map rule ids to severities");
        for (const auto& [id, val] : root.at("severity_overrides").items()) {
            validate_rule_id(reg, id, /*allow_advisory=*/true, "severity_overrides");
            c.severity_overrides[id] = parse_severity(val.get<std::string>());
        }
    }

    if (root.contains("fail_on")) c.fail_on = parse_severity(root.at("fail_on").get<std::string>());

    if (root.contains("format")) {
        std::string fmt = root.at("format").get<std::string>();
        if (fmt != "json" && fmt != "sarif" && fmt != "md" && fmt != "markdown")
            throw ConfigError("format must be one of json, sarif, md");
        c.format = std::move(fmt);
    }

    if (root.contains("conventions")) {
        const json& cv = root.at("conventions");
        if (!cv.is_object()) throw ConfigError("conventions must be an object");
        Conventions& v = c.conventions;
        load_string_list(cv, "external_prefixes", v.external_prefixes);
        load_string_list(cv, "crypto_markers", v.crypto_markers);
        load_string_list(cv, "oracle_prefixes", v.oracle_prefixes);
        load_string_list(cv, "bridge_prefixes", v.bridge_prefixes);
        load_string_list(cv, "evm_markers", v.evm_markers);
        if (cv.contains("lock_prefix")) {
            v.lock_prefix = cv.at("lock_prefix").get<std::string>();
            if (v.lock_prefix.empty())
                throw ConfigError("conventions.lock_prefix must not be empty");
        }
        load_string_list(cv, "freeze_names", v.freeze_names);
        load_string_list(cv, "supply_names", v.supply_names);
        load_string_list(cv, "nonce_names", v.nonce_names);
        load_string_list(cv, "domain_names", v.domain_names);
        load_string_list(cv, "payload_names", v.payload_names);
        load_string_list(cv, "wrap_names", v.wrap_names);
        load_string_list(cv, "store_fn_names", v.store_fn_names);
        load_string_list(cv, "commit_names", v.commit_names);
        load_string_list(cv, "callback_names", v.callback_names);
        load_string_list(cv, "capability_names", v.capability_names);
        load_string_list(cv, "sender_names", v.sender_names);
        load_string_list(cv, "auth_names", v.auth_names);
        load_string_list(cv, "hash_call_names", v.hash_call_names);
        load_string_list(cv, "abi_decode_names", v.abi_decode_names);
        load_string_list(cv, "verify_names", v.verify_names);
    }

    if (root.contains("event_schemas")) {
        const json& ev = root.at("event_schemas");
        if (!ev.is_object())
            throw ConfigError("event_schemas must map event names to field arrays");
        std::map<std::string, std::vector<std::string>> schemas;
        for (const auto& [name, fields] : ev.items()) {
            if (!fields.is_array())
                throw ConfigError("event_schemas." + name + " must be an array");
            std::vector<std::string> fs;
            for (const json& f : fields) fs.push_back(f.get<std::string>());
            schemas[name] = std::move(fs);
        }
        c.event_schemas = std::move(schemas);
    }

    if (root.contains("generic_abort_codes")) {
        const json& codes = root.at("generic_abort_codes");
        if (!codes.is_array())
            throw ConfigError("generic_abort_codes must be an array of integers");
        std::vector<std::uint64_t> out;
        for (const json& e : codes) {
            if (!e.is_number_unsigned())
                throw ConfigError("generic_abort_codes entries must be non-negative integers");
            out.push_back(e.get<std::uint64_t>());
        }
        c.generic_abort_codes = std::move(out);
    }

    return c;
}

Config load_config_file(const std::string& path, const Registry& reg) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return config_from_json_text(ss.str(), reg);
    } catch (const ConfigError& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

std::string default_config_json(const Registry& reg) {
    Config c = default_config(reg);
    ordered_json j;
    j["enabled_rules"] = c.enabled_rules;
    j["severity_overrides"] = ordered_json::object();
    j["fail_on"] = severity_name(c.fail_on);
    j["format"] = c.format;
    ordered_json cv;
    cv["external_prefixes"] = c.conventions.external_prefixes;
    cv["crypto_markers"] = c.conventions.crypto_markers;
    cv["oracle_prefixes"] = c.conventions.oracle_prefixes;
    cv["bridge_prefixes"] = c.conventions.bridge_prefixes;
    cv["evm_markers"] = c.conventions.evm_markers;
    cv["lock_prefix"] = c.conventions.lock_prefix;
    cv["freeze_names"] = c.conventions.freeze_names;
    cv["supply_names"] = c.conventions.supply_names;
    cv["nonce_names"] = c.conventions.nonce_names;
    cv["domain_names"] = c.conventions.domain_names;
    cv["payload_names"] = c.conventions.payload_names;
    cv["wrap_names"] = c.conventions.wrap_names;
    cv["store_fn_names"] = c.conventions.store_fn_names;
    cv["commit_names"] = c.conventions.commit_names;
    cv["callback_names"] = c.conventions.callback_names;
    cv["capability_names"] = c.conventions.capability_names;
    cv["sender_names"] = c.conventions.sender_names;
    cv["auth_names"] = c.conventions.auth_names;
    cv["hash_call_names"] = c.conventions.hash_call_names;
    cv["abi_decode_names"] = c.conventions.abi_decode_names;
    cv["verify_names"] = c.conventions.verify_names;
    j["conventions"] = std::move(cv);
    ordered_json ev = ordered_json::object();
    for (const auto& [name, fields] : c.event_schemas) ev[name] = fields;
    j["event_schemas"] = std::move(ev);
    j["generic_abort_codes"] = c.generic_abort_codes;
    return j.dump(2) + "\n";
}

}  // namespace mwc
