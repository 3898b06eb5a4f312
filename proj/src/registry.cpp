// SPDX-License-Identifier: Apache-2.0
#include "mwc/registry.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <set>

#include <json.hpp>

namespace mwc {

using nlohmann::json;

const char* severity_name(Severity s) {
    switch (s) {
        case Severity::Low: return "low";
        case Severity::Medium: return "medium";
        case Severity::High: return "high";
        case Severity::Critical: return "critical";
    }
    return "low";
}

const char* confidence_name(Confidence c) {
    return c == Confidence::Precise ? "precise" : "heuristic";
}

const char* strategy_name(Strategy s) {
    switch (s) {
        case Strategy::Syntactic: return "syntactic";
        case Strategy::Flow: return "flow";
        case Strategy::Advisory: return "advisory";
    }
    return "syntactic";
}

Severity parse_severity(const std::string& name) {
    if (name == "low") return Severity::Low;
    if (name == "medium") return Severity::Medium;
    if (name == "high") return Severity::High;
    if (name == "critical") return Severity::Critical;
    throw ConfigError("unknown severity '" + name +
                      "' (expected low, medium, high or critical)");
}

Strategy parse_strategy(const std::string& name) {
    if (name == "syntactic") return Strategy::Syntactic;
    if (name == "flow") return Strategy::Flow;
    if (name == "advisory") return Strategy::Advisory;
    throw RegistryError("unknown strategy '" + name + "'");
}

namespace {

// Splits "MWC-120a" into (120, "a"). Returns false when malformed.
bool split_id(const std::string& id, int& number, std::string& suffix) {
    if (id.rfind("MWC-", 0) != 0) return false;
    std::size_t i = 4;
    std::size_t digits = 0;
    int n = 0;
    while (i < id.size() && std::isdigit(static_cast<unsigned char>(id[i]))) {
        n = n * 10 + (id[i] - '0');
        ++i;
        ++digits;
    }
    if (digits == 0) return false;
    std::string suf = id.substr(i);
    if (!suf.empty() && suf != "a" && suf != "b") return false;
    number = n;
    suffix = suf;
    return true;
}

std::optional<std::string> opt_string(const json& j, const char* key,
                                      const std::string& where) {
    if (!j.contains(key)) throw RegistryError(where + ": missing field '" + key + "'");
    const json& v = j.at(key);
    if (v.is_null()) return std::nullopt;
    if (!v.is_string()) throw RegistryError(where + ": field '" + key + "' must be a string or null");
    return v.get<std::string>();
}

std::string req_string(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key) || !j.at(key).is_string())
        throw RegistryError(where + ": missing string field '" + key + "'");
    return j.at(key).get<std::string>();
}

}  // namespace

Registry load_registry_from_text(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::exception& e) {
        throw RegistryError(std::string("registry JSON is malformed: ") + e.what());
    }
    if (!root.is_object() || !root.contains("categories") ||
        !root.contains("frames") || !root.contains("crosswalk"))
        throw RegistryError(
            "registry JSON must contain categories, frames and crosswalk arrays");

    Registry reg;
    std::set<std::string> seen_ids;

    for (const json& jc : root.at("categories")) {
        CategoryRecord r;
        r.id = req_string(jc, "id", "category");
        const std::string where = "category " + r.id;
        if (!split_id(r.id, r.number, r.suffix))
            throw RegistryError("malformed category id '" + r.id + "'");
        if (!seen_ids.insert(r.id).second)
            throw RegistryError("duplicate category id " + r.id);
        r.title_taxonomy = opt_string(jc, "title_taxonomy", where);
        r.title_frame = opt_string(jc, "title_frame", where);
        r.box_title = req_string(jc, "box_title", where);
        if (r.box_title.empty())
            throw RegistryError(where + ": box_title must not be empty");
        r.frame = req_string(jc, "frame", where);
        r.analysis_hint = opt_string(jc, "analysis_hint", where);
        try {
            r.strategy = parse_strategy(req_string(jc, "strategy", where));
        } catch (const RegistryError& e) {
            throw RegistryError(where + ": " + e.what());
        }
        try {
            r.severity_default = parse_severity(req_string(jc, "severity_default", where));
        } catch (const ConfigError& e) {
            throw RegistryError(where + ": " + e.what());
        }
        r.fix_hint = req_string(jc, "fix_hint", where);
        if (jc.contains("aliases")) {
            for (const json& a : jc.at("aliases")) r.aliases.push_back(a.get<std::string>());
        }
        reg.records.push_back(std::move(r));
    }

    std::sort(reg.records.begin(), reg.records.end(),
              [](const CategoryRecord& a, const CategoryRecord& b) {
                  return std::tie(a.number, a.suffix) < std::tie(b.number, b.suffix);
              });

    for (const json& jf : root.at("frames")) {
        Frame f;
        f.code = req_string(jf, "code", "frame");
        f.name = req_string(jf, "name", "frame " + f.code);
        if (!jf.contains("member_ids") || !jf.at("member_ids").is_array())
            throw RegistryError("frame " + f.code + ": missing member_ids array");
        for (const json& m : jf.at("member_ids"))
            f.member_ids.push_back(m.get<std::string>());
        f.supplementary = f.code.rfind("SUPP-", 0) == 0;
        reg.frames.push_back(std::move(f));
    }

    // Frame references must form a partition of the records.
    std::map<std::string, std::string> owner;  // record id -> frame code
    for (const Frame& f : reg.frames) {
        for (const std::string& id : f.member_ids) {
            if (!seen_ids.count(id))
                throw RegistryError("frame " + f.code + " references unknown id " + id);
            auto [it, inserted] = owner.emplace(id, f.code);
            if (!inserted)
                throw RegistryError("category " + id + " is claimed by frames " +
                                    it->second + " and " + f.code);
        }
    }
    for (const CategoryRecord& r : reg.records) {
        if (!reg.find_frame(r.frame))
            throw RegistryError("category " + r.id + " names unknown frame '" +
                                r.frame + "'");
        auto it = owner.find(r.id);
        if (it == owner.end())
            throw RegistryError("category " + r.id + " is not a member of any frame");
        if (it->second != r.frame)
            throw RegistryError("category " + r.id + " declares frame " + r.frame +
                                " but is listed under " + it->second);
    }

    // The numbering must be dense: every number between the smallest and
    // largest present appears on at least one record.
    if (!reg.records.empty()) {
        std::set<int> numbers;
        for (const CategoryRecord& r : reg.records) numbers.insert(r.number);
        for (int n = *numbers.begin(); n <= *numbers.rbegin(); ++n) {
            if (!numbers.count(n))
                throw RegistryError("id numbering has a gap: MWC-" +
                                    std::to_string(n) + " is missing");
        }
    }

    for (const json& jx : root.at("crosswalk")) {
        SwcCrosswalkEntry e;
        e.aspect = req_string(jx, "aspect", "crosswalk row");
        e.swc_side = req_string(jx, "swc_side", "crosswalk row " + e.aspect);
        e.mwc_side = req_string(jx, "mwc_side", "crosswalk row " + e.aspect);
        if (jx.contains("direct_id_pairs")) {
            for (const json& p : jx.at("direct_id_pairs")) {
                if (!p.is_array() || p.size() != 2)
                    throw RegistryError("crosswalk row " + e.aspect +
                                        ": direct_id_pairs entries must be [swc, mwc]");
                e.direct_id_pairs.emplace_back(p[0].get<std::string>(),
                                               p[1].get<std::string>());
            }
        }
        reg.crosswalk.push_back(std::move(e));
    }

    return reg;
}

const CategoryRecord* Registry::find(const std::string& id) const {
    for (const CategoryRecord& r : records)
        if (r.id == id) return &r;
    return nullptr;
}

const Frame* Registry::find_frame(const std::string& code) const {
    for (const Frame& f : frames)
        if (f.code == code) return &f;
    return nullptr;
}

const Registry& registry() {
    static const Registry instance = [] {
        static const char* kRegistryJson =
#include "registry_data.inc"
            ;
        return load_registry_from_text(kRegistryJson);
    }();
    return instance;
}

LookupResult lookup(const Registry& reg, const std::string& id) {
    int number = 0;
    std::string suffix;
    if (!split_id(id, number, suffix))
        throw NotFoundError("malformed rule id '" + id +
                            "' (expected MWC-<number> with optional a/b suffix)");

    if (const CategoryRecord* exact = reg.find(id)) return LookupResult{exact, ""};

    if (suffix.empty()) {
        // A bare number that exists only in split form resolves to the 'a'
        // record, with a note listing the alternatives.
        std::vector<const CategoryRecord*> same_number;
        for (const CategoryRecord& r : reg.records)
            if (r.number == number) same_number.push_back(&r);
        if (!same_number.empty()) {
            std::string others;
            for (const CategoryRecord* r : same_number) {
                if (!others.empty()) others += " and ";
                others += r->id;
            }
            return LookupResult{same_number.front(),
                                id + " is split into " + others + "; showing " +
                                    same_number.front()->id +
                                    ". Pass an explicit suffix to select another."};
        }
    }

    // Unknown: report the nearest valid ids by numeric distance.
    std::vector<const CategoryRecord*> sorted;
    for (const CategoryRecord& r : reg.records) sorted.push_back(&r);
    std::sort(sorted.begin(), sorted.end(),
              [&](const CategoryRecord* a, const CategoryRecord* b) {
                  int da = std::abs(a->number - number);
                  int db = std::abs(b->number - number);
                  return std::tie(da, a->number, a->suffix) <
                         std::tie(db, b->number, b->suffix);
              });
    std::string nearest;
    for (std::size_t i = 0; i < sorted.size() && i < 3; ++i) {
        if (i) nearest += ", ";
        nearest += sorted[i]->id;
    }
    throw NotFoundError("unknown rule id '" + id + "'; nearest valid ids: " + nearest);
}

LookupResult lookup(const std::string& id) { return lookup(registry(), id); }

bool text_mentions_mwc_number(const std::string& text, int number) {
    std::size_t pos = 0;
    auto read_number = [&](std::size_t& i) -> int {
        int n = 0;
        std::size_t digits = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            n = n * 10 + (text[i] - '0');
            ++i;
            ++digits;
        }
        return digits ? n : -1;
    };
    while ((pos = text.find("MWC-", pos)) != std::string::npos) {
        std::size_t i = pos + 4;
        int lo = read_number(i);
        if (lo < 0) {
            pos += 4;
            continue;
        }
        int hi = lo;
        // Range forms: "MWC-103-105", "MWC-103–105", "MWC-106 to MWC-109".
        if (i < text.size() && (text[i] == '-' || text.compare(i, 3, "\xE2\x80\x93") == 0)) {
            std::size_t j = i + (text[i] == '-' ? 1 : 3);
            int m = read_number(j);
            if (m >= 0) {
                hi = m;
                i = j;
            }
        } else if (text.compare(i, 7, " to MWC") == 0 && i + 8 <= text.size() &&
                   text[i + 7] == '-') {
            std::size_t j = i + 8;
            int m = read_number(j);
            if (m >= 0) {
                hi = m;
                i = j;
            }
        }
        if (number >= lo && number <= hi) return true;
        pos = i;
    }
    return false;
}

std::vector<const SwcCrosswalkEntry*> swc_crosswalk(
    const Registry& reg, const std::optional<std::string>& mwc_id) {
    std::vector<const SwcCrosswalkEntry*> out;
    if (!mwc_id) {
        for (const SwcCrosswalkEntry& e : reg.crosswalk) out.push_back(&e);
        return out;
    }
    LookupResult lr = lookup(reg, *mwc_id);  // throws NotFoundError when unknown
    const CategoryRecord& rec = *lr.record;
    for (const SwcCrosswalkEntry& e : reg.crosswalk) {
        bool match = text_mentions_mwc_number(e.mwc_side, rec.number);
        if (!match) {
            for (const auto& [swc, mwc] : e.direct_id_pairs) {
                int n = 0;
                std::string suf;
                if (split_id(mwc, n, suf) && n == rec.number &&
                    (suf.empty() || suf == rec.suffix)) {
                    match = true;
                    break;
                }
            }
        }
        if (match) out.push_back(&e);
    }
    return out;
}

std::vector<const SwcCrosswalkEntry*> swc_crosswalk(
    const std::optional<std::string>& mwc_id) {
    return swc_crosswalk(registry(), mwc_id);
}

}  // namespace mwc
