// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mwc/errors.hpp"
#include "mwc/severity.hpp"

namespace mwc {

// One weakness category. Ids are "MWC-<number>" with an optional letter
// suffix used where one number carries two distinct categories (MWC-120a
// covers weak signature verification, MWC-120b prover incompleteness).
struct CategoryRecord {
    std::string id;      // "MWC-101", "MWC-120a"
    int number = 0;      // 101, 120
    std::string suffix;  // "", "a", "b"
    std::optional<std::string> title_taxonomy;  // catalog wording
    std::optional<std::string> title_frame;     // frame wording
    std::string box_title;                      // short display title
    std::string frame;                          // owning frame code
    std::optional<std::string> analysis_hint;
    Strategy strategy = Strategy::Syntactic;
    Severity severity_default = Severity::Medium;
    std::string fix_hint;
    std::vector<std::string> aliases;
};

struct Frame {
    std::string code;  // "BMI", "SUPP-CRYPTO", ...
    std::string name;
    std::vector<std::string> member_ids;
    bool supplementary = false;
};

// One row of the SWC comparison table. Most rows compare prose; rows that
// name specific ids on both sides also carry explicit (swc, mwc) pairs.
struct SwcCrosswalkEntry {
    std::string aspect;
    std::string swc_side;
    std::string mwc_side;
    std::vector<std::pair<std::string, std::string>> direct_id_pairs;
};

struct Registry {
    std::vector<CategoryRecord> records;  // sorted by (number, suffix)
    std::vector<Frame> frames;            // primary frames first
    std::vector<SwcCrosswalkEntry> crosswalk;

    const CategoryRecord* find(const std::string& id) const;  // exact id, or null
    const Frame* find_frame(const std::string& code) const;
};

struct LookupResult {
    const CategoryRecord* record = nullptr;
    // Set when the query was ambiguous (e.g. bare "MWC-120") and a
    // deterministic choice was made.
    std::string note;
};

// Parses and validates registry JSON. Throws RegistryError naming the
// offending id/frame when the data is malformed.
Registry load_registry_from_text(const std::string& json_text);

// The built-in registry (embedded at build time). Loaded once; later calls
// return the same instance.
const Registry& registry();

// Resolves a category id. Bare "MWC-120" resolves to "MWC-120a" with an
// explanatory note. Unknown ids throw NotFoundError listing the nearest
// valid ids.
LookupResult lookup(const Registry& reg, const std::string& id);
LookupResult lookup(const std::string& id);

// Crosswalk rows; when `mwc_id` is given, only rows that mention that id
// (directly or via a numeric range) or map it in direct_id_pairs.
std::vector<const SwcCrosswalkEntry*> swc_crosswalk(
    const Registry& reg, const std::optional<std::string>& mwc_id);
std::vector<const SwcCrosswalkEntry*> swc_crosswalk(
    const std::optional<std::string>& mwc_id);

// True when `text` mentions the given category number, counting numeric
// ranges such as "MWC-103-105" or "MWC-106 to MWC-109". Exposed for tests.
bool text_mentions_mwc_number(const std::string& text, int number);

}  // namespace mwc
