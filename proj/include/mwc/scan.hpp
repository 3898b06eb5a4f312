// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "mwc/config.hpp"
#include "mwc/report.hpp"
#include "mwc/span.hpp"

namespace mwc {

struct ScanOptions {
    std::vector<std::string> paths;  // files or directories
    int jobs = 1;                    // parse worker threads
};

struct ScanOutcome {
    Report report;
    std::vector<Diag> parse_errors;
    std::vector<Diag> semantic_errors;
    // 0 clean; 1 findings at/above fail-on; 2 parse or semantic errors.
    int exit_code = 0;
};

// Expands paths to .move files: directories recurse (hidden directories are
// skipped), results are lexicographically sorted and deduplicated. Missing
// paths throw UsageError.
std::vector<std::string> expand_paths(const std::vector<std::string>& paths);

// Full pipeline: expand, parse (optionally in parallel), resolve, detect,
// report. Output is byte-identical for any worker count.
ScanOutcome run_scan(const ScanOptions& opts, const Config& cfg);

// Scans a single in-memory buffer (used by the language bindings).
ScanOutcome scan_buffer(const std::string& text, const std::string& name,
                        const Config& cfg);

}  // namespace mwc
