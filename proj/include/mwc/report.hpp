// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "mwc/config.hpp"
#include "mwc/findings.hpp"

namespace mwc {

struct CodeQuality {
    double comment_density = 0.0;      // comment tokens per source line
    double avg_function_length = 0.0;  // statements per function
    int parse_error_count = 0;
};

struct FrameActivity {
    std::string frame;
    int precise = 0;
    int heuristic = 0;
};

enum class FraudStatus { Flagged, Clear, NotAssessed };

const char* fraud_status_name(FraudStatus s);

struct FraudChecklistItem {
    std::string name;
    FraudStatus status = FraudStatus::NotAssessed;
};

struct AuditDimensions {
    CodeQuality code_quality;
    std::vector<FrameActivity> security_practices;  // frames with findings
    std::vector<FraudChecklistItem> fraud_analysis; // fixed 7-item checklist
};

// Aggregate inputs for the report dimensions, gathered during scanning.
struct ReportStats {
    int total_lines = 0;
    int comment_tokens = 0;
    int function_count = 0;
    int function_stmt_total = 0;
    int parse_error_count = 0;
    int review_pragma_count = 0;
};

struct Report {
    std::string tool;
    std::string version;
    std::vector<std::string> target_paths;
    int file_count = 0;
    std::vector<Finding> findings;
    AuditDimensions dimensions;
    bool passed = true;
    std::vector<std::string> summary;  // exactly eight sentences
};

Report build_report(std::vector<Finding> findings, const ReportStats& stats,
                    const Config& cfg, std::vector<std::string> target_paths,
                    int file_count);

std::string render_json(const Report& report);
std::string render_sarif(const Report& report);
std::string render_markdown(const Report& report);

// Dispatch on "json" | "sarif" | "md"/"markdown"; UsageError otherwise.
std::string render_report(const Report& report, const std::string& format);

}  // namespace mwc
