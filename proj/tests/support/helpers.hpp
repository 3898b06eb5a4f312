// SPDX-License-Identifier: Apache-2.0
#pragma once
//
// Shared plumbing for the unit tests: parse snippets, build semantic models,
// run the detector engine, and enumerate the shipped fixture corpus.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mwc/config.hpp"
#include "mwc/detectors.hpp"
#include "mwc/findings.hpp"
#include "mwc/model.hpp"
#include "mwc/parser.hpp"
#include "mwc/registry.hpp"
#include "mwc/span.hpp"

namespace testing_support {

inline mwc::Ast parse_ok(const std::string& text,
                         const std::string& file = "snippet.move") {
    mwc::ParseResult r = mwc::parse_source(text, file);
    if (!r.ok()) {
        std::string msg = "expected snippet to parse:";
        for (const mwc::Diag& d : r.errors()) msg += "\n  " + mwc::format_diag(d);
        throw std::runtime_error(msg);
    }
    return std::move(r.ast());
}

// Parsed files plus the resolved model over them. The model holds raw
// pointers into `asts`, so the struct is move-only and `asts` must not be
// resized after construction.
struct Analysis {
    std::vector<mwc::Ast> asts;
    std::vector<mwc::SourceFile> sources;
    mwc::SemanticModel model;
};

inline Analysis analyze(std::vector<std::pair<std::string, std::string>> files) {
    Analysis a;
    a.asts.reserve(files.size());
    for (auto& [path, text] : files) {
        a.asts.push_back(parse_ok(text, path));
        a.sources.push_back(mwc::SourceFile{path, text});
    }
    std::vector<const mwc::Ast*> ptrs;
    for (const mwc::Ast& ast : a.asts) ptrs.push_back(&ast);
    a.model = mwc::resolve(ptrs);
    return a;
}

inline std::vector<mwc::Finding> scan_snippet(
    const std::string& text, const std::string& path = "snippet.move") {
    Analysis a = analyze({{path, text}});
    return mwc::run_all(a.model, mwc::default_config(mwc::registry()), a.sources);
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::vector<std::filesystem::path> corpus_move_files() {
    std::vector<std::filesystem::path> out;
    for (const auto& entry :
         std::filesystem::recursive_directory_iterator(MWC_CORPUS_DIR))
        if (entry.is_regular_file() && entry.path().extension() == ".move")
            out.push_back(entry.path());
    std::sort(out.begin(), out.end());
    if (out.empty()) throw std::runtime_error("fixture corpus is empty");
    return out;
}

}  // namespace testing_support
