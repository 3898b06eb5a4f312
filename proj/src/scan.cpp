// SPDX-License-Identifier: Apache-2.0
#include "mwc/scan.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>
#include <thread>

#include "mwc/detectors.hpp"
#include "mwc/lexer.hpp"
#include "mwc/model.hpp"
#include "mwc/parser.hpp"

namespace fs = std::filesystem;

namespace mwc {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int count_lines(const std::string& text) {
    if (text.empty()) return 0;
    int lines = static_cast<int>(std::count(text.begin(), text.end(), '\n'));
    if (text.back() != '\n') ++lines;
    return lines;
}

int count_review_pragmas(const std::vector<SourceFile>& sources) {
    static const std::regex review_re(R"(^//\s*mwc:\s*review\s+MWC-\d{3}[ab]?\s*$)");
    int n = 0;
    for (const SourceFile& sf : sources) {
        LexResult lex = tokenize(sf.text, sf.path);
        for (const Token& tok : lex.tokens)
            if (tok.kind == TokenKind::Comment &&
                std::regex_match(tok.text, review_re))
                ++n;
    }
    return n;
}

int count_stmts(const Block& b) {
    int n = 0;
    visit_block_stmts(b, [&](const Stmt&) { ++n; });
    if (b.trailing) ++n;
    return n;
}

ScanOutcome analyze(std::vector<SourceFile> parsed_sources,
                    std::vector<const Ast*> asts, std::vector<Diag> parse_errors,
                    int parse_failed_files, int total_files,
                    std::vector<std::string> target_paths, const Config& cfg) {
    ScanOutcome outcome;
    outcome.parse_errors = std::move(parse_errors);

    SemanticModel model = resolve(asts);
    outcome.semantic_errors = model.errors;

    std::vector<Finding> findings = run_all(model, cfg, parsed_sources);

    ReportStats stats;
    stats.parse_error_count = parse_failed_files;
    for (const SourceFile& sf : parsed_sources)
        stats.total_lines += count_lines(sf.text);
    for (const Ast* ast : asts)
        stats.comment_tokens += static_cast<int>(ast->comments.size());
    for (const auto& fa : model.functions) {
        ++stats.function_count;
        stats.function_stmt_total += count_stmts(fa->decl->body);
    }
    stats.review_pragma_count = count_review_pragmas(parsed_sources);

    outcome.report = build_report(std::move(findings), stats, cfg,
                                  std::move(target_paths), total_files);
    if (!outcome.parse_errors.empty() || !outcome.semantic_errors.empty())
        outcome.exit_code = 2;
    else if (!outcome.report.passed)
        outcome.exit_code = 1;
    else
        outcome.exit_code = 0;
    return outcome;
}

}  // namespace

std::vector<std::string> expand_paths(const std::vector<std::string>& paths) {
    std::set<std::string> out;
    for (const std::string& p : paths) {
        fs::path path(p);
        if (fs::is_regular_file(path)) {
            out.insert(path.string());
            continue;
        }
        if (fs::is_directory(path)) {
            fs::recursive_directory_iterator it(path), end;
            for (; it != end; ++it) {
                const fs::path& cur = it->path();
                std::string name = cur.filename().string();
                if (it->is_directory() && !name.empty() && name[0] == '.') {
                    it.disable_recursion_pending();
                    continue;
                }
                if (it->is_regular_file() && cur.extension() == ".move")
                    out.insert(cur.string());
            }
            continue;
        }
        throw UsageError("no such file or directory: " + p);
    }
    return {out.begin(), out.end()};
}

ScanOutcome run_scan(const ScanOptions& opts, const Config& cfg) {
    std::vector<std::string> files = expand_paths(opts.paths);

    std::vector<std::string> texts(files.size());
    for (std::size_t i = 0; i < files.size(); ++i) texts[i] = read_file(files[i]);

    // Parse with a fixed slot per file so worker count never affects order.
    std::vector<ParseResult> results(files.size());
    int jobs = std::max(1, opts.jobs);
    if (jobs == 1 || files.size() <= 1) {
        for (std::size_t i = 0; i < files.size(); ++i)
            results[i] = parse_source(texts[i], files[i]);
    } else {
        std::vector<std::thread> workers;
        int n = std::min<int>(jobs, static_cast<int>(files.size()));
        for (int w = 0; w < n; ++w)
            workers.emplace_back([&, w] {
                for (std::size_t i = w; i < files.size(); i += n)
                    results[i] = parse_source(texts[i], files[i]);
            });
        for (std::thread& t : workers) t.join();
    }

    std::vector<SourceFile> parsed_sources;
    std::vector<const Ast*> asts;
    std::vector<Diag> parse_errors;
    int failed_files = 0;
    for (std::size_t i = 0; i < files.size(); ++i) {
        if (results[i].ok()) {
            parsed_sources.push_back(SourceFile{files[i], texts[i]});
            asts.push_back(&results[i].ast());
        } else {
            ++failed_files;
            for (const Diag& d : results[i].errors()) parse_errors.push_back(d);
        }
    }

    return analyze(std::move(parsed_sources), std::move(asts),
                   std::move(parse_errors), failed_files,
                   static_cast<int>(files.size()), opts.paths, cfg);
}

ScanOutcome scan_buffer(const std::string& text, const std::string& name,
                        const Config& cfg) {
    ParseResult result = parse_source(text, name);
    std::vector<SourceFile> parsed_sources;
    std::vector<const Ast*> asts;
    std::vector<Diag> parse_errors;
    int failed = 0;
    if (result.ok()) {
        parsed_sources.push_back(SourceFile{name, text});
        asts.push_back(&result.ast());
    } else {
        failed = 1;
        parse_errors = result.errors();
    }
    return analyze(std::move(parsed_sources), std::move(asts),
                   std::move(parse_errors), failed, 1, {name}, cfg);
}

}  // namespace mwc
