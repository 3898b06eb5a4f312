// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mwc/ast.hpp"
#include "mwc/cfg.hpp"
#include "mwc/effects.hpp"

namespace mwc {

struct FunctionAnalysis {
    const Ast* ast = nullptr;
    const ModuleDecl* module_decl = nullptr;
    const FunctionDecl* decl = nullptr;
    int file_index = 0;  // position of the file in the resolve input
    Cfg cfg;
    FunctionBindings bindings;
};

struct ModuleAddressEntry {
    std::string address;
    const Ast* ast = nullptr;
    const ModuleDecl* module_decl = nullptr;
    int file_index = 0;
};

struct CallEdge {
    const FunctionAnalysis* caller = nullptr;
    const Expr* call = nullptr;
    std::string callee;                     // joined path "A::b"
    const FunctionDecl* resolved = nullptr; // null when target is external
};

// Whole-program view over a set of parsed files. Modules keep per-file
// identity; same-named modules in different files are distinct declarations
// (address collisions are recorded, not errors - they feed the duplicate
// registration rule).
struct SemanticModel {
    std::vector<const Ast*> asts;
    std::vector<std::unique_ptr<FunctionAnalysis>> functions;
    std::map<std::string, std::vector<ModuleAddressEntry>> module_addresses;
    std::vector<CallEdge> call_graph;
    std::vector<Diag> errors;  // duplicate function names etc.

    const StructDecl* find_struct(const Ast* ast, const std::string& name) const;
    std::map<const Ast*, std::map<std::string, const StructDecl*>> structs_by_file;
};

SemanticModel resolve(const std::vector<const Ast*>& asts);

// True when the struct declares one of the given abilities.
bool has_ability(const StructDecl& s, const std::string& ability);

}  // namespace mwc
