// SPDX-License-Identifier: Apache-2.0
#include "mwc/model.hpp"

#include <algorithm>
#include <set>

namespace mwc {

bool has_ability(const StructDecl& s, const std::string& ability) {
    return std::find(s.abilities.begin(), s.abilities.end(), ability) != s.abilities.end();
}

const StructDecl* SemanticModel::find_struct(const Ast* ast, const std::string& name) const {
    auto file_it = structs_by_file.find(ast);
    if (file_it == structs_by_file.end()) return nullptr;
    auto it = file_it->second.find(name);
    return it == file_it->second.end() ? nullptr : it->second;
}

namespace {

// Function lookup key within one file: module name + function name.
struct FileFunctions {
    std::map<std::string, std::map<std::string, const FunctionDecl*>> by_module;
};

void collect_calls(const FunctionAnalysis& fa, std::vector<const Expr*>& out) {
    visit_block_exprs(fa.decl->body, [&](const Expr& e) {
        if (e.kind == Expr::Kind::Call) out.push_back(&e);
    });
}

}  // namespace

SemanticModel resolve(const std::vector<const Ast*>& asts) {
    SemanticModel model;
    model.asts = asts;

    std::map<const Ast*, FileFunctions> functions_by_file;

    for (int fi = 0; fi < static_cast<int>(asts.size()); ++fi) {
        const Ast* ast = asts[fi];
        for (const ModuleDecl& mod : ast->modules) {
            if (mod.address)
                model.module_addresses[*mod.address].push_back(
                    ModuleAddressEntry{*mod.address, ast, &mod, fi});

            std::set<std::string> seen_fns;
            for (const StructDecl& sd : mod.structs) model.structs_by_file[ast][sd.name] = &sd;
            for (const FunctionDecl& fn : mod.functions) {
                if (!seen_fns.insert(fn.name).second) {
                    model.errors.push_back(Diag{
                        fn.span, "duplicate function '" + fn.name + "' in module '" +
                                     mod.name + "'"});
                    continue;
                }
                functions_by_file[ast].by_module[mod.name][fn.name] = &fn;
                auto fa = std::make_unique<FunctionAnalysis>();
                fa->ast = ast;
                fa->module_decl = &mod;
                fa->decl = &fn;
                fa->file_index = fi;
                fa->cfg = build_cfg(fn);
                fa->bindings = collect_bindings(fn);
                model.functions.push_back(std::move(fa));
            }
        }
    }

    // Call graph: single-segment calls bind within the caller's module; a
    // two-segment call "M::f" binds to module M in the same file first, then
    // in any other file (first file wins for determinism).
    for (const auto& fa : model.functions) {
        std::vector<const Expr*> calls;
        collect_calls(*fa, calls);
        for (const Expr* call : calls) {
            CallEdge edge;
            edge.caller = fa.get();
            edge.call = call;
            edge.callee = call_path_string(*call);
            const FunctionDecl* target = nullptr;
            if (call->path.size() == 1) {
                const auto& mods = functions_by_file[fa->ast].by_module;
                auto mod_it = mods.find(fa->module_decl->name);
                if (mod_it != mods.end()) {
                    auto it = mod_it->second.find(call->path[0]);
                    if (it != mod_it->second.end()) target = it->second;
                }
            } else if (call->path.size() == 2) {
                auto try_file = [&](const Ast* ast) -> const FunctionDecl* {
                    auto ff = functions_by_file.find(ast);
                    if (ff == functions_by_file.end()) return nullptr;
                    auto mod_it = ff->second.by_module.find(call->path[0]);
                    if (mod_it == ff->second.by_module.end()) return nullptr;
                    auto it = mod_it->second.find(call->path[1]);
                    return it == mod_it->second.end() ? nullptr : it->second;
                };
                target = try_file(fa->ast);
                if (!target) {
                    for (const Ast* other : asts) {
                        if (other == fa->ast) continue;
                        target = try_file(other);
                        if (target) break;
                    }
                }
            }
            edge.resolved = target;
            model.call_graph.push_back(std::move(edge));
        }
    }

    return model;
}

}  // namespace mwc
