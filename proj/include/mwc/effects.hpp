// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <set>
#include <string>
#include <vector>

#include "mwc/ast.hpp"
#include "mwc/config.hpp"

namespace mwc {

// Primary classification of a call target, by name convention. Storage
// primitives (borrow_global, borrow_global_mut, move_to, move_from, exists)
// are recognized before any convention and always win.
enum class CallClass { Unknown, Storage, External, Crypto, OracleFeed, Bridge, Lock };

struct CallInfo {
    CallClass cls = CallClass::Unknown;
    bool evm = false;           // any segment carries an EVM marker
    bool storage_read = false;  // borrow_global / borrow_global_mut / exists
    bool storage_write = false; // move_to / move_from
    std::string lock_name;      // last segment, for Lock calls
};

CallInfo classify_call(const std::vector<std::string>& path, const Config& cfg);

const char* call_class_name(CallClass c);

// Per-statement effect flags, derived from the statement and the call
// classification config. A statement with no calls and no global access has
// at most assert-guard / emits-event / returns set.
struct EffectSet {
    bool reads_global = false;
    bool writes_global = false;
    bool external_call = false;
    bool crypto_call = false;
    bool oracle_call = false;
    bool bridge_call = false;
    bool evm_call = false;
    bool assert_guard = false;
    bool emits_event = false;
    bool returns = false;
    std::vector<std::string> locks_acquired;

    bool empty() const {
        return !reads_global && !writes_global && !external_call && !crypto_call &&
               !oracle_call && !bridge_call && !evm_call && !assert_guard &&
               !emits_event && !returns && locks_acquired.empty();
    }
};

// Name binding summary for one function. Names outside params/locals are
// treated as module/global state references.
struct FunctionBindings {
    std::set<std::string> params;
    std::set<std::string> locals;          // let-bound anywhere in the function
    std::set<std::string> global_aliases;  // lets initialized from borrow_global
    std::set<std::string> reference_params;  // params of reference type

    bool is_unresolved(const std::string& name) const {
        return !params.count(name) && !locals.count(name);
    }
    bool is_global_root(const std::string& name) const {
        return is_unresolved(name) || global_aliases.count(name) > 0;
    }
};

FunctionBindings collect_bindings(const FunctionDecl& fn);

// Effects of one statement (or of a block's trailing expression when
// `stmt == nullptr`). For If/While only the condition is charged here; the
// branch bodies are separate statements in the CFG.
EffectSet stmt_effects(const Stmt* stmt, const Expr* trailing,
                       const FunctionBindings& bindings, const Config& cfg);

}  // namespace mwc
