// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace mwc {

// Base class for all recoverable tool errors surfaced to callers.
class MwcError : public std::runtime_error {
  public:
    explicit MwcError(const std::string& msg) : std::runtime_error(msg) {}
};

// Registry data failed validation (duplicate id, unknown frame, bad shape).
class RegistryError : public MwcError {
  public:
    using MwcError::MwcError;
};

// A rule/frame id does not exist. Message lists nearest valid ids.
class NotFoundError : public MwcError {
  public:
    using MwcError::MwcError;
};

// Configuration file or override set is invalid.
class ConfigError : public MwcError {
  public:
    using MwcError::MwcError;
};

// Corpus directory violates the fixture layout contract.
class CorpusError : public MwcError {
  public:
    using MwcError::MwcError;
};

// A rule id was passed to an operation that cannot run it (advisory/unknown).
class UnsupportedRuleError : public MwcError {
  public:
    using MwcError::MwcError;
};

// Bad command-line usage or unknown output format.
class UsageError : public MwcError {
  public:
    using MwcError::MwcError;
};

}  // namespace mwc
