// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace mwc {

inline constexpr const char* kToolName = "mwc-lint";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace mwc
