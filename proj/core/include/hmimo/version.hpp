// SPDX-License-Identifier: Apache-2.0
//
// hmimo - near-field LoS channel models and capacity limits for
// holographic MIMO surfaces with arbitrary placements
//
// Licensed under the Apache License, Version 2.0;
// see http://www.apache.org/licenses/LICENSE-2.0

#pragma once

namespace hmimo {

inline constexpr const char* kToolName = "hmimo";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace hmimo
