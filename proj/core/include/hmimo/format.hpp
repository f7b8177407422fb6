// SPDX-License-Identifier: Apache-2.0
//
// hmimo - near-field LoS channel models and capacity limits for
// holographic MIMO surfaces with arbitrary placements
//
// Licensed under the Apache License, Version 2.0;
// see http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <string>

namespace hmimo {

/// Shortest decimal string that round-trips the double ('.' decimal point,
/// locale independent).
std::string format_f64(double value);

/// Complex value as "re+imj" / "re-imj".
std::string format_complex(std::complex<double> value);

/// 16-digit lowercase hex.
std::string format_hex64(std::uint64_t value);

/// FNV-1a 64-bit hash.
std::uint64_t fnv1a64(std::string_view text);

}  // namespace hmimo
