// SPDX-License-Identifier: Apache-2.0
//
// hmimo - near-field LoS channel models and capacity limits for
// holographic MIMO surfaces with arbitrary placements
//
// Licensed under the Apache License, Version 2.0;
// see http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <filesystem>
#include <iosfwd>

#include "hmimo/channel.hpp"

namespace hmimo {

/// CSV form: one line per matrix row, comma-separated "re+imj" entries with
/// full double round-trip precision.
void write_channel_csv(const BlockChannelMatrix& h, std::ostream& out);
void write_channel_csv(const BlockChannelMatrix& h, const std::filesystem::path& path);
BlockChannelMatrix read_channel_csv(const std::filesystem::path& path);

/// Binary dump: 16-byte header (magic "HMNF", u32 rows, u32 cols, u32
/// reserved zero, all little-endian) followed by row-major little-endian f64
/// pairs, real then imaginary, per entry.
void write_channel_binary(const BlockChannelMatrix& h, const std::filesystem::path& path);
BlockChannelMatrix read_channel_binary(const std::filesystem::path& path);

}  // namespace hmimo
