// SPDX-License-Identifier: Apache-2.0
//
// hmimo - near-field LoS channel models and capacity limits for
// holographic MIMO surfaces with arbitrary placements
//
// Licensed under the Apache License, Version 2.0;
// see http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <string>
#include <vector>

#include "hmimo/channel.hpp"

namespace hmimo {

/// Normalized mean-squared error between a model matrix and the reference:
/// ||h_hat - h||_F^2 / ||h||_F^2. Throws DimensionMismatch on shape mismatch
/// and ZeroReference when the reference norm is zero.
double nmse(const BlockChannelMatrix& h_hat, const BlockChannelMatrix& h);

/// Full singular-value spectrum of a channel matrix, sorted descending.
/// Channel "eigenvalues" are reported as singular values of the (3M)x(3N)
/// matrix (it is not square).
struct SpectrumReport {
    std::string label;
    std::vector<double> values;  ///< length min(3M, 3N), descending
    int rows = 0;
    int cols = 0;
};

SpectrumReport singular_spectrum(const BlockChannelMatrix& h, std::string label = {});

}  // namespace hmimo
