// SPDX-License-Identifier: Apache-2.0
//
// hmimo - near-field LoS channel models and capacity limits for
// holographic MIMO surfaces with arbitrary placements
//
// Licensed under the Apache License, Version 2.0;
// see http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace hmimo {

/// Base class for all hmimo errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Source and observation point separated by less than the minimum distance;
/// the Green's function is singular there.
struct CoincidentPoints : Error {
    using Error::Error;
};

/// sin(azimuth_h - azimuth_v) = 0: the two in-plane directions project to
/// parallel lines in the xy-plane and the Delta-z coefficients are undefined.
struct DegenerateAzimuths : Error {
    using Error::Error;
};

/// Intrinsic coordinates (a, b) lie outside the element bounds.
struct OutOfElement : Error {
    using Error::Error;
};

/// Surface placement violates a field invariant (angle ranges, counts, lengths).
struct InvalidPlacement : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

/// Doubling the quadrature order changed the result by more than the
/// configured tolerance.
struct QuadratureDiverged : Error {
    using Error::Error;
};

/// Reference matrix has zero Frobenius norm; NMSE undefined.
struct ZeroReference : Error {
    using Error::Error;
};

/// All singular values are zero; no pattern basis exists.
struct RankZero : Error {
    using Error::Error;
};

/// Experiment configuration could not be parsed or validated.
struct ConfigError : Error {
    using Error::Error;
};

/// Per-block failure during channel assembly, with the offending pair attached.
struct AssemblyError : Error {
    AssemblyError(int m, int n, const std::string& inner)
        : Error("channel block (m=" + std::to_string(m) + ", n=" + std::to_string(n) +
                "): " + inner),
          m_index(m),
          n_index(n) {}

    int m_index;  ///< receive element index (0-based)
    int n_index;  ///< transmit element index (0-based)
};

}  // namespace hmimo
