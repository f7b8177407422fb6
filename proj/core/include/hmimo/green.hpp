// SPDX-License-Identifier: Apache-2.0
//
// hmimo - near-field LoS channel models and capacity limits for
// holographic MIMO surfaces with arbitrary placements
//
// Licensed under the Apache License, Version 2.0;
// see http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <Eigen/Core>
#include <complex>

#include "hmimo/vec3.hpp"

namespace hmimo {

using Complex = std::complex<double>;
using Mat3c = Eigen::Matrix3cd;

inline constexpr double kSpeedOfLight = 299792458.0;   // m/s
inline constexpr double kFreeSpaceImpedance = 376.73;  // ohms

/// Free-space wave parameters. Invariants: wavelength = c/frequency and
/// wavenumber * wavelength = 2*pi.
struct WaveParams {
    double frequency;   ///< Hz
    double wavelength;  ///< meters
    double wavenumber;  ///< 2*pi/wavelength, 1/meters
    double impedance = kFreeSpaceImpedance;  ///< ohms

    static WaveParams from_frequency(double hz);
    /// Builds consistent parameters from a (possibly rounded) wavelength.
    static WaveParams from_wavelength(double meters);
};

/// Free-space tensor (dyadic) Green's function between source point t and
/// observation point r, explicit closed form:
///
///   G = (-i e^{i k d} / (4 pi d)) * [ (1 + i/(kd) - 1/(kd)^2) I
///                                     + (3/(kd)^2 - 3i/(kd) - 1) d d^T / d^2 ]
///
/// with d = r - t. Complex symmetric (G = G^T, not Hermitian) and reciprocal
/// in (r, t). Throws CoincidentPoints when |d| < 1e-9 m.
Mat3c green_tensor(const Vec3& r, const Vec3& t, const WaveParams& w);

/// Green tensor as a function of the separation vector alone.
Mat3c green_tensor_at(const Vec3& separation, const WaveParams& w);

/// Amplitude term of the Green tensor: the tensor at the given separation
/// with its scalar phase factor e^{i k |separation|} divided out.
Mat3c amplitude_tensor(const Vec3& separation, const WaveParams& w);

/// Closed form of trace(G^H G) for the Green tensor at the given separation:
///
///   eps1/d^2 + eps2/d^4 + eps3/d^6,
///   eps1 = [3 - tr(dd^T/d^2)] / (16 pi^2),
///   eps2 = [5 tr(dd^T/d^2) - 3] / (16 pi^2 k^2),
///   eps3 = [3 tr(dd^T/d^2) + 3] / (16 pi^2 k^4).
///
/// The trace term is computed from the separation vector as written (it
/// equals 1 for every nonzero separation). Strictly positive; throws
/// CoincidentPoints when |separation| < 1e-9 m.
double green_frobenius_sq_closed_form(const Vec3& separation, const WaveParams& w);

/// Minimum separation accepted by the Green evaluations, meters.
inline constexpr double kMinSeparation = 1e-9;

namespace detail {

/// Accumulation-friendly Green evaluation: writes the six independent entries
/// of the symmetric tensor (xx, yy, zz, xy, xz, yz scaled by `weight`) onto
/// `acc`. Shared by green_tensor and the channel quadrature loop.
void green_accumulate(const Vec3& d, double k0, double weight, Complex acc[6]);

}  // namespace detail

}  // namespace hmimo
