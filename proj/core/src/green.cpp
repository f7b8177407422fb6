// SPDX-License-Identifier: Apache-2.0
//
// hmimo - near-field LoS channel models and capacity limits for
// holographic MIMO surfaces with arbitrary placements
//
// Licensed under the Apache License, Version 2.0;
// see http://www.apache.org/licenses/LICENSE-2.0

#include "hmimo/green.hpp"

#include <cmath>

#include "hmimo/errors.hpp"

namespace hmimo {

WaveParams WaveParams::from_frequency(double hz) {
    WaveParams w;
    w.frequency = hz;
    w.wavelength = kSpeedOfLight / hz;
    w.wavenumber = 2.0 * M_PI / w.wavelength;
    return w;
}

WaveParams WaveParams::from_wavelength(double meters) {
    WaveParams w;
    w.wavelength = meters;
    w.frequency = kSpeedOfLight / meters;
    w.wavenumber = 2.0 * M_PI / meters;
    return w;
}

namespace detail {

void green_accumulate(const Vec3& d, double k0, double weight, Complex acc[6]) {
    const double d2 = d.squared_norm();
    const double dist = std::sqrt(d2);
    if (dist < kMinSeparation)
        throw CoincidentPoints("green_tensor: source and observation points coincide");

    const double kd = k0 * dist;
    const double inv_kd = 1.0 / kd;
    const double inv_kd2 = inv_kd * inv_kd;

    // scale = -i e^{i kd} / (4 pi d), times the caller's quadrature weight
    const Complex phase(std::cos(kd), std::sin(kd));
    const Complex scale = Complex(0.0, -weight / (4.0 * M_PI * dist)) * phase;

    const Complex ca = scale * Complex(1.0 - inv_kd2, inv_kd);          // identity term
    const Complex cb = scale * Complex(3.0 * inv_kd2 - 1.0, -3.0 * inv_kd) / d2;  // projector term

    acc[0] += ca + cb * (d.x * d.x);
    acc[1] += ca + cb * (d.y * d.y);
    acc[2] += ca + cb * (d.z * d.z);
    acc[3] += cb * (d.x * d.y);
    acc[4] += cb * (d.x * d.z);
    acc[5] += cb * (d.y * d.z);
}

}  // namespace detail

namespace {

Mat3c from_accumulator(const Complex acc[6]) {
    Mat3c g;
    g(0, 0) = acc[0];
    g(1, 1) = acc[1];
    g(2, 2) = acc[2];
    g(0, 1) = g(1, 0) = acc[3];
    g(0, 2) = g(2, 0) = acc[4];
    g(1, 2) = g(2, 1) = acc[5];
    return g;
}

}  // namespace

Mat3c green_tensor_at(const Vec3& separation, const WaveParams& w) {
    Complex acc[6] = {};
    detail::green_accumulate(separation, w.wavenumber, 1.0, acc);
    return from_accumulator(acc);
}

Mat3c green_tensor(const Vec3& r, const Vec3& t, const WaveParams& w) {
    return green_tensor_at(r - t, w);
}

Mat3c amplitude_tensor(const Vec3& separation, const WaveParams& w) {
    const double dist = separation.norm();
    if (dist < kMinSeparation)
        throw CoincidentPoints("amplitude_tensor: zero separation");
    const double kd = w.wavenumber * dist;
    const Complex conj_phase(std::cos(kd), -std::sin(kd));
    return green_tensor_at(separation, w) * conj_phase;
}

double green_frobenius_sq_closed_form(const Vec3& separation, const WaveParams& w) {
    const double d2 = separation.squared_norm();
    const double dist = std::sqrt(d2);
    if (dist < kMinSeparation)
        throw CoincidentPoints("green_frobenius_sq_closed_form: zero separation");

    // trace(dd^T/d^2), written out rather than folded to its constant value
    const double tr = (separation.x * separation.x + separation.y * separation.y +
                       separation.z * separation.z) / d2;

    const double k0 = w.wavenumber;
    const double inv_16pi2 = 1.0 / (16.0 * M_PI * M_PI);
    const double eps1 = inv_16pi2 * (3.0 - tr);
    const double eps2 = inv_16pi2 * (5.0 * tr - 3.0) / (k0 * k0);
    const double eps3 = inv_16pi2 * (3.0 * tr + 3.0) / (k0 * k0 * k0 * k0);

    const double d4 = d2 * d2;
    return eps1 / d2 + eps2 / d4 + eps3 / (d4 * d2);
}

}  // namespace hmimo
