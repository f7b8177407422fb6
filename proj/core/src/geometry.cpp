// SPDX-License-Identifier: Apache-2.0
//
// hmimo - near-field LoS channel models and capacity limits for
// holographic MIMO surfaces with arbitrary placements
//
// Licensed under the Apache License, Version 2.0;
// see http://www.apache.org/licenses/LICENSE-2.0

#include "hmimo/geometry.hpp"

#include <cmath>
#include <string>

#include "hmimo/errors.hpp"

namespace hmimo {

namespace {

constexpr double kRectAngleTolDeg = 1e-9;   // |polar - 90| tolerance for the rectangle check
constexpr double kDegenerateSinTol = 1e-12; // |sin(az_h - az_v)| below this is degenerate

}  // namespace

void SurfacePlacement::validate() const {
    if (!center.is_finite())
        throw InvalidPlacement("surface center has non-finite components");
    if (polar_h < 0.0 || polar_h > 180.0 || polar_v < 0.0 || polar_v > 180.0)
        throw InvalidPlacement("polar angles must lie in [0, 180] degrees");
    if (azimuth_h < 0.0 || azimuth_h >= 360.0 || azimuth_v < 0.0 || azimuth_v >= 360.0)
        throw InvalidPlacement("azimuth angles must lie in [0, 360) degrees");
    if (n_h < 1 || n_v < 1)
        throw InvalidPlacement("element counts must be >= 1");
    if (!(len_h > 0.0) || !(len_v > 0.0))
        throw InvalidPlacement("element edge lengths must be > 0");
    if (std::abs(std::sin(deg2rad(azimuth_h - azimuth_v))) < kDegenerateSinTol)
        throw DegenerateAzimuths("sin(azimuth_h - azimuth_v) = 0: horizontal and vertical "
                                 "directions project to parallel lines in the xy-plane");
}

SurfaceFrame unit_vectors(const SurfacePlacement& p) {
    const double th = deg2rad(p.polar_h);
    const double tv = deg2rad(p.polar_v);
    const double ph = deg2rad(p.azimuth_h);
    const double pv = deg2rad(p.azimuth_v);
    return {
        {std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th)},
        {std::sin(tv) * std::cos(pv), std::sin(tv) * std::sin(pv), std::cos(tv)},
    };
}

bool is_rectangular(const SurfacePlacement& p) {
    return std::abs(p.polar_h - 90.0) <= kRectAngleTolDeg ||
           std::abs(p.polar_v - 90.0) <= kRectAngleTolDeg;
}

DeltaZCoefficients delta_z_coefficients(const SurfacePlacement& p) {
    const double th = deg2rad(p.polar_h);
    const double tv = deg2rad(p.polar_v);
    const double ph = deg2rad(p.azimuth_h);
    const double pv = deg2rad(p.azimuth_v);

    const double denom = std::sin(ph - pv);
    if (std::abs(denom) < kDegenerateSinTol)
        throw DegenerateAzimuths("delta_z_coefficients: sin(azimuth_h - azimuth_v) = 0");

    const double cot_h = std::cos(th) / std::sin(th);
    const double cot_v = std::cos(tv) / std::sin(tv);

    // Solving dz = alpha*cos(polar_h) + beta*cos(polar_v) with the in-plane
    // weights alpha, beta eliminated against (dx, dy). The dy coefficient
    // comes out as (cot_h cos a_v - cot_v cos a_h)/sin(a_h - a_v).
    const double c_x = (cot_v * std::sin(ph) - cot_h * std::sin(pv)) / denom;
    const double c_y = (cot_h * std::cos(pv) - cot_v * std::cos(ph)) / denom;
    return {c_x, c_y};
}

std::vector<Vec3> element_centers(const SurfacePlacement& p) {
    const SurfaceFrame f = unit_vectors(p);
    std::vector<Vec3> centers;
    centers.reserve(static_cast<std::size_t>(p.element_count()));
    const double mid_h = (p.n_h - 1) / 2.0;
    const double mid_v = (p.n_v - 1) / 2.0;
    for (int j = 0; j < p.n_v; ++j)
        for (int i = 0; i < p.n_h; ++i)
            centers.push_back(p.center + (i - mid_h) * p.len_h * f.h +
                              (j - mid_v) * p.len_v * f.v);
    return centers;
}

Vec3 point_on_element(const Vec3& center, double a, double b, const SurfacePlacement& p) {
    if (std::abs(a) > p.len_h / 2.0 || std::abs(b) > p.len_v / 2.0)
        throw OutOfElement("intrinsic coordinates (" + std::to_string(a) + ", " +
                           std::to_string(b) + ") outside element bounds");
    const SurfaceFrame f = unit_vectors(p);
    return center + a * f.h + b * f.v;
}

}  // namespace hmimo
