// SPDX-License-Identifier: Apache-2.0
//
// hmimo - near-field LoS channel models and capacity limits for
// holographic MIMO surfaces with arbitrary placements
//
// Licensed under the Apache License, Version 2.0;
// see http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <vector>

#include "hmimo/vec3.hpp"

namespace hmimo {

/// One antenna surface: center position, orientation of its horizontal and
/// vertical in-plane directions (polar/azimuth angle pairs, degrees), element
/// grid dimensions and element edge lengths.
///
/// The surface is the parallelogram tiled by n_h x n_v contiguous elements
/// spanned by the two unit direction vectors. Angles are accepted in degrees
/// at the API boundary and converted to radians internally.
struct SurfacePlacement {
    Vec3 center;             ///< surface center, meters
    double polar_h = 90.0;   ///< polar angle of the horizontal direction, degrees
    double polar_v = 90.0;   ///< polar angle of the vertical direction, degrees
    double azimuth_h = 0.0;  ///< azimuth angle of the horizontal direction, degrees
    double azimuth_v = 90.0; ///< azimuth angle of the vertical direction, degrees
    int n_h = 1;             ///< element count along the horizontal direction
    int n_v = 1;             ///< element count along the vertical direction
    double len_h = 0.0;      ///< element edge length along the horizontal direction, meters
    double len_v = 0.0;      ///< element edge length along the vertical direction, meters

    int element_count() const { return n_h * n_v; }
    double element_area() const { return len_h * len_v; }
    double surface_area() const { return element_count() * element_area(); }

    /// Throws InvalidPlacement (field ranges) or DegenerateAzimuths
    /// (sin(azimuth_h - azimuth_v) = 0).
    void validate() const;
};

/// Horizontal and vertical in-plane unit vectors of a surface.
struct SurfaceFrame {
    Vec3 h;
    Vec3 v;
};

/// Unit direction vectors spanned by the placement angles:
/// h = (sin p_h cos a_h, sin p_h sin a_h, cos p_h), v analogous.
SurfaceFrame unit_vectors(const SurfacePlacement& p);

/// True iff the surface (and its elements) is a rectangle rather than a
/// diamond: polar_h = 90 deg or polar_v = 90 deg, within 1e-9 degrees.
bool is_rectangular(const SurfacePlacement& p);

/// Coefficients of the in-plane constraint dz = c_x*dx + c_y*dy.
struct DeltaZCoefficients {
    double c_x;
    double c_y;
};

/// Expresses the z-component of any in-plane offset through its x and y
/// components. Throws DegenerateAzimuths when sin(azimuth_h - azimuth_v) = 0.
DeltaZCoefficients delta_z_coefficients(const SurfacePlacement& p);

/// Element centers on the grid, symmetric about p.center:
///   center + (i - (n_h+1)/2)*len_h*h + (j - (n_v+1)/2)*len_v*v,
/// i = 1..n_h, j = 1..n_v, flattened as element (j-1)*n_h + i - 1 (0-based,
/// row-major i-then-j). Elements tile the surface contiguously.
std::vector<Vec3> element_centers(const SurfacePlacement& p);

/// Point at intrinsic coordinates (a, b) on the element with the given
/// center: center + a*h + b*v. Requires |a| <= len_h/2 and |b| <= len_v/2,
/// otherwise throws OutOfElement.
Vec3 point_on_element(const Vec3& center, double a, double b, const SurfacePlacement& p);

/// Degrees to radians.
constexpr double deg2rad(double deg) { return deg * 0.017453292519943295; }

}  // namespace hmimo
