// SPDX-License-Identifier: Apache-2.0
//
// hmimo - near-field LoS channel models and capacity limits for
// holographic MIMO surfaces with arbitrary placements
//
// Licensed under the Apache License, Version 2.0;
// see http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <Eigen/Core>
#include <string>
#include <string_view>

#include "hmimo/geometry.hpp"
#include "hmimo/green.hpp"

namespace hmimo {

/// Per-pair channel construction method.
///
/// Exact: tensor-product Gauss-Legendre quadrature of the Green tensor over
/// both element surfaces (the reference/oracle).
/// CDCM: coordinate-dependent closed form, the amplitude-and-phase term
/// corrected by the four-sinc factor varrho.
/// CICM: coordinate-independent closed form, element areas times the Green
/// tensor at the center separation.
enum class ChannelModel { Exact, CDCM, CICM };

std::string to_string(ChannelModel model);
ChannelModel channel_model_from_string(std::string_view name);

/// Fixed Gauss-Legendre tensor-product rule over the four intrinsic element
/// coordinates (a_t, b_t, a_r, b_r). When `verify` is set, the block is
/// recomputed at twice the order and QuadratureDiverged is thrown if the two
/// results differ by more than `divergence_tol` relative (the refined result
/// is returned otherwise).
struct QuadratureSpec {
    int order = 12;
    bool verify = false;
    double divergence_tol = 1e-4;
};

/// Complex matrix of 3x3 blocks, (3M)x(3N); block (m, n) couples transmit
/// element n to receive element m and occupies rows 3m..3m+2 and columns
/// 3n..3n+2 (0-based element indices).
class BlockChannelMatrix {
public:
    BlockChannelMatrix() : m_elems_(0), n_elems_(0) {}
    BlockChannelMatrix(int m_elems, int n_elems)
        : m_elems_(m_elems), n_elems_(n_elems),
          data_(Eigen::MatrixXcd::Zero(3 * m_elems, 3 * n_elems)) {}

    int m_elems() const { return m_elems_; }
    int n_elems() const { return n_elems_; }
    Eigen::Index rows() const { return data_.rows(); }
    Eigen::Index cols() const { return data_.cols(); }

    Eigen::MatrixXcd& data() { return data_; }
    const Eigen::MatrixXcd& data() const { return data_; }

    Mat3c block_at(int m, int n) const { return data_.block<3, 3>(3 * m, 3 * n); }
    void set_block(int m, int n, const Mat3c& b) { data_.block<3, 3>(3 * m, 3 * n) = b; }

    double frobenius_norm() const { return data_.norm(); }

private:
    int m_elems_;
    int n_elems_;
    Eigen::MatrixXcd data_;
};

/// Exact channel block for the (m, n) element pair: the double surface
/// integral of the Green tensor over both elements, scaled by
/// impedance/(2*wavelength), discretized by tensor-product Gauss-Legendre
/// quadrature in the intrinsic coordinates with measure da db per element.
/// `n` and `m` are 0-based element indices into the placements' grids.
Mat3c exact_channel_block(const SurfacePlacement& tx, int n, const SurfacePlacement& rx,
                          int m, const WaveParams& w, const QuadratureSpec& q);

/// Four-sinc correction factor of the coordinate-dependent model for a pair
/// with center separation `dbar` (receive center minus transmit center):
///
///   varrho = sinc(pi l_T^h/lambda * (x + z c_x^T)/d) * sinc(pi l_T^v/lambda * (y + z c_y^T)/d)
///          * sinc(pi l_R^h/lambda * (x + z c_x^R)/d) * sinc(pi l_R^v/lambda * (y + z c_y^R)/d)
///
/// where (c_x, c_y) are each surface's delta_z_coefficients and
/// sinc(x) = sin(x)/x with sinc(0) = 1.
double varrho(const SurfacePlacement& tx, const SurfacePlacement& rx, const Vec3& dbar,
              const WaveParams& w);

/// Coordinate-dependent closed-form block: cicm_block times varrho.
Mat3c cdcm_block(const SurfacePlacement& tx, int n, const SurfacePlacement& rx, int m,
                 const WaveParams& w);

/// Coordinate-independent closed-form block:
/// impedance/(2*wavelength) * s_R * s_T * G(center separation).
Mat3c cicm_block(const SurfacePlacement& tx, int n, const SurfacePlacement& rx, int m,
                 const WaveParams& w);

/// Assembles the full (3M)x(3N) channel matrix with the selected per-pair
/// model. Blocks are independent; with `threads` > 1 they are computed
/// concurrently and written at disjoint locations, so the result is bitwise
/// identical to the serial assembly. Per-block failures are rethrown as
/// AssemblyError carrying the offending (m, n).
BlockChannelMatrix assemble_channel(ChannelModel model, const SurfacePlacement& tx,
                                    const SurfacePlacement& rx, const WaveParams& w,
                                    const QuadratureSpec& q, unsigned threads = 1);

/// Block matrix of raw Green tensors at the pair center separations (no
/// impedance or area scaling); the decomposition input for the pattern basis.
BlockChannelMatrix assemble_green_matrix(const SurfacePlacement& tx,
                                         const SurfacePlacement& rx, const WaveParams& w);

/// Linear transmission: e = H j + s_R * noise. `j` has length 3N, `noise`
/// and the result length 3M. Throws DimensionMismatch.
Eigen::VectorXcd simulate_transmission(const BlockChannelMatrix& h, const Eigen::VectorXcd& j,
                                       const Eigen::VectorXcd& noise, double s_r);

/// sin(x)/x with the removable singularity filled in.
double sinc(double x);

}  // namespace hmimo
