// SPDX-License-Identifier: Apache-2.0
//
// hmimo - near-field LoS channel models and capacity limits for
// holographic MIMO surfaces with arbitrary placements
//
// Licensed under the Apache License, Version 2.0;
// see http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hmimo/channel.hpp"
#include "hmimo/green.hpp"

namespace hmimo {

/// Power and noise parameters. The average transmit SNR per unit area is
/// total_power / (P * s_r * noise_variance) with P the stream count.
struct SnrParams {
    double total_power = 1.0;     ///< watts
    double noise_variance = 1.0;  ///< watts
    int stream_count = 0;         ///< 0 = resolve from the pattern basis
    double s_r = 1.0;             ///< receive element area, m^2

    double snr_linear(int p) const { return total_power / (p * s_r * noise_variance); }

    /// Parameters that realize the requested average transmit SNR for a
    /// given stream count.
    static SnrParams from_target_snr_db(double snr_db, int p, double s_r,
                                        double noise_variance = 1.0);
};

/// How the cumulative "power of all the singular values" is counted when
/// selecting the stream count: energy (squared singular values, the default)
/// or linear singular values (sensitivity checks only).
enum class PowerFractionRule { SquaredSingularValues, LinearSingularValues };

/// SVD-constructed transmit/receive pattern matrices and mode gains.
/// Columns satisfy T^H T = I/s_T and R^H R = I/s_R; gammas are sorted
/// descending and nonnegative.
struct PatternBasis {
    int p = 0;                    ///< selected mode count
    std::vector<double> gammas;   ///< mode gains sqrt(s_R s_T) * sigma_p, length p
    Eigen::MatrixXcd t_matrix;    ///< (3N) x P
    Eigen::MatrixXcd r_matrix;    ///< (3M) x P
};

/// Pattern basis from the SVD of the raw Green block matrix:
/// R = U(:,1:P)/sqrt(s_R), T = V(:,1:P)/sqrt(s_T),
/// gamma_p = sqrt(s_R s_T) * sigma_p. P is the smallest count whose
/// cumulative power reaches `power_fraction` of the total. Throws RankZero
/// when every singular value is zero.
PatternBasis svd_patterns(const BlockChannelMatrix& green, double s_t, double s_r,
                          double power_fraction,
                          PowerFractionRule rule = PowerFractionRule::SquaredSingularValues);

/// Exact capacity over the selected modes, bits/s/Hz:
///   C = sum_p log2(1 + mu * SNR * gamma_p^2),  mu = impedance^2/(4 lambda^2).
/// When snr.stream_count is nonzero it must equal basis.p.
double exact_capacity(const PatternBasis& basis, const SnrParams& snr, const WaveParams& w);

/// Closed-form capacity upper bound over all M*N element pairs:
///   C <= P log2(1 + (mu SNR / P) * s_R s_T * sum_mn trace(G^H G)(dbar_mn))
/// with the per-pair summand evaluated by green_frobenius_sq_closed_form.
/// The pair sum uses pairwise (tree) summation for run-to-run determinism.
double capacity_upper_bound(const SurfacePlacement& tx, const SurfacePlacement& rx,
                            const SnrParams& snr, const WaveParams& w, int p);

/// Far-field limit of the bound at reference distance d0:
///   C <= P log2(1 + (mu SNR / P) * A_R A_T / (8 pi^2 d0^2)).
double far_field_upper_bound(double a_t, double a_r, double d0, const SnrParams& snr,
                             const WaveParams& w, int p);

/// Capacity numbers for one configuration. Invariant: upper_bound_bits >=
/// exact_bits (Jensen).
struct CapacityReport {
    double exact_bits = 0.0;
    double upper_bound_bits = 0.0;
    double far_field_bound_bits = 0.0;
    int p = 0;
    SnrParams snr;

    /// One CSV row: config hash, P, SNR dB, exact, bound, far-field bound.
    std::string csv_row(std::uint64_t config_hash, double snr_db) const;
    static std::string csv_header();
};

/// Deterministic pairwise (tree) summation.
double pairwise_sum(std::span<const double> values);

}  // namespace hmimo
