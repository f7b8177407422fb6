// SPDX-License-Identifier: Apache-2.0
//
// hmimo - near-field LoS channel models and capacity limits for
// holographic MIMO surfaces with arbitrary placements
//
// Licensed under the Apache License, Version 2.0;
// see http://www.apache.org/licenses/LICENSE-2.0

#include "hmimo/capacity.hpp"

#include <Eigen/SVD>
#include <cmath>

#include "hmimo/errors.hpp"
#include "hmimo/format.hpp"

namespace hmimo {

namespace {

/// log2(1 + x) without cancellation for tiny x.
double log2_1p(double x) { return std::log1p(x) / M_LN2; }

double mu_factor(const WaveParams& w) {
    return w.impedance * w.impedance / (4.0 * w.wavelength * w.wavelength);
}

}  // namespace

SnrParams SnrParams::from_target_snr_db(double snr_db, int p, double s_r,
                                        double noise_variance) {
    SnrParams snr;
    snr.noise_variance = noise_variance;
    snr.stream_count = p;
    snr.s_r = s_r;
    snr.total_power = std::pow(10.0, snr_db / 10.0) * p * s_r * noise_variance;
    return snr;
}

double pairwise_sum(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n == 0)
        return 0.0;
    if (n == 1)
        return values[0];
    if (n == 2)
        return values[0] + values[1];
    const std::size_t half = n / 2;
    return pairwise_sum(values.subspan(0, half)) + pairwise_sum(values.subspan(half));
}

PatternBasis svd_patterns(const BlockChannelMatrix& green, double s_t, double s_r,
                          double power_fraction, PowerFractionRule rule) {
    if (!(power_fraction > 0.0) || power_fraction > 1.0)
        throw Error("svd_patterns: power_fraction must lie in (0, 1]");
    if (!green.data().allFinite())
        throw Error("svd_patterns: non-finite entries in the Green block matrix");

    Eigen::BDCSVD<Eigen::MatrixXcd> svd(green.data(),
                                        Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd& sigma = svd.singularValues();

    double total = 0.0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i)
        total += rule == PowerFractionRule::SquaredSingularValues ? sigma[i] * sigma[i]
                                                                  : sigma[i];
    if (total <= 0.0)
        throw RankZero("svd_patterns: all singular values are zero");

    int p = 0;
    double cumulative = 0.0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
        cumulative += rule == PowerFractionRule::SquaredSingularValues ? sigma[i] * sigma[i]
                                                                       : sigma[i];
        ++p;
        if (cumulative >= power_fraction * total)
            break;
    }

    PatternBasis basis;
    basis.p = p;
    basis.gammas.resize(static_cast<std::size_t>(p));
    const double gain_scale = std::sqrt(s_r * s_t);
    for (int i = 0; i < p; ++i)
        basis.gammas[static_cast<std::size_t>(i)] = gain_scale * sigma[i];
    basis.r_matrix = svd.matrixU().leftCols(p) / std::sqrt(s_r);
    basis.t_matrix = svd.matrixV().leftCols(p) / std::sqrt(s_t);
    return basis;
}

double exact_capacity(const PatternBasis& basis, const SnrParams& snr, const WaveParams& w) {
    if (snr.stream_count != 0 && snr.stream_count != basis.p)
        throw DimensionMismatch("exact_capacity: snr.stream_count " +
                                std::to_string(snr.stream_count) + " != basis mode count " +
                                std::to_string(basis.p));
    const double mu_snr = mu_factor(w) * snr.snr_linear(basis.p);
    double bits = 0.0;
    for (double gamma : basis.gammas)
        bits += log2_1p(mu_snr * gamma * gamma);
    return bits;
}

double capacity_upper_bound(const SurfacePlacement& tx, const SurfacePlacement& rx,
                            const SnrParams& snr, const WaveParams& w, int p) {
    if (p < 1)
        throw Error("capacity_upper_bound: stream count must be >= 1");
    const auto tx_centers = element_centers(tx);
    const auto rx_centers = element_centers(rx);

    std::vector<double> terms;
    terms.reserve(tx_centers.size() * rx_centers.size());
    for (const Vec3& rc : rx_centers)
        for (const Vec3& tc : tx_centers)
            terms.push_back(green_frobenius_sq_closed_form(rc - tc, w));
    const double pair_sum = pairwise_sum(terms);

    const double x = mu_factor(w) * snr.snr_linear(p) / p *
                     rx.element_area() * tx.element_area() * pair_sum;
    return p * log2_1p(x);
}

double far_field_upper_bound(double a_t, double a_r, double d0, const SnrParams& snr,
                             const WaveParams& w, int p) {
    if (p < 1)
        throw Error("far_field_upper_bound: stream count must be >= 1");
    if (!(d0 > 0.0))
        throw Error("far_field_upper_bound: reference distance must be > 0");
    const double eps1_ff = 1.0 / (8.0 * M_PI * M_PI);
    const double x = mu_factor(w) * snr.snr_linear(p) / p * eps1_ff * a_r * a_t / (d0 * d0);
    return p * log2_1p(x);
}

std::string CapacityReport::csv_header() {
    return "config_hash,P,snr_db,exact_bits,bound_bits,ff_bound_bits";
}

std::string CapacityReport::csv_row(std::uint64_t config_hash, double snr_db) const {
    std::string row = format_hex64(config_hash);
    row += ',';
    row += std::to_string(p);
    row += ',';
    row += format_f64(snr_db);
    row += ',';
    row += format_f64(exact_bits);
    row += ',';
    row += format_f64(upper_bound_bits);
    row += ',';
    row += format_f64(far_field_bound_bits);
    return row;
}

}  // namespace hmimo
