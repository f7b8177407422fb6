// SPDX-License-Identifier: Apache-2.0
//
// hmimo - near-field LoS channel models and capacity limits for
// holographic MIMO surfaces with arbitrary placements
//
// Licensed under the Apache License, Version 2.0;
// see http://www.apache.org/licenses/LICENSE-2.0

#include "hmimo/metrics.hpp"

#include <Eigen/SVD>

#include "hmimo/errors.hpp"

namespace hmimo {

double nmse(const BlockChannelMatrix& h_hat, const BlockChannelMatrix& h) {
    if (h_hat.rows() != h.rows() || h_hat.cols() != h.cols())
        throw DimensionMismatch("nmse: matrices are " + std::to_string(h_hat.rows()) + "x" +
                                std::to_string(h_hat.cols()) + " vs " +
                                std::to_string(h.rows()) + "x" + std::to_string(h.cols()));
    const double ref = h.data().squaredNorm();
    if (ref <= 0.0)
        throw ZeroReference("nmse: reference matrix has zero Frobenius norm");
    return (h_hat.data() - h.data()).squaredNorm() / ref;
}

SpectrumReport singular_spectrum(const BlockChannelMatrix& h, std::string label) {
    SpectrumReport report;
    report.label = std::move(label);
    report.rows = static_cast<int>(h.rows());
    report.cols = static_cast<int>(h.cols());

    Eigen::BDCSVD<Eigen::MatrixXcd> svd(h.data());
    const Eigen::VectorXd& sigma = svd.singularValues();  // already descending
    report.values.assign(sigma.data(), sigma.data() + sigma.size());
    return report;
}

}  // namespace hmimo
