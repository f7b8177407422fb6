// SPDX-License-Identifier: Apache-2.0
//
// hmimo - near-field LoS channel models and capacity limits for
// holographic MIMO surfaces with arbitrary placements
//
// Licensed under the Apache License, Version 2.0;
// see http://www.apache.org/licenses/LICENSE-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstring>

#include "hmimo/channel.hpp"
#include "hmimo/errors.hpp"
#include "hmimo/quadrature.hpp"
#include "support/test_support.hpp"

using namespace hmimo;
using test::Rng;

namespace {

const WaveParams kWave = WaveParams::from_wavelength(0.01);

SurfacePlacement paper_surface(double center_z_lambda, double polar_v, int side,
                               double spacing_lambda) {
    SurfacePlacement p;
    p.center = {0.0, 0.0, center_z_lambda * kWave.wavelength};
    p.polar_h = 90.0;
    p.polar_v = polar_v;
    p.azimuth_h = 0.0;
    p.azimuth_v = 90.0;
    p.n_h = p.n_v = side;
    p.len_h = p.len_v = spacing_lambda * kWave.wavelength;
    return p;
}

}  // namespace

TEST_CASE("sinc basics") {
    CHECK(sinc(0.0) == 1.0);
    CHECK(sinc(1e-12) == 1.0);
    CHECK(sinc(M_PI) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(sinc(0.5) == doctest::Approx(std::sin(0.5) / 0.5).epsilon(1e-15));
}

TEST_CASE("varrho reproduces the 30-degree-tilt worked example") {
    // boresight pair, transmit and receive horizontal directions along y,
    // receive vertical direction tilted 30 degrees out of plane
    SurfacePlacement tx = paper_surface(0.0, 90.0, 1, 0.2);
    tx.azimuth_h = 90.0;
    tx.azimuth_v = 0.0;
    SurfacePlacement rx = paper_surface(1.0, 60.0, 1, 0.2);
    rx.azimuth_h = 90.0;
    rx.azimuth_v = 0.0;

    const Vec3 dbar = rx.center - tx.center;  // x = y = 0
    const double rho = varrho(tx, rx, dbar, kWave);
    CHECK(rho == doctest::Approx(0.978).epsilon(0.001 / 0.978));

    // sinc(pi sqrt(3) / 15) on the receive horizontal factor, 1 elsewhere
    const double arg = M_PI * std::sqrt(3.0) / 15.0;
    CHECK(rho == doctest::Approx(std::sin(arg) / arg).epsilon(1e-12));
}

TEST_CASE("varrho is exactly one for a parallel boresight pair") {
    const SurfacePlacement tx = paper_surface(0.0, 90.0, 1, 0.2);
    const SurfacePlacement rx = paper_surface(0.7, 90.0, 1, 0.2);
    CHECK(varrho(tx, rx, rx.center - tx.center, kWave) == 1.0);
}

TEST_CASE("varrho matches the phase-integral oracle on tilted configurations") {
    Rng rng(301);
    for (int trial = 0; trial < 40; ++trial) {
        SurfacePlacement tx = paper_surface(0.0, rng.uniform(45.0, 135.0), 1, 0.0);
        SurfacePlacement rx = paper_surface(0.0, rng.uniform(45.0, 135.0), 1, 0.0);
        tx.polar_h = rng.uniform(45.0, 135.0);
        tx.len_h = rng.uniform(0.05, 0.4) * kWave.wavelength;
        tx.len_v = rng.uniform(0.05, 0.4) * kWave.wavelength;
        rx.len_h = rng.uniform(0.05, 0.4) * kWave.wavelength;
        rx.len_v = rng.uniform(0.05, 0.4) * kWave.wavelength;

        const Vec3 dbar = rng.uniform(0.5, 3.0) * kWave.wavelength * rng.unit_vector();
        const double rho = varrho(tx, rx, dbar, kWave);
        const double oracle = test::varrho_phase_integral_oracle(tx, rx, dbar, kWave);
        CHECK(rho == doctest::Approx(oracle).epsilon(1e-8));
    }
}

TEST_CASE("varrho stays in (0, 1] for sub-half-wavelength elements") {
    Rng rng(302);
    for (int trial = 0; trial < 200; ++trial) {
        const double spacing = rng.uniform(0.01, 0.5);
        const double polar_v = 60.0 + 15.0 * rng.uniform_int(0, 2);
        const SurfacePlacement tx = paper_surface(0.0, 90.0, 3, spacing);
        const SurfacePlacement rx = paper_surface(rng.uniform(0.5, 5.0), polar_v, 3, spacing);
        const auto tc = element_centers(tx);
        const auto rc = element_centers(rx);
        const double rho = varrho(tx, rx, rc[static_cast<std::size_t>(rng.uniform_int(0, 8))] -
                                               tc[static_cast<std::size_t>(rng.uniform_int(0, 8))],
                                  kWave);
        CHECK(rho > 0.0);
        CHECK(rho <= 1.0);
    }
}

TEST_CASE("cicm block is the defining formula and is translation invariant") {
    SurfacePlacement tx = paper_surface(0.0, 90.0, 2, 0.1);
    SurfacePlacement rx = paper_surface(2.0, 75.0, 2, 0.07);

    const auto tc = element_centers(tx);
    const auto rc = element_centers(rx);
    const Mat3c block = cicm_block(tx, 1, rx, 2, kWave);
    const Mat3c expected = kWave.impedance / (2.0 * kWave.wavelength) * rx.element_area() *
                           tx.element_area() * green_tensor(rc[2], tc[1], kWave);
    CHECK((block - expected).norm() / expected.norm() < 1e-14);

    const Vec3 shift{0.31, -0.17, 0.52};
    tx.center += shift;
    rx.center += shift;
    const Mat3c shifted = cicm_block(tx, 1, rx, 2, kWave);
    CHECK((shifted - block).norm() / block.norm() < 1e-12);
}

TEST_CASE("cdcm equals cicm times varrho, and they coincide for parallel boresight") {
    SurfacePlacement tx = paper_surface(0.0, 90.0, 3, 0.05);
    SurfacePlacement rx = paper_surface(1.0, 60.0, 2, 0.05);

    const auto tc = element_centers(tx);
    const auto rc = element_centers(rx);
    for (int m = 0; m < rx.element_count(); ++m)
        for (int n = 0; n < tx.element_count(); ++n) {
            const double rho = varrho(tx, rx, rc[m] - tc[n], kWave);
            const Mat3c cd = cdcm_block(tx, n, rx, m, kWave);
            const Mat3c ci = cicm_block(tx, n, rx, m, kWave);
            CHECK((cd - rho * ci).norm() == 0.0);
        }

    const SurfacePlacement rx_parallel = paper_surface(1.0, 90.0, 1, 0.05);
    const Mat3c cd = cdcm_block(tx, 4, rx_parallel, 0, kWave);
    const Mat3c ci = cicm_block(tx, 4, rx_parallel, 0, kWave);
    CHECK((cd - ci).norm() == 0.0);  // varrho is exactly 1 on boresight
}

TEST_CASE("exact block collapses to cicm for vanishing elements") {
    const SurfacePlacement tx = paper_surface(0.0, 90.0, 1, 1e-4);
    const SurfacePlacement rx = paper_surface(1.0, 90.0, 1, 1e-4);
    const QuadratureSpec q{8, false, 1e-4};
    const Mat3c exact = exact_channel_block(tx, 0, rx, 0, kWave, q);
    const Mat3c ci = cicm_block(tx, 0, rx, 0, kWave);
    CHECK((exact - ci).norm() / ci.norm() < 1e-6);
}

TEST_CASE("quadrature self-convergence at one wavelength") {
    const SurfacePlacement tx = paper_surface(0.0, 90.0, 1, 0.05);
    const SurfacePlacement rx = paper_surface(1.0, 90.0, 1, 0.05);
    const Mat3c coarse = exact_channel_block(tx, 0, rx, 0, kWave, {8, false, 1e-4});
    const Mat3c fine = exact_channel_block(tx, 0, rx, 0, kWave, {16, false, 1e-4});
    CHECK((coarse - fine).norm() / fine.norm() < 1e-8);
}

TEST_CASE("verify flag: refined result on success, QuadratureDiverged on failure") {
    const SurfacePlacement tx = paper_surface(0.0, 90.0, 1, 0.05);
    const SurfacePlacement rx = paper_surface(1.0, 90.0, 1, 0.05);

    const Mat3c verified = exact_channel_block(tx, 0, rx, 0, kWave, {8, true, 1e-4});
    const Mat3c fine = exact_channel_block(tx, 0, rx, 0, kWave, {16, false, 1e-4});
    CHECK((verified - fine).norm() == 0.0);

    // an impossible tolerance turns ordinary refinement into divergence
    CHECK_THROWS_AS(exact_channel_block(tx, 0, rx, 0, kWave, {8, true, 1e-18}),
                    QuadratureDiverged);
}

TEST_CASE("exact oracle reciprocity: swapping surfaces transposes blocks") {
    SurfacePlacement tx = paper_surface(0.0, 90.0, 2, 0.08);
    tx.n_v = 1;
    SurfacePlacement rx = paper_surface(0.8, 70.0, 1, 0.06);
    rx.n_v = 2;

    const QuadratureSpec q{8, false, 1e-4};
    const BlockChannelMatrix forward = assemble_channel(ChannelModel::Exact, tx, rx, kWave, q);
    const BlockChannelMatrix backward = assemble_channel(ChannelModel::Exact, rx, tx, kWave, q);
    for (int m = 0; m < forward.m_elems(); ++m)
        for (int n = 0; n < forward.n_elems(); ++n) {
            const Mat3c a = forward.block_at(m, n);
            const Mat3c b = backward.block_at(n, m).transpose();
            CHECK((a - b).norm() / a.norm() < 1e-12);
        }
}

TEST_CASE("element-center sums converge to the surface integral") {
    // integral of f^H g over a fixed surface, against S * sum over element
    // centers, for smooth vector polynomials; error strictly decreasing in
    // the element count
    const double extent = 0.1;
    auto f = [](const Vec3& p) {
        return Eigen::Vector3cd(Complex(p.x, p.y), Complex(p.y * p.y, 0.0),
                                Complex(p.z + 0.3, -p.x));
    };
    auto g = [](const Vec3& p) {
        return Eigen::Vector3cd(Complex(0.7, p.z), Complex(p.x + p.y, 0.1),
                                Complex(p.x * p.x, p.y));
    };

    SurfacePlacement surface;
    surface.center = {0.02, -0.01, 0.03};
    surface.polar_h = 90.0;
    surface.polar_v = 55.0;
    surface.azimuth_h = 10.0;
    surface.azimuth_v = 100.0;

    // reference: high-order Gauss-Legendre over the whole surface
    Complex reference = 0.0;
    {
        const GaussLegendreRule rule = gauss_legendre(32);
        const SurfaceFrame frame = unit_vectors(surface);
        const double half = extent / 2.0;
        for (int i = 0; i < 32; ++i)
            for (int j = 0; j < 32; ++j) {
                const Vec3 p = surface.center + (half * rule.nodes[i]) * frame.h +
                               (half * rule.nodes[j]) * frame.v;
                reference += rule.weights[i] * rule.weights[j] * (f(p).adjoint() * g(p))(0, 0);
            }
        reference *= half * half;
    }

    double previous_error = -1.0;
    for (int side : {2, 4, 8, 16}) {
        SurfacePlacement tiled = surface;
        tiled.n_h = tiled.n_v = side;
        tiled.len_h = tiled.len_v = extent / side;
        Complex midpoint = 0.0;
        for (const Vec3& c : element_centers(tiled))
            midpoint += (f(c).adjoint() * g(c))(0, 0);
        midpoint *= tiled.element_area();

        const double error = std::abs(midpoint - reference);
        if (previous_error >= 0.0)
            CHECK(error < previous_error);
        previous_error = error;
    }
}

TEST_CASE("assembly of a single pair equals the standalone block") {
    const SurfacePlacement tx = paper_surface(0.0, 90.0, 1, 0.05);
    const SurfacePlacement rx = paper_surface(0.6, 75.0, 1, 0.05);
    const QuadratureSpec q{6, false, 1e-4};

    const BlockChannelMatrix exact = assemble_channel(ChannelModel::Exact, tx, rx, kWave, q);
    CHECK((exact.block_at(0, 0) - exact_channel_block(tx, 0, rx, 0, kWave, q)).norm() == 0.0);

    const BlockChannelMatrix cd = assemble_channel(ChannelModel::CDCM, tx, rx, kWave, q);
    CHECK((cd.block_at(0, 0) - cdcm_block(tx, 0, rx, 0, kWave)).norm() == 0.0);

    const BlockChannelMatrix ci = assemble_channel(ChannelModel::CICM, tx, rx, kWave, q);
    CHECK((ci.block_at(0, 0) - cicm_block(tx, 0, rx, 0, kWave)).norm() == 0.0);
}

TEST_CASE("switching CDCM to CICM rescales each block by 1/varrho") {
    const SurfacePlacement tx = paper_surface(0.0, 90.0, 3, 0.05);
    const SurfacePlacement rx = paper_surface(1.0, 60.0, 2, 0.05);
    const QuadratureSpec q{4, false, 1e-4};

    const BlockChannelMatrix cd = assemble_channel(ChannelModel::CDCM, tx, rx, kWave, q);
    const BlockChannelMatrix ci = assemble_channel(ChannelModel::CICM, tx, rx, kWave, q);
    const auto tc = element_centers(tx);
    const auto rc = element_centers(rx);
    for (int m = 0; m < cd.m_elems(); ++m)
        for (int n = 0; n < cd.n_elems(); ++n) {
            const double rho = varrho(tx, rx, rc[m] - tc[n], kWave);
            CHECK((cd.block_at(m, n) / rho - ci.block_at(m, n)).norm() /
                      ci.block_at(m, n).norm() <
                  1e-12);
        }
}

TEST_CASE("parallel and serial assemblies agree bitwise") {
    const SurfacePlacement tx = paper_surface(0.0, 90.0, 3, 0.05);
    const SurfacePlacement rx = paper_surface(0.5, 60.0, 2, 0.05);
    const QuadratureSpec q{6, false, 1e-4};

    const BlockChannelMatrix serial = assemble_channel(ChannelModel::Exact, tx, rx, kWave, q, 1);
    const BlockChannelMatrix parallel = assemble_channel(ChannelModel::Exact, tx, rx, kWave, q, 4);
    REQUIRE(serial.rows() == parallel.rows());
    CHECK(std::memcmp(serial.data().data(), parallel.data().data(),
                      sizeof(Complex) * static_cast<std::size_t>(serial.data().size())) == 0);
}

TEST_CASE("assembly failures carry the offending pair") {
    const SurfacePlacement tx = paper_surface(0.0, 90.0, 1, 0.05);
    const SurfacePlacement rx = paper_surface(0.0, 90.0, 1, 0.05);  // coincident centers
    try {
        assemble_channel(ChannelModel::CICM, tx, rx, kWave, {4, false, 1e-4});
        FAIL("expected AssemblyError");
    } catch (const AssemblyError& e) {
        CHECK(e.m_index == 0);
        CHECK(e.n_index == 0);
        CHECK(std::string(e.what()).find("(m=0, n=0)") != std::string::npos);
    }
}

TEST_CASE("exact oracle favors CDCM over CICM on a tilted configuration") {
    const SurfacePlacement tx = paper_surface(0.0, 90.0, 9, 0.05);
    const SurfacePlacement rx = paper_surface(1.0, 60.0, 3, 0.05);
    const QuadratureSpec q{12, false, 1e-4};
    const BlockChannelMatrix exact = assemble_channel(ChannelModel::Exact, tx, rx, kWave, q, 4);
    const BlockChannelMatrix cd = assemble_channel(ChannelModel::CDCM, tx, rx, kWave, q);
    const BlockChannelMatrix ci = assemble_channel(ChannelModel::CICM, tx, rx, kWave, q);

    const double nmse_cd = (cd.data() - exact.data()).squaredNorm() / exact.data().squaredNorm();
    const double nmse_ci = (ci.data() - exact.data()).squaredNorm() / exact.data().squaredNorm();
    CHECK(nmse_cd < nmse_ci);
}

TEST_CASE("transmission equation: columns, superposition, noise statistics") {
    const SurfacePlacement tx = paper_surface(0.0, 90.0, 2, 0.05);
    const SurfacePlacement rx = paper_surface(0.4, 90.0, 1, 0.05);
    const BlockChannelMatrix h =
        assemble_channel(ChannelModel::CICM, tx, rx, kWave, {4, false, 1e-4});

    const Eigen::Index cols = h.cols();
    const Eigen::Index rows = h.rows();
    const Eigen::VectorXcd zero_noise = Eigen::VectorXcd::Zero(rows);

    // unit current on coordinate k reads out column k
    for (Eigen::Index k = 0; k < cols; ++k) {
        Eigen::VectorXcd j = Eigen::VectorXcd::Zero(cols);
        j(k) = 1.0;
        const Eigen::VectorXcd e = simulate_transmission(h, j, zero_noise, rx.element_area());
        CHECK((e - h.data().col(k)).norm() == 0.0);
    }

    // superposition
    Rng rng(303);
    Eigen::VectorXcd j1(cols), j2(cols);
    for (Eigen::Index k = 0; k < cols; ++k) {
        j1(k) = rng.complex_normal();
        j2(k) = rng.complex_normal();
    }
    const Eigen::VectorXcd sum = simulate_transmission(h, j1 + j2, zero_noise, 1.0);
    const Eigen::VectorXcd parts = simulate_transmission(h, j1, zero_noise, 1.0) +
                                   simulate_transmission(h, j2, zero_noise, 1.0);
    CHECK((sum - parts).norm() / parts.norm() < 1e-12);

    // dimension checks
    CHECK_THROWS_AS(simulate_transmission(h, j1.head(cols - 1), zero_noise, 1.0),
                    DimensionMismatch);
    CHECK_THROWS_AS(simulate_transmission(h, j1, zero_noise.head(rows - 1), 1.0),
                    DimensionMismatch);

    // sample covariance of e - Hj over 10^4 draws approaches s_R^2 sigma^2 I
    const double sigma_sq = 0.3;
    const double s_r = rx.element_area();
    Eigen::MatrixXcd cov = Eigen::MatrixXcd::Zero(rows, rows);
    const int draws = 10000;
    for (int d = 0; d < draws; ++d) {
        Eigen::VectorXcd noise(rows);
        for (Eigen::Index k = 0; k < rows; ++k)
            noise(k) = rng.complex_normal(sigma_sq);
        const Eigen::VectorXcd residual = simulate_transmission(h, j1, noise, s_r) - h.data() * j1;
        cov += residual * residual.adjoint();
    }
    cov /= static_cast<double>(draws);
    const double expected = s_r * s_r * sigma_sq;
    for (Eigen::Index a = 0; a < rows; ++a)
        for (Eigen::Index b = 0; b < rows; ++b) {
            if (a == b)
                CHECK(std::abs(cov(a, a).real() - expected) / expected < 0.05);
            else
                CHECK(std::abs(cov(a, b)) / expected < 0.05);
        }
}

TEST_CASE("model names round-trip") {
    for (ChannelModel m : {ChannelModel::Exact, ChannelModel::CDCM, ChannelModel::CICM})
        CHECK(channel_model_from_string(to_string(m)) == m);
    CHECK_THROWS_AS(channel_model_from_string("CD-CM"), ConfigError);
}
