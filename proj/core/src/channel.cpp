// SPDX-License-Identifier: Apache-2.0
//
// hmimo - near-field LoS channel models and capacity limits for
// holographic MIMO surfaces with arbitrary placements
//
// Licensed under the Apache License, Version 2.0;
// see http://www.apache.org/licenses/LICENSE-2.0

#include "hmimo/channel.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>
#include <vector>

#include "hmimo/errors.hpp"
#include "hmimo/quadrature.hpp"

namespace hmimo {

std::string to_string(ChannelModel model) {
    switch (model) {
        case ChannelModel::Exact: return "Exact";
        case ChannelModel::CDCM: return "CDCM";
        case ChannelModel::CICM: return "CICM";
    }
    return "?";
}

ChannelModel channel_model_from_string(std::string_view name) {
    if (name == "Exact") return ChannelModel::Exact;
    if (name == "CDCM") return ChannelModel::CDCM;
    if (name == "CICM") return ChannelModel::CICM;
    throw ConfigError("unknown channel model '" + std::string(name) +
                      "' (expected Exact, CDCM or CICM)");
}

double sinc(double x) {
    if (std::abs(x) < 1e-8)
        return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

namespace {

// Quadrature points for the 4-dimensional tensor-product rule over
// (a_t, b_t, a_r, b_r), folded into per-point spatial offsets of the
// separation vector r - t and combined weights. The offsets depend only on
// the surface frames and element lengths, so one table serves every (m, n)
// pair of an assembly.
struct PairQuadrature {
    std::vector<Vec3> offsets;
    std::vector<double> weights;

    PairQuadrature(const SurfacePlacement& tx, const SurfacePlacement& rx, int order) {
        const GaussLegendreRule rule = gauss_legendre(order);
        const SurfaceFrame ft = unit_vectors(tx);
        const SurfaceFrame fr = unit_vectors(rx);

        const double ht = tx.len_h / 2.0, vt = tx.len_v / 2.0;
        const double hr = rx.len_h / 2.0, vr = rx.len_v / 2.0;
        const double jac = ht * vt * hr * vr;  // maps [-1,1]^4 onto the two elements

        const std::size_t total = static_cast<std::size_t>(order) * order * order * order;
        offsets.reserve(total);
        weights.reserve(total);
        for (int it = 0; it < order; ++it)
            for (int jt = 0; jt < order; ++jt)
                for (int ir = 0; ir < order; ++ir)
                    for (int jr = 0; jr < order; ++jr) {
                        const Vec3 dt = (ht * rule.nodes[it]) * ft.h + (vt * rule.nodes[jt]) * ft.v;
                        const Vec3 dr = (hr * rule.nodes[ir]) * fr.h + (vr * rule.nodes[jr]) * fr.v;
                        offsets.push_back(dr - dt);
                        weights.push_back(jac * rule.weights[it] * rule.weights[jt] *
                                          rule.weights[ir] * rule.weights[jr]);
                    }
    }
};

Mat3c integrate_block(const Vec3& dbar, const PairQuadrature& quad, double k0, double scale) {
    Complex acc[6] = {};
    const std::size_t total = quad.offsets.size();
    for (std::size_t k = 0; k < total; ++k)
        detail::green_accumulate(dbar + quad.offsets[k], k0, quad.weights[k], acc);

    Mat3c g;
    g(0, 0) = acc[0] * scale;
    g(1, 1) = acc[1] * scale;
    g(2, 2) = acc[2] * scale;
    g(0, 1) = g(1, 0) = acc[3] * scale;
    g(0, 2) = g(2, 0) = acc[4] * scale;
    g(1, 2) = g(2, 1) = acc[5] * scale;
    return g;
}

// One grid center, same arithmetic as element_centers (centered layout,
// row-major i-then-j) so per-block and assembled results agree bitwise.
Vec3 element_center(const SurfacePlacement& p, int idx) {
    if (idx < 0 || idx >= p.element_count())
        throw Error("element index " + std::to_string(idx) + " out of range for a " +
                    std::to_string(p.n_h) + "x" + std::to_string(p.n_v) + " grid");
    const SurfaceFrame f = unit_vectors(p);
    const int i = idx % p.n_h;
    const int j = idx / p.n_h;
    return p.center + (i - (p.n_h - 1) / 2.0) * p.len_h * f.h +
           (j - (p.n_v - 1) / 2.0) * p.len_v * f.v;
}

Vec3 center_separation(const SurfacePlacement& tx, int n, const SurfacePlacement& rx, int m) {
    return element_center(rx, m) - element_center(tx, n);
}

}  // namespace

Mat3c exact_channel_block(const SurfacePlacement& tx, int n, const SurfacePlacement& rx,
                          int m, const WaveParams& w, const QuadratureSpec& q) {
    if (q.order < 2)
        throw ConfigError("quadrature order must be >= 2");

    const Vec3 dbar = center_separation(tx, n, rx, m);
    const double scale = w.impedance / (2.0 * w.wavelength);

    const PairQuadrature quad(tx, rx, q.order);
    const Mat3c coarse = integrate_block(dbar, quad, w.wavenumber, scale);
    if (!q.verify)
        return coarse;

    const PairQuadrature fine_quad(tx, rx, 2 * q.order);
    const Mat3c fine = integrate_block(dbar, fine_quad, w.wavenumber, scale);
    const double rel = (fine - coarse).norm() / fine.norm();
    if (rel > q.divergence_tol)
        throw QuadratureDiverged("exact_channel_block: order " + std::to_string(q.order) +
                                 " -> " + std::to_string(2 * q.order) + " changed the block by " +
                                 std::to_string(rel) + " relative");
    return fine;
}

double varrho(const SurfacePlacement& tx, const SurfacePlacement& rx, const Vec3& dbar,
              const WaveParams& w) {
    const double dist = dbar.norm();
    if (dist < kMinSeparation)
        throw CoincidentPoints("varrho: zero center separation");

    const DeltaZCoefficients ct = delta_z_coefficients(tx);
    const DeltaZCoefficients cr = delta_z_coefficients(rx);

    const double pi_over_lambda = M_PI / w.wavelength;
    const double arg_th = pi_over_lambda * tx.len_h * (dbar.x + dbar.z * ct.c_x) / dist;
    const double arg_tv = pi_over_lambda * tx.len_v * (dbar.y + dbar.z * ct.c_y) / dist;
    const double arg_rh = pi_over_lambda * rx.len_h * (dbar.x + dbar.z * cr.c_x) / dist;
    const double arg_rv = pi_over_lambda * rx.len_v * (dbar.y + dbar.z * cr.c_y) / dist;

    return sinc(arg_th) * sinc(arg_tv) * sinc(arg_rh) * sinc(arg_rv);
}

Mat3c cicm_block(const SurfacePlacement& tx, int n, const SurfacePlacement& rx, int m,
                 const WaveParams& w) {
    const Vec3 dbar = center_separation(tx, n, rx, m);
    const double scale = w.impedance / (2.0 * w.wavelength) * rx.element_area() * tx.element_area();
    return scale * green_tensor_at(dbar, w);
}

Mat3c cdcm_block(const SurfacePlacement& tx, int n, const SurfacePlacement& rx, int m,
                 const WaveParams& w) {
    const Vec3 dbar = center_separation(tx, n, rx, m);
    return varrho(tx, rx, dbar, w) * cicm_block(tx, n, rx, m, w);
}

namespace {

// Shared implementation for all three models plus the raw Green assembly:
// one deterministic per-block kernel, optionally fanned out over threads.
template <typename BlockFn>
BlockChannelMatrix assemble_blocks(int m_elems, int n_elems, unsigned threads, BlockFn&& fn) {
    BlockChannelMatrix h(m_elems, n_elems);
    const int total = m_elems * n_elems;

    std::atomic<bool> failed{false};
    std::mutex error_mutex;
    int err_m = -1, err_n = -1;
    std::string err_what;

    auto run_range = [&](int begin, int end) {
        for (int b = begin; b < end && !failed.load(std::memory_order_relaxed); ++b) {
            const int m = b / n_elems;
            const int n = b % n_elems;
            try {
                h.set_block(m, n, fn(m, n));
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!failed.exchange(true)) {
                    err_m = m;
                    err_n = n;
                    err_what = e.what();
                }
            }
        }
    };

    if (threads <= 1) {
        run_range(0, total);
    } else {
        const unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(total));
        std::vector<std::thread> pool;
        pool.reserve(workers);
        const int chunk = (total + static_cast<int>(workers) - 1) / static_cast<int>(workers);
        for (unsigned t = 0; t < workers; ++t) {
            const int begin = static_cast<int>(t) * chunk;
            const int end = std::min(total, begin + chunk);
            pool.emplace_back(run_range, begin, end);
        }
        for (auto& th : pool)
            th.join();
    }

    if (failed.load())
        throw AssemblyError(err_m, err_n, err_what);
    return h;
}

}  // namespace

BlockChannelMatrix assemble_channel(ChannelModel model, const SurfacePlacement& tx,
                                    const SurfacePlacement& rx, const WaveParams& w,
                                    const QuadratureSpec& q, unsigned threads) {
    tx.validate();
    rx.validate();

    const auto tx_centers = element_centers(tx);
    const auto rx_centers = element_centers(rx);
    const int m_elems = rx.element_count();
    const int n_elems = tx.element_count();

    switch (model) {
        case ChannelModel::Exact: {
            if (q.order < 2)
                throw ConfigError("quadrature order must be >= 2");
            // The offset table is shared across blocks (and threads): only the
            // center separation changes per pair.
            const PairQuadrature quad(tx, rx, q.order);
            const double scale = w.impedance / (2.0 * w.wavelength);
            const double k0 = w.wavenumber;
            return assemble_blocks(m_elems, n_elems, threads, [&](int m, int n) {
                return integrate_block(rx_centers[m] - tx_centers[n], quad, k0, scale);
            });
        }
        case ChannelModel::CDCM: {
            const double scale =
                w.impedance / (2.0 * w.wavelength) * rx.element_area() * tx.element_area();
            return assemble_blocks(m_elems, n_elems, threads, [&](int m, int n) {
                const Vec3 dbar = rx_centers[m] - tx_centers[n];
                const Mat3c ci = scale * green_tensor_at(dbar, w);
                return Mat3c(varrho(tx, rx, dbar, w) * ci);
            });
        }
        case ChannelModel::CICM: {
            const double scale =
                w.impedance / (2.0 * w.wavelength) * rx.element_area() * tx.element_area();
            return assemble_blocks(m_elems, n_elems, threads, [&](int m, int n) {
                return Mat3c(scale * green_tensor_at(rx_centers[m] - tx_centers[n], w));
            });
        }
    }
    throw Error("assemble_channel: unreachable model");
}

BlockChannelMatrix assemble_green_matrix(const SurfacePlacement& tx,
                                         const SurfacePlacement& rx, const WaveParams& w) {
    tx.validate();
    rx.validate();
    const auto tx_centers = element_centers(tx);
    const auto rx_centers = element_centers(rx);
    return assemble_blocks(rx.element_count(), tx.element_count(), 1, [&](int m, int n) {
        return green_tensor_at(rx_centers[m] - tx_centers[n], w);
    });
}

Eigen::VectorXcd simulate_transmission(const BlockChannelMatrix& h, const Eigen::VectorXcd& j,
                                       const Eigen::VectorXcd& noise, double s_r) {
    if (j.size() != h.cols())
        throw DimensionMismatch("simulate_transmission: current vector length " +
                                std::to_string(j.size()) + " != 3N = " + std::to_string(h.cols()));
    if (noise.size() != h.rows())
        throw DimensionMismatch("simulate_transmission: noise vector length " +
                                std::to_string(noise.size()) + " != 3M = " +
                                std::to_string(h.rows()));
    return h.data() * j + s_r * noise;
}

}  // namespace hmimo
