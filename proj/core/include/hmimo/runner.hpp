// SPDX-License-Identifier: Apache-2.0
//
// hmimo - near-field LoS channel models and capacity limits for
// holographic MIMO surfaces with arbitrary placements
//
// Licensed under the Apache License, Version 2.0;
// see http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <filesystem>

#include "hmimo/experiment.hpp"

namespace hmimo {

/// Files produced by one sweep run: the CSV table, a gnuplot script that
/// references it, and a metadata sidecar (the only file carrying a
/// timestamp; CSVs are byte-identical across reruns of the same config).
struct RunArtifacts {
    std::filesystem::path csv;
    std::filesystem::path plot;
    std::filesystem::path sidecar;
};

/// NMSE of each non-reference model against the exact quadrature oracle,
/// over the sweep grid and every configured receive polar_v. The exact
/// matrix is assembled once per sweep point and reused across models.
/// Per-point failures become rows with an error status; the run continues.
RunArtifacts run_nmse_sweep(const ExperimentConfig& cfg, const std::filesystem::path& out_dir);

/// Singular-value spectra of every configured model over the sweep grid.
RunArtifacts run_eigen(const ExperimentConfig& cfg, const std::filesystem::path& out_dir);

/// Exact capacity, near-field bound and far-field bound over the sweep grid.
RunArtifacts run_capacity_sweep(const ExperimentConfig& cfg,
                                const std::filesystem::path& out_dir);

struct DumpArtifacts {
    std::filesystem::path csv;
    std::filesystem::path binary;
    std::filesystem::path sidecar;
};

/// Assembles the channel once (no sweep) and writes it in both external
/// formats plus the metadata sidecar.
DumpArtifacts dump_channel(const ExperimentConfig& cfg, ChannelModel model,
                           const std::filesystem::path& out_dir);

/// Placements for one point of the sweep (spacing/distance/tx_elems applied;
/// snr points leave geometry unchanged). Exposed for tests.
struct SweepPoint {
    SurfacePlacement tx;
    SurfacePlacement rx;
    double value;     ///< grid value as configured
    double value_si;  ///< meters for length axes, count for tx_elems, dB for snr
    double snr_db;
};

SweepPoint make_sweep_point(const ExperimentConfig& cfg, double grid_value);

}  // namespace hmimo
