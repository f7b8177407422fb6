// SPDX-License-Identifier: Apache-2.0
//
// hmimo - near-field LoS channel models and capacity limits for
// holographic MIMO surfaces with arbitrary placements
//
// Licensed under the Apache License, Version 2.0;
// see http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "hmimo/capacity.hpp"
#include "hmimo/channel.hpp"
#include "hmimo/geometry.hpp"
#include "hmimo/green.hpp"

namespace hmimo {

enum class SweepAxis { Spacing, Distance, TxElems, Snr };

std::string to_string(SweepAxis axis);
SweepAxis sweep_axis_from_string(std::string_view name);

struct SweepSpec {
    SweepAxis axis = SweepAxis::Spacing;
    std::vector<double> grid;  ///< nonempty, strictly monotone
};

struct SnrConfig {
    double db = 20.0;             ///< target average transmit SNR, dB
    double noise_variance = 1.0;  ///< watts
    double power_fraction = 0.8;  ///< stream selection threshold
    int streams = 0;              ///< 0 = adaptive via svd_patterns
    bool linear_power_rule = false;  ///< count linear singular values instead of energy
};

/// One experiment: wave parameters, both placements, model set, quadrature,
/// sweep axis and grid, SNR parameters, output locations and seed.
///
/// Parsed from flat `key = value` text with dotted sections (e.g.
/// `tx.polar_h = 90`). Parsing is strict: unknown keys are errors. `#` starts
/// a comment. With `lengths_in_lambda` set (the default), element lengths,
/// center coordinates and spacing/distance grids are given in wavelengths and
/// resolved against the paper-rounded or exact wavelength at parse time.
struct ExperimentConfig {
    double frequency = 30e9;
    bool paper_rounding = true;    ///< resolve lambda to one significant digit (0.01 m at 30 GHz)
    bool lengths_in_lambda = true;

    SurfacePlacement tx;  ///< lengths/centers in lambda units if lengths_in_lambda
    SurfacePlacement rx;
    std::vector<double> rx_polar_v_set;  ///< degrees; empty = just rx.polar_v

    std::vector<ChannelModel> models;
    QuadratureSpec quad;
    SweepSpec sweep;
    SnrConfig snr;

    std::string output_dir = "out";
    std::uint64_t seed = 0;

    static ExperimentConfig parse(std::istream& in);
    static ExperimentConfig parse_file(const std::filesystem::path& path);

    /// Field-range and cross-field validation; throws ConfigError.
    void validate() const;

    double lambda_exact() const { return kSpeedOfLight / frequency; }
    /// Wavelength used for all physics: exact c/f or its paper-rounded value.
    double lambda_used() const;
    WaveParams wave() const { return WaveParams::from_wavelength(lambda_used()); }

    /// Lambda-relative value -> meters (identity when lengths are absolute).
    double resolve_length(double value) const;

    /// Placement with lengths/centers resolved to meters.
    SurfacePlacement resolved_tx() const;
    SurfacePlacement resolved_rx() const;

    /// Receive polar_v values to evaluate (rx_polar_v_set or the single value).
    std::vector<double> polar_v_values() const;

    /// Canonical one-line-per-key echo of every field, in fixed order; the
    /// basis for the config hash and the sidecar.
    std::string canonical_text() const;
    std::uint64_t hash() const;
};

}  // namespace hmimo
