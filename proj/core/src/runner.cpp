// SPDX-License-Identifier: Apache-2.0
//
// hmimo - near-field LoS channel models and capacity limits for
// holographic MIMO surfaces with arbitrary placements
//
// Licensed under the Apache License, Version 2.0;
// see http://www.apache.org/licenses/LICENSE-2.0

#include "hmimo/runner.hpp"

#include <algorithm>
#include <cmath>
#include <ctime>
#include <fstream>
#include <sstream>
#include <thread>

#include "hmimo/channel_io.hpp"
#include "hmimo/errors.hpp"
#include "hmimo/format.hpp"
#include "hmimo/metrics.hpp"
#include "hmimo/version.hpp"

namespace hmimo {

namespace {

unsigned assembly_threads() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

std::string sanitize_for_csv(std::string text) {
    for (char& c : text)
        if (c == ',' || c == '\n' || c == '\r')
            c = ';';
    return text;
}

std::string iso_utc_now() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot open '" + path.string() + "' for writing");
    out << content;
    if (!out)
        throw Error("write failed for '" + path.string() + "'");
}

std::filesystem::path write_sidecar(const ExperimentConfig& cfg,
                                    const std::filesystem::path& out_dir,
                                    const std::string& stem) {
    std::ostringstream meta;
    meta << "tool = " << kToolName << ' ' << kToolVersion << '\n';
    meta << "generated_at = " << iso_utc_now() << '\n';
    meta << "config_hash = " << format_hex64(cfg.hash()) << '\n';
    meta << "frequency_hz = " << format_f64(cfg.frequency) << '\n';
    meta << "lambda_exact_m = " << format_f64(cfg.lambda_exact()) << '\n';
    meta << "lambda_used_m = " << format_f64(cfg.lambda_used()) << '\n';
    meta << "eigenmode_convention = singular values of the (3M)x(3N) channel matrix\n";
    meta << "seed = " << cfg.seed << '\n';
    meta << "config:\n" << cfg.canonical_text();
    const std::filesystem::path path = out_dir / (stem + ".meta.txt");
    write_text_file(path, meta.str());
    return path;
}

double current_snr_db(const ExperimentConfig& cfg, double grid_value) {
    return cfg.sweep.axis == SweepAxis::Snr ? grid_value : cfg.snr.db;
}

PatternBasis truncate_basis(PatternBasis basis, int p) {
    if (p >= basis.p)
        return basis;
    basis.p = p;
    basis.gammas.resize(static_cast<std::size_t>(p));
    basis.t_matrix = basis.t_matrix.leftCols(p).eval();
    basis.r_matrix = basis.r_matrix.leftCols(p).eval();
    return basis;
}

}  // namespace

SweepPoint make_sweep_point(const ExperimentConfig& cfg, double grid_value) {
    SweepPoint point;
    point.tx = cfg.resolved_tx();
    point.rx = cfg.resolved_rx();
    point.value = grid_value;
    point.snr_db = current_snr_db(cfg, grid_value);

    switch (cfg.sweep.axis) {
        case SweepAxis::Spacing: {
            const double len = cfg.resolve_length(grid_value);
            point.tx.len_h = point.tx.len_v = len;
            point.rx.len_h = point.rx.len_v = len;
            point.value_si = len;
            break;
        }
        case SweepAxis::Distance: {
            const Vec3 axis = point.rx.center - point.tx.center;
            const double dist = cfg.resolve_length(grid_value);
            point.rx.center = point.tx.center + axis * (dist / axis.norm());
            point.value_si = dist;
            break;
        }
        case SweepAxis::TxElems: {
            const int count = static_cast<int>(std::llround(grid_value));
            point.tx.n_h = point.tx.n_v = count;
            point.value_si = grid_value;
            break;
        }
        case SweepAxis::Snr: {
            point.value_si = grid_value;
            break;
        }
    }
    return point;
}

RunArtifacts run_nmse_sweep(const ExperimentConfig& cfg, const std::filesystem::path& out_dir) {
    const bool has_exact = std::find(cfg.models.begin(), cfg.models.end(),
                                     ChannelModel::Exact) != cfg.models.end();
    if (!has_exact)
        throw ConfigError("run_nmse_sweep: the Exact model must be configured as reference");

    std::filesystem::create_directories(out_dir);
    const WaveParams wave = cfg.wave();
    const unsigned threads = assembly_threads();

    std::ostringstream csv;
    csv << "sweep_axis,sweep_value,sweep_value_si,frequency_hz,rx_polar_v_deg,model,nmse,status\n";

    for (double grid_value : cfg.sweep.grid) {
        for (double polar_v : cfg.polar_v_values()) {
            SweepPoint point = make_sweep_point(cfg, grid_value);
            point.rx.polar_v = polar_v;

            auto prefix = [&](ChannelModel model) {
                std::ostringstream row;
                row << to_string(cfg.sweep.axis) << ',' << format_f64(point.value) << ','
                    << format_f64(point.value_si) << ',' << format_f64(cfg.frequency) << ','
                    << format_f64(polar_v) << ',' << to_string(model) << ',';
                return row.str();
            };

            BlockChannelMatrix exact;
            bool exact_ok = false;
            std::string exact_error;
            try {
                exact = assemble_channel(ChannelModel::Exact, point.tx, point.rx, wave,
                                         cfg.quad, threads);
                exact_ok = true;
            } catch (const Error& e) {
                exact_error = sanitize_for_csv(e.what());
            }

            for (ChannelModel model : cfg.models) {
                if (model == ChannelModel::Exact)
                    continue;
                if (!exact_ok) {
                    csv << prefix(model) << "nan,error: " << exact_error << '\n';
                    continue;
                }
                try {
                    const BlockChannelMatrix approx =
                        assemble_channel(model, point.tx, point.rx, wave, cfg.quad, threads);
                    csv << prefix(model) << format_f64(nmse(approx, exact)) << ",ok\n";
                } catch (const Error& e) {
                    csv << prefix(model) << "nan,error: " << sanitize_for_csv(e.what()) << '\n';
                }
            }
        }
    }

    RunArtifacts artifacts;
    artifacts.csv = out_dir / "nmse.csv";
    write_text_file(artifacts.csv, csv.str());

    std::ostringstream plot;
    plot << "# gnuplot script; run from this directory\n"
         << "set datafile separator ','\n"
         << "set key outside\n"
         << "set logscale y\n"
         << "set xlabel 'sweep value (" << to_string(cfg.sweep.axis) << ")'\n"
         << "set ylabel 'NMSE'\n"
         << "plot for [m in 'CDCM CICM'] 'nmse.csv' skip 1 \\\n"
         << "     using 2:(strcol(6) eq m ? column(7) : NaN) with linespoints title m\n";
    artifacts.plot = out_dir / "nmse.gp";
    write_text_file(artifacts.plot, plot.str());

    artifacts.sidecar = write_sidecar(cfg, out_dir, "nmse");
    return artifacts;
}

RunArtifacts run_eigen(const ExperimentConfig& cfg, const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    const WaveParams wave = cfg.wave();
    const unsigned threads = assembly_threads();

    std::ostringstream csv;
    csv << "sweep_axis,sweep_value,sweep_value_si,frequency_hz,rx_polar_v_deg,model,"
           "mode_index,singular_value,status\n";

    for (double grid_value : cfg.sweep.grid) {
        for (double polar_v : cfg.polar_v_values()) {
            SweepPoint point = make_sweep_point(cfg, grid_value);
            point.rx.polar_v = polar_v;

            for (ChannelModel model : cfg.models) {
                std::ostringstream prefix;
                prefix << to_string(cfg.sweep.axis) << ',' << format_f64(point.value) << ','
                       << format_f64(point.value_si) << ',' << format_f64(cfg.frequency) << ','
                       << format_f64(polar_v) << ',' << to_string(model) << ',';
                try {
                    const BlockChannelMatrix h =
                        assemble_channel(model, point.tx, point.rx, wave, cfg.quad, threads);
                    const SpectrumReport spectrum = singular_spectrum(h, to_string(model));
                    for (std::size_t i = 0; i < spectrum.values.size(); ++i)
                        csv << prefix.str() << i << ',' << format_f64(spectrum.values[i])
                            << ",ok\n";
                } catch (const Error& e) {
                    csv << prefix.str() << "-1,nan,error: " << sanitize_for_csv(e.what()) << '\n';
                }
            }
        }
    }

    RunArtifacts artifacts;
    artifacts.csv = out_dir / "eigen.csv";
    write_text_file(artifacts.csv, csv.str());

    std::ostringstream plot;
    plot << "# gnuplot script; run from this directory\n"
         << "set datafile separator ','\n"
         << "set key outside\n"
         << "set logscale y\n"
         << "set xlabel 'mode index'\n"
         << "set ylabel 'singular value'\n"
         << "plot for [m in 'Exact CDCM CICM'] 'eigen.csv' skip 1 \\\n"
         << "     using 7:(strcol(6) eq m ? column(8) : NaN) with linespoints title m\n";
    artifacts.plot = out_dir / "eigen.gp";
    write_text_file(artifacts.plot, plot.str());

    artifacts.sidecar = write_sidecar(cfg, out_dir, "eigen");
    return artifacts;
}

RunArtifacts run_capacity_sweep(const ExperimentConfig& cfg,
                                const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    const WaveParams wave = cfg.wave();
    const std::uint64_t config_hash = cfg.hash();

    std::ostringstream csv;
    csv << "sweep_axis,sweep_value,sweep_value_si,frequency_hz," << CapacityReport::csv_header()
        << ",status\n";

    for (double grid_value : cfg.sweep.grid) {
        const SweepPoint point = make_sweep_point(cfg, grid_value);
        std::ostringstream prefix;
        prefix << to_string(cfg.sweep.axis) << ',' << format_f64(point.value) << ','
               << format_f64(point.value_si) << ',' << format_f64(cfg.frequency) << ',';
        try {
            const BlockChannelMatrix green = assemble_green_matrix(point.tx, point.rx, wave);
            const auto rule = cfg.snr.linear_power_rule ? PowerFractionRule::LinearSingularValues
                                                        : PowerFractionRule::SquaredSingularValues;
            PatternBasis basis = svd_patterns(green, point.tx.element_area(),
                                              point.rx.element_area(), cfg.snr.power_fraction,
                                              rule);
            if (cfg.snr.streams > 0)
                basis = truncate_basis(std::move(basis), cfg.snr.streams);

            const SnrParams snr = SnrParams::from_target_snr_db(
                point.snr_db, basis.p, point.rx.element_area(), cfg.snr.noise_variance);

            CapacityReport report;
            report.p = basis.p;
            report.snr = snr;
            report.exact_bits = exact_capacity(basis, snr, wave);
            report.upper_bound_bits = capacity_upper_bound(point.tx, point.rx, snr, wave, basis.p);
            const double d0 = (point.rx.center - point.tx.center).norm();
            report.far_field_bound_bits = far_field_upper_bound(
                point.tx.surface_area(), point.rx.surface_area(), d0, snr, wave, basis.p);

            csv << prefix.str() << report.csv_row(config_hash, point.snr_db) << ",ok\n";
        } catch (const Error& e) {
            csv << prefix.str() << format_hex64(config_hash) << ",0,"
                << format_f64(point.snr_db) << ",nan,nan,nan,error: "
                << sanitize_for_csv(e.what()) << '\n';
        }
    }

    RunArtifacts artifacts;
    artifacts.csv = out_dir / "capacity.csv";
    write_text_file(artifacts.csv, csv.str());

    std::ostringstream plot;
    plot << "# gnuplot script; run from this directory\n"
         << "set datafile separator ','\n"
         << "set key outside\n"
         << "set xlabel 'sweep value (" << to_string(cfg.sweep.axis) << ")'\n"
         << "set ylabel 'capacity (bits/s/Hz)'\n"
         << "plot 'capacity.csv' skip 1 using 2:8 with linespoints title 'exact', \\\n"
         << "     ''             skip 1 using 2:9 with linespoints title 'upper bound', \\\n"
         << "     ''             skip 1 using 2:10 with linespoints title 'upper bound (FF)'\n";
    artifacts.plot = out_dir / "capacity.gp";
    write_text_file(artifacts.plot, plot.str());

    artifacts.sidecar = write_sidecar(cfg, out_dir, "capacity");
    return artifacts;
}

DumpArtifacts dump_channel(const ExperimentConfig& cfg, ChannelModel model,
                           const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    const WaveParams wave = cfg.wave();

    const BlockChannelMatrix h = assemble_channel(model, cfg.resolved_tx(), cfg.resolved_rx(),
                                                  wave, cfg.quad, assembly_threads());

    const std::string stem = "channel_" + to_string(model);
    DumpArtifacts artifacts;
    artifacts.csv = out_dir / (stem + ".csv");
    artifacts.binary = out_dir / (stem + ".bin");
    write_channel_csv(h, artifacts.csv);
    write_channel_binary(h, artifacts.binary);
    artifacts.sidecar = write_sidecar(cfg, out_dir, stem);
    return artifacts;
}

}  // namespace hmimo
