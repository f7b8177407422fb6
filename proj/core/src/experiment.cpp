// SPDX-License-Identifier: Apache-2.0
//
// hmimo - near-field LoS channel models and capacity limits for
// holographic MIMO surfaces with arbitrary placements
//
// Licensed under the Apache License, Version 2.0;
// see http://www.apache.org/licenses/LICENSE-2.0

#include "hmimo/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "hmimo/errors.hpp"
#include "hmimo/format.hpp"

namespace hmimo {

std::string to_string(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::Spacing: return "spacing";
        case SweepAxis::Distance: return "distance";
        case SweepAxis::TxElems: return "tx_elems";
        case SweepAxis::Snr: return "snr";
    }
    return "?";
}

SweepAxis sweep_axis_from_string(std::string_view name) {
    if (name == "spacing") return SweepAxis::Spacing;
    if (name == "distance") return SweepAxis::Distance;
    if (name == "tx_elems") return SweepAxis::TxElems;
    if (name == "snr") return SweepAxis::Snr;
    throw ConfigError("unknown sweep axis '" + std::string(name) +
                      "' (expected spacing, distance, tx_elems or snr)");
}

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos)
        return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size())
            throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': cannot parse '" + value + "' as a number");
    }
}

int parse_int(const std::string& key, const std::string& value) {
    const double v = parse_double(key, value);
    const int i = static_cast<int>(std::llround(v));
    if (std::abs(v - i) > 1e-12)
        throw ConfigError("key '" + key + "': expected an integer, got '" + value + "'");
    return i;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes")
        return true;
    if (value == "false" || value == "0" || value == "no")
        return false;
    throw ConfigError("key '" + key + "': expected a boolean, got '" + value + "'");
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> items;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ','))
        items.push_back(trim(item));
    return items;
}

std::vector<double> parse_double_list(const std::string& key, const std::string& value) {
    std::vector<double> out;
    for (const std::string& item : split_list(value))
        out.push_back(parse_double(key, item));
    return out;
}

// Placement keys live under a section prefix ("tx." / "rx.").
bool apply_placement_key(SurfacePlacement& p, const std::string& field,
                         const std::string& key, const std::string& value) {
    if (field == "center_x") { p.center.x = parse_double(key, value); return true; }
    if (field == "center_y") { p.center.y = parse_double(key, value); return true; }
    if (field == "center_z") { p.center.z = parse_double(key, value); return true; }
    if (field == "polar_h") { p.polar_h = parse_double(key, value); return true; }
    if (field == "polar_v") { p.polar_v = parse_double(key, value); return true; }
    if (field == "azimuth_h") { p.azimuth_h = parse_double(key, value); return true; }
    if (field == "azimuth_v") { p.azimuth_v = parse_double(key, value); return true; }
    if (field == "n_h") { p.n_h = parse_int(key, value); return true; }
    if (field == "n_v") { p.n_v = parse_int(key, value); return true; }
    if (field == "len_h") { p.len_h = parse_double(key, value); return true; }
    if (field == "len_v") { p.len_v = parse_double(key, value); return true; }
    return false;
}

bool strictly_monotone(const std::vector<double>& grid) {
    if (grid.size() < 2)
        return true;
    const bool increasing = grid[1] > grid[0];
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (increasing ? grid[i] <= grid[i - 1] : grid[i] >= grid[i - 1])
            return false;
    }
    return true;
}

}  // namespace

ExperimentConfig ExperimentConfig::parse(std::istream& in) {
    ExperimentConfig cfg;
    // Paper-style defaults: square surfaces, one in the xy-plane, the other a
    // wavelength away along z.
    cfg.tx = SurfacePlacement{{0.0, 0.0, 0.0}, 90.0, 90.0, 0.0, 90.0, 9, 9, 0.05, 0.05};
    cfg.rx = SurfacePlacement{{0.0, 0.0, 1.0}, 90.0, 90.0, 0.0, 90.0, 3, 3, 0.05, 0.05};
    cfg.models = {ChannelModel::Exact, ChannelModel::CDCM, ChannelModel::CICM};
    cfg.sweep.grid = {0.5, 0.2, 0.1, 0.05, 0.02, 0.01};

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash_pos = line.find('#');
        if (hash_pos != std::string::npos)
            line.erase(hash_pos);
        line = trim(line);
        if (line.empty())
            continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("line " + std::to_string(line_no) + ": empty key or value");

        if (key.rfind("tx.", 0) == 0) {
            if (!apply_placement_key(cfg.tx, key.substr(3), key, value))
                throw ConfigError("unknown key '" + key + "'");
            continue;
        }
        if (key.rfind("rx.", 0) == 0) {
            const std::string field = key.substr(3);
            if (field == "polar_v_set") {
                cfg.rx_polar_v_set = parse_double_list(key, value);
                continue;
            }
            if (!apply_placement_key(cfg.rx, field, key, value))
                throw ConfigError("unknown key '" + key + "'");
            continue;
        }

        if (key == "frequency") cfg.frequency = parse_double(key, value);
        else if (key == "paper_rounding") cfg.paper_rounding = parse_bool(key, value);
        else if (key == "lengths_in_lambda") cfg.lengths_in_lambda = parse_bool(key, value);
        else if (key == "models") {
            cfg.models.clear();
            for (const std::string& name : split_list(value))
                cfg.models.push_back(channel_model_from_string(name));
        }
        else if (key == "quad.order") cfg.quad.order = parse_int(key, value);
        else if (key == "quad.verify") cfg.quad.verify = parse_bool(key, value);
        else if (key == "quad.tolerance") cfg.quad.divergence_tol = parse_double(key, value);
        else if (key == "sweep.axis") cfg.sweep.axis = sweep_axis_from_string(value);
        else if (key == "sweep.grid") cfg.sweep.grid = parse_double_list(key, value);
        else if (key == "snr.db") cfg.snr.db = parse_double(key, value);
        else if (key == "snr.noise_variance") cfg.snr.noise_variance = parse_double(key, value);
        else if (key == "snr.power_fraction") cfg.snr.power_fraction = parse_double(key, value);
        else if (key == "snr.streams") {
            cfg.snr.streams = value == "auto" ? 0 : parse_int(key, value);
        }
        else if (key == "snr.linear_power_rule") cfg.snr.linear_power_rule = parse_bool(key, value);
        else if (key == "output.dir") cfg.output_dir = value;
        else if (key == "seed") {
            try {
                std::size_t pos = 0;
                cfg.seed = std::stoull(value, &pos);
                if (pos != value.size())
                    throw std::invalid_argument("trailing characters");
            } catch (const std::exception&) {
                throw ConfigError("key 'seed': cannot parse '" + value + "'");
            }
        }
        else throw ConfigError("unknown key '" + key + "'");
    }

    cfg.validate();
    return cfg;
}

ExperimentConfig ExperimentConfig::parse_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path.string() + "'");
    return parse(in);
}

void ExperimentConfig::validate() const {
    if (!(frequency > 0.0))
        throw ConfigError("frequency must be > 0");
    if (sweep.grid.empty())
        throw ConfigError("sweep.grid must be nonempty");
    if (!strictly_monotone(sweep.grid))
        throw ConfigError("sweep.grid must be strictly monotone");
    if (models.empty())
        throw ConfigError("models must be nonempty");
    if (quad.order < 2)
        throw ConfigError("quad.order must be >= 2");
    if (!(snr.power_fraction > 0.0) || snr.power_fraction > 1.0)
        throw ConfigError("snr.power_fraction must lie in (0, 1]");
    if (snr.streams < 0)
        throw ConfigError("snr.streams must be >= 0");
    if (!(snr.noise_variance > 0.0))
        throw ConfigError("snr.noise_variance must be > 0");
    if (sweep.axis == SweepAxis::TxElems) {
        for (double v : sweep.grid)
            if (v < 1.0 || std::abs(v - std::llround(v)) > 1e-12)
                throw ConfigError("tx_elems sweep grid must contain positive integers");
    }
    if (sweep.axis == SweepAxis::Distance) {
        if ((rx.center - tx.center).norm() <= 0.0)
            throw ConfigError("distance sweep needs distinct tx/rx centers to fix the axis");
        for (double v : sweep.grid)
            if (!(v > 0.0))
                throw ConfigError("distance sweep grid must be positive");
    }
    if (sweep.axis == SweepAxis::Spacing) {
        for (double v : sweep.grid)
            if (!(v > 0.0))
                throw ConfigError("spacing sweep grid must be positive");
    }
    try {
        resolved_tx().validate();
        resolved_rx().validate();
        for (double pv : polar_v_values()) {
            SurfacePlacement r = resolved_rx();
            r.polar_v = pv;
            r.validate();
        }
    } catch (const Error& e) {
        throw ConfigError(std::string("placement: ") + e.what());
    }
}

double ExperimentConfig::lambda_used() const {
    const double exact = lambda_exact();
    if (!paper_rounding)
        return exact;
    // Round to one significant digit: 0.0099930... m -> 0.01 m at 30 GHz.
    const double mag = std::pow(10.0, std::floor(std::log10(exact)));
    return std::round(exact / mag) * mag;
}

double ExperimentConfig::resolve_length(double value) const {
    return lengths_in_lambda ? value * lambda_used() : value;
}

namespace {

SurfacePlacement resolve_placement(const SurfacePlacement& p, const ExperimentConfig& cfg) {
    SurfacePlacement out = p;
    out.center = {cfg.resolve_length(p.center.x), cfg.resolve_length(p.center.y),
                  cfg.resolve_length(p.center.z)};
    out.len_h = cfg.resolve_length(p.len_h);
    out.len_v = cfg.resolve_length(p.len_v);
    return out;
}

}  // namespace

SurfacePlacement ExperimentConfig::resolved_tx() const { return resolve_placement(tx, *this); }
SurfacePlacement ExperimentConfig::resolved_rx() const { return resolve_placement(rx, *this); }

std::vector<double> ExperimentConfig::polar_v_values() const {
    if (rx_polar_v_set.empty())
        return {rx.polar_v};
    return rx_polar_v_set;
}

std::string ExperimentConfig::canonical_text() const {
    std::ostringstream out;
    auto put = [&out](const std::string& key, const std::string& value) {
        out << key << " = " << value << '\n';
    };
    put("frequency", format_f64(frequency));
    put("paper_rounding", paper_rounding ? "true" : "false");
    put("lengths_in_lambda", lengths_in_lambda ? "true" : "false");

    auto put_placement = [&put](const std::string& prefix, const SurfacePlacement& p) {
        put(prefix + ".center_x", format_f64(p.center.x));
        put(prefix + ".center_y", format_f64(p.center.y));
        put(prefix + ".center_z", format_f64(p.center.z));
        put(prefix + ".polar_h", format_f64(p.polar_h));
        put(prefix + ".polar_v", format_f64(p.polar_v));
        put(prefix + ".azimuth_h", format_f64(p.azimuth_h));
        put(prefix + ".azimuth_v", format_f64(p.azimuth_v));
        put(prefix + ".n_h", std::to_string(p.n_h));
        put(prefix + ".n_v", std::to_string(p.n_v));
        put(prefix + ".len_h", format_f64(p.len_h));
        put(prefix + ".len_v", format_f64(p.len_v));
    };
    put_placement("tx", tx);
    put_placement("rx", rx);

    if (!rx_polar_v_set.empty()) {
        std::string pv_set;
        for (std::size_t i = 0; i < rx_polar_v_set.size(); ++i) {
            if (i)
                pv_set += ',';
            pv_set += format_f64(rx_polar_v_set[i]);
        }
        put("rx.polar_v_set", pv_set);
    }

    std::string model_list;
    for (std::size_t i = 0; i < models.size(); ++i) {
        if (i)
            model_list += ',';
        model_list += to_string(models[i]);
    }
    put("models", model_list);

    put("quad.order", std::to_string(quad.order));
    put("quad.verify", quad.verify ? "true" : "false");
    put("quad.tolerance", format_f64(quad.divergence_tol));
    put("sweep.axis", to_string(sweep.axis));
    std::string grid;
    for (std::size_t i = 0; i < sweep.grid.size(); ++i) {
        if (i)
            grid += ',';
        grid += format_f64(sweep.grid[i]);
    }
    put("sweep.grid", grid);
    put("snr.db", format_f64(snr.db));
    put("snr.noise_variance", format_f64(snr.noise_variance));
    put("snr.power_fraction", format_f64(snr.power_fraction));
    put("snr.streams", snr.streams == 0 ? "auto" : std::to_string(snr.streams));
    put("snr.linear_power_rule", snr.linear_power_rule ? "true" : "false");
    put("output.dir", output_dir);
    put("seed", std::to_string(seed));
    return out.str();
}

std::uint64_t ExperimentConfig::hash() const { return fnv1a64(canonical_text()); }

}  // namespace hmimo
