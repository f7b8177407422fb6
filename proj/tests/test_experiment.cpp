// SPDX-License-Identifier: Apache-2.0
//
// hmimo - near-field LoS channel models and capacity limits for
// holographic MIMO surfaces with arbitrary placements
//
// Licensed under the Apache License, Version 2.0;
// see http://www.apache.org/licenses/LICENSE-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "hmimo/errors.hpp"
#include "hmimo/experiment.hpp"

using namespace hmimo;

namespace {

ExperimentConfig parse_text(const std::string& text) {
    std::istringstream in(text);
    return ExperimentConfig::parse(in);
}

}  // namespace

TEST_CASE("defaults: 30 GHz, paper-rounded wavelength, lambda-relative lengths") {
    const ExperimentConfig cfg = parse_text("");
    CHECK(cfg.frequency == doctest::Approx(30e9));
    CHECK(cfg.lambda_exact() == doctest::Approx(kSpeedOfLight / 30e9).epsilon(1e-15));
    CHECK(cfg.lambda_used() == doctest::Approx(0.01).epsilon(1e-15));
    CHECK(cfg.paper_rounding);
    CHECK(cfg.lengths_in_lambda);
    CHECK(cfg.models.size() == 3);

    const SurfacePlacement tx = cfg.resolved_tx();
    CHECK(tx.len_h == doctest::Approx(0.05 * 0.01).epsilon(1e-12));
    const SurfacePlacement rx = cfg.resolved_rx();
    CHECK(rx.center.z == doctest::Approx(0.01).epsilon(1e-12));
}

TEST_CASE("exact wavelength when paper rounding is off") {
    const ExperimentConfig cfg = parse_text("paper_rounding = false\n");
    CHECK(cfg.lambda_used() == doctest::Approx(cfg.lambda_exact()).epsilon(1e-16));
    CHECK(cfg.wave().wavelength == doctest::Approx(kSpeedOfLight / 30e9).epsilon(1e-15));
}

TEST_CASE("absolute lengths when the lambda-relative flag is off") {
    const ExperimentConfig cfg = parse_text(
        "lengths_in_lambda = false\n"
        "tx.len_h = 0.002\n"
        "tx.len_v = 0.002\n"
        "rx.len_h = 0.002\n"
        "rx.len_v = 0.002\n"
        "rx.center_z = 0.04\n");
    CHECK(cfg.resolved_tx().len_h == doctest::Approx(0.002).epsilon(1e-15));
    CHECK(cfg.resolved_rx().center.z == doctest::Approx(0.04).epsilon(1e-15));
}

TEST_CASE("keys parse into the right fields") {
    const ExperimentConfig cfg = parse_text(
        "frequency = 28e9\n"
        "tx.n_h = 4\n"
        "tx.n_v = 5\n"
        "tx.polar_v = 75   # trailing comment\n"
        "rx.polar_v_set = 60, 75, 90\n"
        "models = Exact, CDCM\n"
        "quad.order = 8\n"
        "quad.verify = true\n"
        "quad.tolerance = 1e-5\n"
        "sweep.axis = distance\n"
        "sweep.grid = 0.5, 1, 5\n"
        "snr.db = 15\n"
        "snr.streams = auto\n"
        "output.dir = results\n"
        "seed = 42\n");
    CHECK(cfg.frequency == doctest::Approx(28e9));
    CHECK(cfg.tx.n_h == 4);
    CHECK(cfg.tx.n_v == 5);
    CHECK(cfg.tx.polar_v == doctest::Approx(75.0));
    CHECK(cfg.rx_polar_v_set == std::vector<double>{60.0, 75.0, 90.0});
    CHECK(cfg.polar_v_values() == std::vector<double>{60.0, 75.0, 90.0});
    REQUIRE(cfg.models.size() == 2);
    CHECK(cfg.models[1] == ChannelModel::CDCM);
    CHECK(cfg.quad.order == 8);
    CHECK(cfg.quad.verify);
    CHECK(cfg.quad.divergence_tol == doctest::Approx(1e-5));
    CHECK(cfg.sweep.axis == SweepAxis::Distance);
    CHECK(cfg.sweep.grid == std::vector<double>{0.5, 1.0, 5.0});
    CHECK(cfg.snr.db == doctest::Approx(15.0));
    CHECK(cfg.snr.streams == 0);
    CHECK(cfg.output_dir == "results");
    CHECK(cfg.seed == 42);
}

TEST_CASE("strict parsing: unknown keys, malformed lines, bad values") {
    CHECK_THROWS_AS(parse_text("bogus_key = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_text("tx.bogus = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_text("frequency 30e9\n"), ConfigError);
    CHECK_THROWS_AS(parse_text("frequency = not_a_number\n"), ConfigError);
    CHECK_THROWS_AS(parse_text("tx.n_h = 2.5\n"), ConfigError);
    CHECK_THROWS_AS(parse_text("models = Exact, CD-CM\n"), ConfigError);
    CHECK_THROWS_AS(parse_text("sweep.axis = elevation\n"), ConfigError);
    CHECK_THROWS_AS(parse_text("quad.order = 1\n"), ConfigError);
}

TEST_CASE("grid validation: nonempty and strictly monotone") {
    CHECK_THROWS_AS(parse_text("sweep.grid = 1, 2, 2\n"), ConfigError);
    CHECK_THROWS_AS(parse_text("sweep.grid = 1, 3, 2\n"), ConfigError);
    CHECK_NOTHROW(parse_text("sweep.grid = 3, 2, 1\n"));
    CHECK_NOTHROW(parse_text("sweep.grid = 1, 2, 3\n"));
    CHECK_THROWS_AS(parse_text("sweep.axis = tx_elems\nsweep.grid = 9, 10.5\n"), ConfigError);
}

TEST_CASE("distance sweep requires distinct centers") {
    CHECK_THROWS_AS(parse_text("sweep.axis = distance\nrx.center_z = 0\n"), ConfigError);
}

TEST_CASE("degenerate placements are config errors") {
    CHECK_THROWS_AS(parse_text("tx.azimuth_v = 0\n"), ConfigError);  // equals azimuth_h
    CHECK_THROWS_AS(parse_text("rx.n_h = 0\n"), ConfigError);
}

TEST_CASE("canonical text is stable under reparse and sensitive to changes") {
    const ExperimentConfig cfg = parse_text("tx.n_h = 7\nseed = 9\n");
    std::istringstream echo(cfg.canonical_text());
    const ExperimentConfig reparsed = ExperimentConfig::parse(echo);
    CHECK(reparsed.canonical_text() == cfg.canonical_text());
    CHECK(reparsed.hash() == cfg.hash());

    const ExperimentConfig changed = parse_text("tx.n_h = 8\nseed = 9\n");
    CHECK(changed.hash() != cfg.hash());
}
