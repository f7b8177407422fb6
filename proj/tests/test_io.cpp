// SPDX-License-Identifier: Apache-2.0
//
// hmimo - near-field LoS channel models and capacity limits for
// holographic MIMO surfaces with arbitrary placements
//
// Licensed under the Apache License, Version 2.0;
// see http://www.apache.org/licenses/LICENSE-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "hmimo/channel_io.hpp"
#include "hmimo/errors.hpp"
#include "hmimo/format.hpp"
#include "support/test_support.hpp"

using namespace hmimo;
using test::Rng;

namespace {

std::filesystem::path temp_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "hmimo_io_tests";
    std::filesystem::create_directories(dir);
    return dir;
}

BlockChannelMatrix random_channel(Rng& rng, int m_elems, int n_elems) {
    BlockChannelMatrix h(m_elems, n_elems);
    for (Eigen::Index r = 0; r < h.rows(); ++r)
        for (Eigen::Index c = 0; c < h.cols(); ++c)
            h.data()(r, c) = Complex(rng.uniform(-1, 1) * std::pow(10.0, rng.uniform(-12, 3)),
                                     rng.uniform(-1, 1) * std::pow(10.0, rng.uniform(-12, 3)));
    return h;
}

}  // namespace

TEST_CASE("f64 formatting round-trips bit-exactly") {
    for (double v : {1.0 / 3.0, 1e-300, 6.02214076e23, -0.0, 2.0, 1.0000000000000002,
                     3.141592653589793, -1.7976931348623157e308}) {
        const std::string s = format_f64(v);
        const double back = std::stod(s);
        CHECK(std::memcmp(&back, &v, sizeof(double)) == 0);
    }
}

TEST_CASE("complex formatting uses the re+imj form") {
    CHECK(format_complex({1.5, -2.5}) == "1.5-2.5j");
    CHECK(format_complex({-1.0, 3.0}) == "-1+3j");
    CHECK(format_complex({0.0, 0.0}) == "0+0j");
}

TEST_CASE("fnv1a64 known vectors") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
    CHECK(format_hex64(0xcbf29ce484222325ull) == "cbf29ce484222325");
}

TEST_CASE("channel CSV round-trips bit-exactly") {
    Rng rng(601);
    const BlockChannelMatrix h = random_channel(rng, 2, 3);
    const auto path = temp_dir() / "roundtrip.csv";
    write_channel_csv(h, path);

    const BlockChannelMatrix back = read_channel_csv(path);
    REQUIRE(back.rows() == h.rows());
    REQUIRE(back.cols() == h.cols());
    CHECK(std::memcmp(back.data().data(), h.data().data(),
                      sizeof(Complex) * static_cast<std::size_t>(h.data().size())) == 0);
}

TEST_CASE("channel binary round-trips bit-exactly with the expected layout") {
    Rng rng(602);
    const BlockChannelMatrix h = random_channel(rng, 3, 2);
    const auto path = temp_dir() / "roundtrip.bin";
    write_channel_binary(h, path);

    // 16-byte header + rows*cols complex entries as f64 pairs
    const auto size = std::filesystem::file_size(path);
    CHECK(size == 16 + static_cast<std::uintmax_t>(h.rows()) * h.cols() * 16);

    std::ifstream in(path, std::ios::binary);
    char magic[4];
    in.read(magic, 4);
    CHECK(std::string(magic, 4) == "HMNF");
    std::uint32_t rows = 0, cols = 0;
    in.read(reinterpret_cast<char*>(&rows), 4);
    in.read(reinterpret_cast<char*>(&cols), 4);
    CHECK(rows == 9);
    CHECK(cols == 6);

    const BlockChannelMatrix back = read_channel_binary(path);
    REQUIRE(back.rows() == h.rows());
    CHECK(std::memcmp(back.data().data(), h.data().data(),
                      sizeof(Complex) * static_cast<std::size_t>(h.data().size())) == 0);
}

TEST_CASE("malformed inputs are rejected") {
    const auto dir = temp_dir();
    {
        std::ofstream bad(dir / "bad.bin", std::ios::binary);
        bad << "NOPE" << std::string(32, '\0');
    }
    CHECK_THROWS_AS(read_channel_binary(dir / "bad.bin"), Error);

    {
        std::ofstream bad(dir / "bad.csv");
        bad << "1+2j,notacomplex\n";
    }
    CHECK_THROWS_AS(read_channel_csv(dir / "bad.csv"), Error);

    CHECK_THROWS_AS(read_channel_binary(dir / "missing.bin"), Error);
}
