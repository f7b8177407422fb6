// SPDX-License-Identifier: Apache-2.0
//
// hmimo - near-field LoS channel models and capacity limits for
// holographic MIMO surfaces with arbitrary placements
//
// Licensed under the Apache License, Version 2.0;
// see http://www.apache.org/licenses/LICENSE-2.0

#include "hmimo/channel_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "hmimo/errors.hpp"
#include "hmimo/format.hpp"

namespace hmimo {

namespace {

constexpr char kMagic[4] = {'H', 'M', 'N', 'F'};

static_assert(std::endian::native == std::endian::little,
              "binary channel dump assumes a little-endian host");

void put_u32(std::ostream& out, std::uint32_t v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(v));
}

std::uint32_t get_u32(std::istream& in) {
    std::uint32_t v = 0;
    in.read(reinterpret_cast<char*>(&v), sizeof(v));
    return v;
}

Complex parse_complex(const std::string& token) {
    if (token.empty() || token.back() != 'j')
        throw Error("channel CSV: malformed entry '" + token + "'");
    // The imaginary part starts at the last sign that is not an exponent sign.
    std::size_t split = std::string::npos;
    for (std::size_t i = token.size() - 1; i > 0; --i) {
        const char c = token[i];
        if ((c == '+' || c == '-') && token[i - 1] != 'e' && token[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos)
        throw Error("channel CSV: malformed entry '" + token + "'");
    const double re = std::stod(token.substr(0, split));
    const double im = std::stod(token.substr(split, token.size() - 1 - split));
    return {re, im};
}

BlockChannelMatrix from_dimensions(Eigen::Index rows, Eigen::Index cols) {
    if (rows <= 0 || cols <= 0 || rows % 3 != 0 || cols % 3 != 0)
        throw Error("channel matrix dimensions must be positive multiples of 3, got " +
                    std::to_string(rows) + "x" + std::to_string(cols));
    return BlockChannelMatrix(static_cast<int>(rows / 3), static_cast<int>(cols / 3));
}

}  // namespace

void write_channel_csv(const BlockChannelMatrix& h, std::ostream& out) {
    for (Eigen::Index r = 0; r < h.rows(); ++r) {
        for (Eigen::Index c = 0; c < h.cols(); ++c) {
            if (c)
                out << ',';
            out << format_complex(h.data()(r, c));
        }
        out << '\n';
    }
}

void write_channel_csv(const BlockChannelMatrix& h, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);  // binary: no newline translation
    if (!out)
        throw Error("cannot open '" + path.string() + "' for writing");
    write_channel_csv(h, out);
    if (!out)
        throw Error("write failed for '" + path.string() + "'");
}

BlockChannelMatrix read_channel_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open '" + path.string() + "' for reading");

    std::vector<std::vector<Complex>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::vector<Complex> row;
        std::stringstream ss(line);
        std::string token;
        while (std::getline(ss, token, ','))
            row.push_back(parse_complex(token));
        if (!rows.empty() && row.size() != rows.front().size())
            throw Error("channel CSV: ragged rows in '" + path.string() + "'");
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw Error("channel CSV: no data in '" + path.string() + "'");

    BlockChannelMatrix h = from_dimensions(static_cast<Eigen::Index>(rows.size()),
                                           static_cast<Eigen::Index>(rows.front().size()));
    for (Eigen::Index r = 0; r < h.rows(); ++r)
        for (Eigen::Index c = 0; c < h.cols(); ++c)
            h.data()(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    return h;
}

void write_channel_binary(const BlockChannelMatrix& h, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot open '" + path.string() + "' for writing");

    out.write(kMagic, 4);
    put_u32(out, static_cast<std::uint32_t>(h.rows()));
    put_u32(out, static_cast<std::uint32_t>(h.cols()));
    put_u32(out, 0);  // reserved

    for (Eigen::Index r = 0; r < h.rows(); ++r)
        for (Eigen::Index c = 0; c < h.cols(); ++c) {
            const Complex v = h.data()(r, c);
            const double re = v.real(), im = v.imag();
            out.write(reinterpret_cast<const char*>(&re), sizeof(re));
            out.write(reinterpret_cast<const char*>(&im), sizeof(im));
        }
    if (!out)
        throw Error("write failed for '" + path.string() + "'");
}

BlockChannelMatrix read_channel_binary(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open '" + path.string() + "' for reading");

    char magic[4] = {};
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0)
        throw Error("'" + path.string() + "' is not a channel binary dump (bad magic)");
    const std::uint32_t rows = get_u32(in);
    const std::uint32_t cols = get_u32(in);
    (void)get_u32(in);  // reserved

    BlockChannelMatrix h = from_dimensions(rows, cols);
    for (Eigen::Index r = 0; r < h.rows(); ++r)
        for (Eigen::Index c = 0; c < h.cols(); ++c) {
            double re = 0.0, im = 0.0;
            in.read(reinterpret_cast<char*>(&re), sizeof(re));
            in.read(reinterpret_cast<char*>(&im), sizeof(im));
            h.data()(r, c) = Complex(re, im);
        }
    if (!in)
        throw Error("truncated channel binary dump '" + path.string() + "'");
    return h;
}

}  // namespace hmimo
