// Copyright 2026 The waveliq authors
// SPDX-License-Identifier: Apache-2.0

#include "waveliq/feature_io.hpp"

#include <cmath>
#include <cstring>
#include <fstream>

#include <zlib.h>

#include "waveliq/errors.hpp"

namespace waveliq {

namespace {

constexpr char kMagic[4] = {'W', 'L', 'F', 'S'};

void push_u32(std::vector<uint8_t>& out, uint32_t x) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<uint8_t>((x >> (8 * i)) & 0xff));
}

void push_u64(std::vector<uint8_t>& out, uint64_t x) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<uint8_t>((x >> (8 * i)) & 0xff));
}

uint32_t take_u32(const uint8_t* p) {
    uint32_t x = 0;
    for (int i = 3; i >= 0; --i) x = (x << 8) | p[i];
    return x;
}

uint64_t take_u64(const uint8_t* p) {
    uint64_t x = 0;
    for (int i = 7; i >= 0; --i) x = (x << 8) | p[i];
    return x;
}

uint32_t payload_crc(const uint8_t* data, size_t n) {
    return static_cast<uint32_t>(crc32(0L, data, static_cast<uInt>(n)));
}

// Doubles are stored as little-endian IEEE-754 bit patterns.
uint64_t double_bits(double v) {
    uint64_t bits;
    std::memcpy(&bits, &v, 8);
    return bits;
}

double bits_double(uint64_t bits) {
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
}

} // namespace

std::vector<uint8_t> features_to_bytes(const FeatureSet& fs) {
    if (fs.dim <= 0) {
        throw FormatError("feature export: dim must be positive");
    }
    for (double v : fs.data) {
        if (!std::isfinite(v)) {
            throw FormatError("feature export: non-finite coordinate");
        }
    }
    std::vector<uint8_t> out;
    out.reserve(20 + fs.data.size() * 8 + 4);
    out.insert(out.end(), kMagic, kMagic + 4);
    push_u32(out, kFeatureFileVersion);
    push_u32(out, static_cast<uint32_t>(fs.dim));
    push_u64(out, static_cast<uint64_t>(fs.count()));
    const size_t payload_start = out.size();
    for (double v : fs.data) {
        push_u64(out, double_bits(v));
    }
    push_u32(out, payload_crc(out.data() + payload_start, out.size() - payload_start));
    return out;
}

FeatureSet features_from_bytes(const std::vector<uint8_t>& bytes) {
    if (bytes.size() < 20 + 4) {
        throw FormatError("feature file: truncated header");
    }
    if (std::memcmp(bytes.data(), kMagic, 4) != 0) {
        throw FormatError("feature file: bad magic");
    }
    const uint32_t version = take_u32(&bytes[4]);
    if (version != kFeatureFileVersion) {
        throw FormatError("feature file: unsupported version " + std::to_string(version));
    }
    const uint32_t dim = take_u32(&bytes[8]);
    const uint64_t count = take_u64(&bytes[12]);
    if (dim == 0) {
        throw FormatError("feature file: zero dim");
    }
    const uint64_t values = static_cast<uint64_t>(dim) * count;
    const uint64_t expected = 20 + values * 8 + 4;
    if (bytes.size() != expected) {
        throw FormatError("feature file: expected " + std::to_string(expected) + " bytes, got " +
                          std::to_string(bytes.size()));
    }
    const uint32_t stored_crc = take_u32(&bytes[20 + values * 8]);
    const uint32_t actual_crc = payload_crc(bytes.data() + 20, values * 8);
    if (stored_crc != actual_crc) {
        throw FormatError("feature file: payload CRC mismatch");
    }

    FeatureSet fs;
    fs.dim = static_cast<int>(dim);
    fs.data.resize(values);
    for (uint64_t i = 0; i < values; ++i) {
        fs.data[i] = bits_double(take_u64(&bytes[20 + i * 8]));
        if (!std::isfinite(fs.data[i])) {
            throw FormatError("feature file: non-finite value at index " + std::to_string(i));
        }
    }
    return fs;
}

void save_feature_file(const FeatureSet& fs, const std::string& path) {
    const auto bytes = features_to_bytes(fs);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open feature file for writing: " + path);
    }
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out.good()) {
        throw IoError("failed writing feature file: " + path);
    }
}

FeatureSet load_feature_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open feature file: " + path);
    }
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                               std::istreambuf_iterator<char>());
    FeatureSet fs = features_from_bytes(bytes);
    fs.origin = path;
    return fs;
}

} // namespace waveliq
