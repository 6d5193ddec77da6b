// Copyright 2026 The waveliq authors
// SPDX-License-Identifier: Apache-2.0

#include "waveliq/image.hpp"

#include <fstream>
#include <sstream>

#include "waveliq/errors.hpp"

namespace waveliq {

LumaImage to_luma(const RasterImage& img) {
    if (img.channels != 1 && img.channels != 3) {
        throw UnsupportedChannels("to_luma: expected 1 or 3 channels, got " +
                                  std::to_string(img.channels));
    }
    LumaImage out(img.width, img.height);
    if (img.channels == 1) {
        out.samples = img.samples;
        return out;
    }
    const double* src = img.samples.data();
    for (size_t i = 0; i < out.samples.size(); ++i) {
        const double r = src[3 * i];
        const double g = src[3 * i + 1];
        const double b = src[3 * i + 2];
        out.samples[i] = 0.299 * r + 0.587 * g + 0.114 * b;
    }
    return out;
}

void check_pair(const RasterImage& ref, const RasterImage& dist) {
    if (ref.width != dist.width || ref.height != dist.height ||
        ref.channels != dist.channels) {
        std::ostringstream msg;
        msg << "geometry mismatch: reference is " << ref.width << "x" << ref.height
            << "x" << ref.channels << ", distorted is " << dist.width << "x"
            << dist.height << "x" << dist.channels;
        throw GeometryMismatch(msg.str());
    }
}

RasterImage load_image(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open image file: " + path);
    }
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                               std::istreambuf_iterator<char>());
    if (!in.good() && !in.eof()) {
        throw IoError("failed reading image file: " + path);
    }
    return decode_image(bytes);
}

void save_image(const RasterImage& img, const std::string& path) {
    ImageFormat fmt = ImageFormat::Png;
    const auto dot = path.find_last_of('.');
    if (dot != std::string::npos) {
        std::string ext = path.substr(dot);
        for (auto& c : ext) c = static_cast<char>(std::tolower(c));
        if (ext == ".bmp") fmt = ImageFormat::Bmp;
    }
    const std::vector<uint8_t> bytes = encode_image(img, fmt);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open output file: " + path);
    }
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out.good()) {
        throw IoError("failed writing image file: " + path);
    }
}

} // namespace waveliq
