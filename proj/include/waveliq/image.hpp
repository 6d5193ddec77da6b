// Copyright 2026 The waveliq authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "waveliq/grid.hpp"

namespace waveliq {

/// Decoded pixel grid. Samples are row-major, channel-interleaved reals
/// in [0,1]; an 8-bit value v maps to v/255, a 16-bit value to v/65535.
struct RasterImage {
    int width = 0;
    int height = 0;
    int channels = 0; // 1 (gray) or 3 (RGB)
    std::vector<double> samples;

    RasterImage() = default;
    RasterImage(int w, int h, int c, double fill = 0.0)
        : width(w), height(h), channels(c),
          samples(static_cast<size_t>(w) * h * c, fill) {}

    double at(int x, int y, int c) const {
        return samples[(static_cast<size_t>(y) * width + x) * channels + c];
    }
    double& at(int x, int y, int c) {
        return samples[(static_cast<size_t>(y) * width + x) * channels + c];
    }

    size_t pixel_count() const { return static_cast<size_t>(width) * height; }
};

/// Single-channel image feeding the wavelet path.
struct LumaImage {
    int width = 0;
    int height = 0;
    std::vector<double> samples; // row-major, [0,1]

    LumaImage() = default;
    LumaImage(int w, int h, double fill = 0.0)
        : width(w), height(h), samples(static_cast<size_t>(w) * h, fill) {}

    double at(int x, int y) const { return samples[static_cast<size_t>(y) * width + x]; }
    double& at(int x, int y) { return samples[static_cast<size_t>(y) * width + x]; }

    Grid as_grid() const {
        Grid g(height, width);
        g.data = samples;
        return g;
    }
};

enum class ImageFormat { Png, Bmp, Jpeg };

/// Decode a PNG, BMP, or baseline JPEG payload. Alpha is dropped with a
/// warning; CMYK and other exotic layouts are rejected.
/// Throws DecodeError or UnsupportedChannels.
RasterImage decode_image(const std::vector<uint8_t>& bytes);

/// Encode to PNG (any channels) or BMP (8-bit). Throws DecodeError on
/// unsupported channel counts. Samples are quantized to 8 bits.
std::vector<uint8_t> encode_image(const RasterImage& img, ImageFormat fmt);

/// Read + decode. Format is sniffed from the payload, not the extension.
RasterImage load_image(const std::string& path);

/// Encode + write. Format chosen by extension (.png/.bmp, default PNG).
void save_image(const RasterImage& img, const std::string& path);

/// Gray passes through; RGB converts with BT.601 weights
/// Y = 0.299 R + 0.587 G + 0.114 B.
LumaImage to_luma(const RasterImage& img);

/// Ensure the two images have identical width, height, and channel count.
/// No resizing is ever performed. Throws GeometryMismatch with both shapes.
void check_pair(const RasterImage& ref, const RasterImage& dist);

} // namespace waveliq
