// Copyright 2026 The waveliq authors
// SPDX-License-Identifier: Apache-2.0

#include "waveliq/chroma.hpp"

#include <algorithm>
#include <cmath>

#include "waveliq/errors.hpp"

namespace waveliq {

ColorHistogram histogram(const RasterImage& img, int bins) {
    if (bins < 2) {
        throw BadBinCount("histogram: need at least 2 bins, got " + std::to_string(bins));
    }
    if (img.pixel_count() == 0) {
        throw BadBinCount("histogram: empty image");
    }
    ColorHistogram h;
    h.bins_per_channel = bins;
    h.channels = img.channels;
    h.mass.assign(static_cast<size_t>(bins) * img.channels, 0.0);

    const size_t pixels = img.pixel_count();
    for (size_t p = 0; p < pixels; ++p) {
        for (int c = 0; c < img.channels; ++c) {
            const double v = img.samples[p * img.channels + c];
            int bin = static_cast<int>(v * bins);
            bin = std::min(bin, bins - 1);
            bin = std::max(bin, 0);
            h.mass[static_cast<size_t>(c) * bins + bin] += 1.0;
        }
    }
    const double norm = 1.0 / static_cast<double>(pixels);
    for (double& m : h.mass) {
        m *= norm;
    }
    return h;
}

double hellinger_weight(const ColorHistogram& hr, const ColorHistogram& hd) {
    if (hr.bins_per_channel != hd.bins_per_channel || hr.channels != hd.channels) {
        throw ShapeMismatch("hellinger_weight: histogram shapes differ (" +
                            std::to_string(hr.channels) + "x" + std::to_string(hr.bins_per_channel) +
                            " vs " + std::to_string(hd.channels) + "x" +
                            std::to_string(hd.bins_per_channel) + ")");
    }
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    double total = 0.0;
    for (int c = 0; c < hr.channels; ++c) {
        double sq = 0.0;
        for (int b = 0; b < hr.bins_per_channel; ++b) {
            const double d = std::sqrt(hr.at(c, b)) - std::sqrt(hd.at(c, b));
            sq += d * d;
        }
        total += inv_sqrt2 * std::sqrt(sq);
    }
    return total / static_cast<double>(hr.channels);
}

} // namespace waveliq
