// Copyright 2026 The waveliq authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "waveliq/image.hpp"

namespace waveliq {

/// Normalized per-channel bin counts; each channel's mass sums to 1.
struct ColorHistogram {
    int bins_per_channel = 0;
    int channels = 0;
    std::vector<double> mass; // channels x bins, row-major per channel

    double at(int channel, int bin) const {
        return mass[static_cast<size_t>(channel) * bins_per_channel + bin];
    }
};

/// Per-channel histogram of sample intensities. Sample v lands in bin
/// min(floor(v * bins), bins - 1), so v = 1.0 goes to the last bin.
/// Throws BadBinCount for bins < 2.
ColorHistogram histogram(const RasterImage& img, int bins = 64);

/// Hellinger distance weight: per channel (1/sqrt(2)) * ||sqrt(hr) - sqrt(hd)||_2,
/// averaged across channels. Always in [0,1]; 0 iff the histograms match.
/// Throws ShapeMismatch when bin counts or channel counts differ.
double hellinger_weight(const ColorHistogram& hr, const ColorHistogram& hd);

} // namespace waveliq
