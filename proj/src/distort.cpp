// Copyright 2026 The waveliq authors
// SPDX-License-Identifier: Apache-2.0

#include "waveliq/distort.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "waveliq/errors.hpp"

namespace waveliq {

namespace {

constexpr double kPi = 3.14159265358979323846;

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

// Box-Muller over mt19937_64 keeps the byte stream independent of the
// standard library's normal_distribution implementation.
class GaussianSource {
public:
    explicit GaussianSource(uint64_t seed) : rng_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do {
            u1 = uniform_();
        } while (u1 <= 0.0);
        const double u2 = uniform_();
        const double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(2.0 * kPi * u2);
        have_spare_ = true;
        return r * std::cos(2.0 * kPi * u2);
    }

private:
    double uniform_() {
        // 53-bit uniform in [0,1)
        return static_cast<double>(rng_() >> 11) * (1.0 / 9007199254740992.0);
    }

    std::mt19937_64 rng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

RasterImage add_noise(const RasterImage& ref, double sigma, uint64_t seed) {
    RasterImage out = ref;
    GaussianSource gauss(seed);
    for (double& v : out.samples) {
        v = clamp01(v + sigma * gauss.next());
    }
    return out;
}

RasterImage blur(const RasterImage& ref, double sigma) {
    const int radius = static_cast<int>(std::ceil(3.0 * sigma));
    std::vector<double> kernel(static_cast<size_t>(2 * radius + 1));
    double sum = 0.0;
    for (int k = -radius; k <= radius; ++k) {
        kernel[static_cast<size_t>(k + radius)] = std::exp(-(k * k) / (2.0 * sigma * sigma));
        sum += kernel[static_cast<size_t>(k + radius)];
    }
    for (double& w : kernel) w /= sum;

    const int w = ref.width, h = ref.height, ch = ref.channels;
    RasterImage tmp(w, h, ch);
    // horizontal pass, edge-clamped
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            for (int c = 0; c < ch; ++c) {
                double acc = 0.0;
                for (int k = -radius; k <= radius; ++k) {
                    const int xs = std::clamp(x + k, 0, w - 1);
                    acc += kernel[static_cast<size_t>(k + radius)] * ref.at(xs, y, c);
                }
                tmp.at(x, y, c) = acc;
            }
        }
    }
    RasterImage out(w, h, ch);
    // vertical pass
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            for (int c = 0; c < ch; ++c) {
                double acc = 0.0;
                for (int k = -radius; k <= radius; ++k) {
                    const int ys = std::clamp(y + k, 0, h - 1);
                    acc += kernel[static_cast<size_t>(k + radius)] * tmp.at(x, ys, c);
                }
                out.at(x, y, c) = clamp01(acc);
            }
        }
    }
    return out;
}

RasterImage contrast(const RasterImage& ref, double k) {
    RasterImage out = ref;
    for (double& v : out.samples) {
        v = 0.5 + k * (v - 0.5);
    }
    return out;
}

} // namespace

const char* distortion_name(Distortion kind) {
    switch (kind) {
    case Distortion::GaussianNoise: return "noise";
    case Distortion::GaussianBlur: return "blur";
    case Distortion::ContrastScale: return "contrast";
    }
    return "?";
}

RasterImage synthesize(const RasterImage& ref, Distortion kind, int level, uint64_t seed) {
    if (level < 1 || level > 5) {
        throw ConfigMismatch("synthesize: level must be in 1..5, got " + std::to_string(level));
    }
    const int idx = level - 1;
    switch (kind) {
    case Distortion::GaussianNoise: {
        static constexpr double kSigma[5] = {2.0 / 255, 4.0 / 255, 8.0 / 255, 16.0 / 255,
                                             32.0 / 255};
        return add_noise(ref, kSigma[idx], seed);
    }
    case Distortion::GaussianBlur: {
        static constexpr double kSigma[5] = {0.6, 1.2, 2.4, 4.8, 9.6};
        return blur(ref, kSigma[idx]);
    }
    case Distortion::ContrastScale: {
        static constexpr double kScale[5] = {0.8, 0.6, 0.45, 0.3, 0.15};
        return contrast(ref, kScale[idx]);
    }
    }
    throw ConfigMismatch("synthesize: unknown distortion kind");
}

} // namespace waveliq
