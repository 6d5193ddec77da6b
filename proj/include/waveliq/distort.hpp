// Copyright 2026 The waveliq authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>

#include "waveliq/image.hpp"

namespace waveliq {

enum class Distortion { GaussianNoise, GaussianBlur, ContrastScale };

const char* distortion_name(Distortion kind);

/// Apply a distortion at severity level 1..5. Deterministic for a fixed
/// seed. Severity ladders:
///   GaussianNoise: sigma in {2,4,8,16,32}/255, i.i.d. per sample, clamped
///   GaussianBlur:  sigma in {0.6,1.2,2.4,4.8,9.6}, kernel truncated at
///                  3*sigma, edge-clamp padding
///   ContrastScale: v -> 0.5 + k*(v-0.5), k in {0.8,0.6,0.45,0.3,0.15}
RasterImage synthesize(const RasterImage& ref, Distortion kind, int level, uint64_t seed);

} // namespace waveliq
