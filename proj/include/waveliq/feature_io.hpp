// Copyright 2026 The waveliq authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "waveliq/refine.hpp"

namespace waveliq {

// Feature tensor file, little-endian:
//   magic "WLFS" | version u32 = 1 | dim u32 | count u64
//   | payload count*dim float64 | crc32(payload) u32

constexpr uint32_t kFeatureFileVersion = 1;

/// Serialize a feature set. Throws FormatError on non-finite coordinates.
std::vector<uint8_t> features_to_bytes(const FeatureSet& fs);

/// Parse a feature tensor payload. Throws FormatError on bad magic,
/// version, truncation, trailing bytes, CRC mismatch, or non-finite values.
FeatureSet features_from_bytes(const std::vector<uint8_t>& bytes);

void save_feature_file(const FeatureSet& fs, const std::string& path);

/// Load a feature tensor file; origin is set to the path.
FeatureSet load_feature_file(const std::string& path);

} // namespace waveliq
