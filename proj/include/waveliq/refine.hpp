// Copyright 2026 The waveliq authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "waveliq/wavelet.hpp"

namespace waveliq {

/// Controls how pyramid coefficients are folded into feature vectors.
struct RefineConfig {
    double low_weight = 1.0;        // weight on the approximation lineage
    double high_weight = 1.0;       // weight on the detail lineage
    std::vector<int> levels_used;   // 1-based pyramid levels, non-empty
    bool magnitude_only = true;     // take |coefficient| before weighting

    /// Weights (1,1), magnitude on, all levels 1..levels selected.
    static RefineConfig defaults(int levels);
};

/// Finite set of equal-length feature vectors, stored row-major.
struct FeatureSet {
    int dim = 0;
    std::vector<double> data; // count() x dim
    std::string origin;       // free-form provenance tag

    size_t count() const { return dim == 0 ? 0 : data.size() / static_cast<size_t>(dim); }
    const double* point(size_t i) const { return data.data() + i * static_cast<size_t>(dim); }
    double* point(size_t i) { return data.data() + i * static_cast<size_t>(dim); }
};

/// Fold a pyramid into one feature vector per spatial site of each selected
/// level's quad grid. Coordinate layout per vector:
///   [lw*a, hw*c_ad, hw*c_da, hw*c_dd, hw*p_lh, hw*p_hl, hw*p_hh, level]
/// where a comes from the LL-subband quad's c_aa (sampled onto the quad
/// grid), c_* are the LL quad's detail components, and p_* are the detail
/// subbands pooled to the quad grid by 2x2 mean of absolute values. The
/// final coordinate tags the pyramid level so cross-level points stay
/// distinguishable. Throws ConfigMismatch on an invalid config.
FeatureSet refine(const WaveletPyramid& pyr, const RefineConfig& cfg);

/// Number of vectors refine() would emit, computed from shapes alone.
size_t feature_count(const WaveletPyramid& pyr, const RefineConfig& cfg);

/// Vector length refine() emits (coefficient coordinates plus level tag).
constexpr int kFeatureDim = 8;

} // namespace waveliq
