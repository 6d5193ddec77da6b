// Copyright 2026 The waveliq authors
// SPDX-License-Identifier: Apache-2.0

#include "waveliq/refine.hpp"

#include <algorithm>
#include <cmath>

#include "waveliq/errors.hpp"

namespace waveliq {

namespace {

void validate_config(const WaveletPyramid& pyr, const RefineConfig& cfg) {
    if (cfg.low_weight < 0.0 || cfg.high_weight < 0.0) {
        throw ConfigMismatch("refine: weights must be non-negative");
    }
    if (cfg.low_weight + cfg.high_weight <= 0.0) {
        throw ConfigMismatch("refine: low_weight + high_weight must be positive");
    }
    if (cfg.levels_used.empty()) {
        throw ConfigMismatch("refine: levels_used must not be empty");
    }
    const int depth = static_cast<int>(pyr.levels.size());
    for (int lvl : cfg.levels_used) {
        if (lvl < 1 || lvl > depth) {
            throw ConfigMismatch("refine: level " + std::to_string(lvl) +
                                 " outside pyramid depth " + std::to_string(depth));
        }
    }
}

// Sample a coefficient grid at a site of the canonical quad grid by
// proportional index mapping; empty grids contribute zero.
double sample(const Grid& g, int i, int j, int quad_rows, int quad_cols) {
    if (g.empty()) {
        return 0.0;
    }
    const int gi = static_cast<int>((static_cast<long long>(i) * g.rows) / quad_rows);
    const int gj = static_cast<int>((static_cast<long long>(j) * g.cols) / quad_cols);
    return g.at(gi, gj);
}

// 2x2 mean of absolute values, pooling a subband onto the quad grid.
double pool_abs(const Grid& g, int i, int j) {
    return (std::fabs(g.at(2 * i, 2 * j)) + std::fabs(g.at(2 * i, 2 * j + 1)) +
            std::fabs(g.at(2 * i + 1, 2 * j)) + std::fabs(g.at(2 * i + 1, 2 * j + 1))) /
           4.0;
}

} // namespace

RefineConfig RefineConfig::defaults(int levels) {
    RefineConfig cfg;
    for (int lvl = 1; lvl <= levels; ++lvl) {
        cfg.levels_used.push_back(lvl);
    }
    return cfg;
}

size_t feature_count(const WaveletPyramid& pyr, const RefineConfig& cfg) {
    validate_config(pyr, cfg);
    size_t total = 0;
    for (int lvl : cfg.levels_used) {
        const SubbandSet& sb = pyr.levels[static_cast<size_t>(lvl) - 1].subbands;
        total += static_cast<size_t>(sb.s_ll.rows / 2) * static_cast<size_t>(sb.s_ll.cols / 2);
    }
    return total;
}

FeatureSet refine(const WaveletPyramid& pyr, const RefineConfig& cfg) {
    validate_config(pyr, cfg);

    FeatureSet out;
    out.dim = kFeatureDim;
    out.data.reserve(feature_count(pyr, cfg) * kFeatureDim);
    out.origin = "levels=";
    for (size_t i = 0; i < cfg.levels_used.size(); ++i) {
        if (i) out.origin += '+';
        out.origin += std::to_string(cfg.levels_used[i]);
    }

    const double lw = cfg.low_weight;
    const double hw = cfg.high_weight;

    for (int lvl : cfg.levels_used) {
        const PyramidLevel& level = pyr.levels[static_cast<size_t>(lvl) - 1];
        const CoeffQuad& ll_quad = level.quads[0];
        const Grid& s_lh = level.subbands.s_lh;
        const Grid& s_hl = level.subbands.s_hl;
        const Grid& s_hh = level.subbands.s_hh;

        const int quad_rows = level.subbands.s_ll.rows / 2;
        const int quad_cols = level.subbands.s_ll.cols / 2;

        for (int i = 0; i < quad_rows; ++i) {
            for (int j = 0; j < quad_cols; ++j) {
                double a = sample(ll_quad.c_aa, i, j, quad_rows, quad_cols);
                double ad = sample(ll_quad.c_ad, i, j, quad_rows, quad_cols);
                double da = sample(ll_quad.c_da, i, j, quad_rows, quad_cols);
                double dd = sample(ll_quad.c_dd, i, j, quad_rows, quad_cols);
                if (cfg.magnitude_only) {
                    a = std::fabs(a);
                    ad = std::fabs(ad);
                    da = std::fabs(da);
                    dd = std::fabs(dd);
                }
                out.data.push_back(lw * a);
                out.data.push_back(hw * ad);
                out.data.push_back(hw * da);
                out.data.push_back(hw * dd);
                out.data.push_back(hw * pool_abs(s_lh, i, j));
                out.data.push_back(hw * pool_abs(s_hl, i, j));
                out.data.push_back(hw * pool_abs(s_hh, i, j));
                out.data.push_back(static_cast<double>(lvl));
            }
        }
    }
    return out;
}

} // namespace waveliq
