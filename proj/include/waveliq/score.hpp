// Copyright 2026 The waveliq authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "waveliq/chroma.hpp"
#include "waveliq/image.hpp"
#include "waveliq/refine.hpp"
#include "waveliq/simdist.hpp"
#include "waveliq/wavelet.hpp"

namespace waveliq {

/// Which signals feed the final score.
enum class ScoreMode { DwtOnly, ChOnly, DwtPlusCh };

struct ScoreConfig {
    ScoreMode mode = ScoreMode::DwtPlusCh;
    RefineConfig refine;        // levels_used empty means "all levels"
    GroundMetric metric = GroundMetric::L2;
    int bins = 64;
    int levels = 2;
    double beta = 1.0;          // in [0,1]; strength of the histogram weight
    Eq9Mode eq9 = Eq9Mode::Corrected;

    static ScoreConfig defaults() { return ScoreConfig{}; }

    /// Stable, human-readable identity of every knob that affects scores.
    std::string fingerprint() const;
};

struct LevelDiagnostics {
    int level = 0;
    size_t feature_count = 0;
    double forward_d = 0.0;  // directed ref -> dist
    double backward_d = 0.0; // directed dist -> ref
};

struct QualityReport {
    double q_p = 0.0;                     // final score in [0,1]
    double hausdorff_d = 0.0;
    std::optional<double> coupled_d;      // aligned companion statistic
    double ch_weight = 0.0;               // Hellinger histogram weight
    std::vector<LevelDiagnostics> per_level;
};

/// Score one pair. The wavelet path runs on luma; the histogram weight on
/// the full color image. q_p per mode:
///   DwtOnly:   s
///   ChOnly:    1 - c
///   DwtPlusCh: s * (1 - beta * c)
/// with s = 1/(1 + hausdorff) and c the Hellinger weight.
QualityReport evaluate_pair(const RasterImage& ref, const RasterImage& dist,
                            const ScoreConfig& cfg);

struct PairOutcome {
    QualityReport report;
    std::string error; // empty on success
    bool ok() const { return error.empty(); }
};

/// Score a batch. Output order matches input order and is numerically
/// identical to a sequential map regardless of `jobs`. Per-pair failures
/// are collected, not fatal. jobs <= 0 selects the hardware concurrency.
std::vector<PairOutcome> score_batch(
    const std::vector<std::pair<const RasterImage*, const RasterImage*>>& pairs,
    const ScoreConfig& cfg, int jobs = 0);

} // namespace waveliq
