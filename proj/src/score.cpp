// Copyright 2026 The waveliq authors
// SPDX-License-Identifier: Apache-2.0

#include "waveliq/score.hpp"

#include <atomic>
#include <sstream>
#include <thread>

#include "waveliq/errors.hpp"

namespace waveliq {

namespace {

RefineConfig effective_refine(const ScoreConfig& cfg) {
    RefineConfig rc = cfg.refine;
    if (rc.levels_used.empty()) {
        for (int lvl = 1; lvl <= cfg.levels; ++lvl) {
            rc.levels_used.push_back(lvl);
        }
    }
    return rc;
}

void validate_config(const ScoreConfig& cfg) {
    if (cfg.beta < 0.0 || cfg.beta > 1.0) {
        throw ConfigMismatch("score: beta must lie in [0,1]");
    }
    if (cfg.levels < 1) {
        throw ConfigMismatch("score: levels must be >= 1");
    }
}

// Subset of a feature set whose level tag (last coordinate) matches.
FeatureSet level_slice(const FeatureSet& fs, int level) {
    FeatureSet out;
    out.dim = fs.dim;
    const double tag = static_cast<double>(level);
    for (size_t i = 0; i < fs.count(); ++i) {
        const double* p = fs.point(i);
        if (p[fs.dim - 1] == tag) {
            out.data.insert(out.data.end(), p, p + fs.dim);
        }
    }
    return out;
}

} // namespace

std::string ScoreConfig::fingerprint() const {
    std::ostringstream out;
    out << "mode=";
    switch (mode) {
    case ScoreMode::DwtOnly: out << "dwt"; break;
    case ScoreMode::ChOnly: out << "ch"; break;
    case ScoreMode::DwtPlusCh: out << "dwt+ch"; break;
    }
    const RefineConfig rc = effective_refine(*this);
    out << ";levels=" << levels;
    out << ";levels_used=";
    for (size_t i = 0; i < rc.levels_used.size(); ++i) {
        if (i) out << '+';
        out << rc.levels_used[i];
    }
    out << ";bins=" << bins;
    out << ";metric=" << (metric == GroundMetric::L2 ? "l2" : "l1");
    out << ";beta=" << beta;
    out << ";low=" << rc.low_weight << ";high=" << rc.high_weight;
    out << ";mag=" << (rc.magnitude_only ? 1 : 0);
    out << ";eq9=" << (eq9 == Eq9Mode::Corrected ? "corrected" : "verbatim");
    return out.str();
}

QualityReport evaluate_pair(const RasterImage& ref, const RasterImage& dist,
                            const ScoreConfig& cfg) {
    validate_config(cfg);
    check_pair(ref, dist);

    const RefineConfig rc = effective_refine(cfg);
    const FilterBank bank = default_filters();

    const WaveletPyramid pyr_ref = decompose(to_luma(ref), bank, cfg.levels, cfg.eq9);
    const WaveletPyramid pyr_dist = decompose(to_luma(dist), bank, cfg.levels, cfg.eq9);
    const FeatureSet fr = refine(pyr_ref, rc);
    const FeatureSet fd = refine(pyr_dist, rc);

    QualityReport rep;
    rep.hausdorff_d = hausdorff(fr, fd, cfg.metric);
    if (fr.count() == fd.count()) {
        rep.coupled_d = coupled_distance(fr, fd, Coupling::Aligned, cfg.metric);
    }
    rep.ch_weight = hellinger_weight(histogram(ref, cfg.bins), histogram(dist, cfg.bins));

    const double s = map_similarity(rep.hausdorff_d);
    switch (cfg.mode) {
    case ScoreMode::DwtOnly:
        rep.q_p = s;
        break;
    case ScoreMode::ChOnly:
        rep.q_p = 1.0 - rep.ch_weight;
        break;
    case ScoreMode::DwtPlusCh:
        rep.q_p = s * (1.0 - cfg.beta * rep.ch_weight);
        break;
    }

    for (int lvl : rc.levels_used) {
        const FeatureSet sr = level_slice(fr, lvl);
        const FeatureSet sd = level_slice(fd, lvl);
        LevelDiagnostics diag;
        diag.level = lvl;
        diag.feature_count = sr.count();
        if (sr.count() > 0 && sd.count() > 0) {
            diag.forward_d = directed_hausdorff(sr, sd, cfg.metric);
            diag.backward_d = directed_hausdorff(sd, sr, cfg.metric);
        }
        rep.per_level.push_back(diag);
    }
    return rep;
}

std::vector<PairOutcome> score_batch(
    const std::vector<std::pair<const RasterImage*, const RasterImage*>>& pairs,
    const ScoreConfig& cfg, int jobs) {
    std::vector<PairOutcome> results(pairs.size());
    if (pairs.empty()) {
        return results;
    }
    unsigned workers = jobs > 0 ? static_cast<unsigned>(jobs) : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    workers = std::min<unsigned>(workers, static_cast<unsigned>(pairs.size()));

    std::atomic<size_t> next{0};
    auto run = [&]() {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= pairs.size()) break;
            try {
                results[i].report = evaluate_pair(*pairs[i].first, *pairs[i].second, cfg);
            } catch (const std::exception& e) {
                results[i].error = e.what();
            }
        }
    };

    if (workers == 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(run);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    return results;
}

} // namespace waveliq
