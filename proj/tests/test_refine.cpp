// Copyright 2026 The waveliq authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "waveliq/errors.hpp"
#include "waveliq/refine.hpp"

using namespace waveliq;

namespace {

// Direct reimplementation of the pooling/concatenation rule on top of the
// naive decomposition, for one level with weights (lw, hw).
std::vector<std::vector<double>> refine_oracle(const oracle::NaiveLevel& level, int lvl,
                                               double lw, double hw, bool magnitude) {
    const Grid& s_ll = level.s[0];
    const int qr = s_ll.rows / 2;
    const int qc = s_ll.cols / 2;

    auto sample = [&](const Grid& g, int i, int j) {
        if (g.empty()) return 0.0;
        return g.at(static_cast<int>(static_cast<long long>(i) * g.rows / qr),
                    static_cast<int>(static_cast<long long>(j) * g.cols / qc));
    };
    auto pool = [&](const Grid& g, int i, int j) {
        return (std::fabs(g.at(2 * i, 2 * j)) + std::fabs(g.at(2 * i, 2 * j + 1)) +
                std::fabs(g.at(2 * i + 1, 2 * j)) + std::fabs(g.at(2 * i + 1, 2 * j + 1))) /
               4.0;
    };
    auto mag = [&](double v) { return magnitude ? std::fabs(v) : v; };

    std::vector<std::vector<double>> out;
    for (int i = 0; i < qr; ++i) {
        for (int j = 0; j < qc; ++j) {
            out.push_back({lw * mag(sample(level.c_aa[0], i, j)),
                           hw * mag(sample(level.c_ad[0], i, j)),
                           hw * mag(sample(level.c_da[0], i, j)),
                           hw * mag(sample(level.c_dd[0], i, j)),
                           hw * pool(level.s[1], i, j), hw * pool(level.s[2], i, j),
                           hw * pool(level.s[3], i, j), static_cast<double>(lvl)});
        }
    }
    return out;
}

} // namespace

TEST_CASE("refine: zero image gives all-zero vectors except the level tag") {
    const LumaImage img(16, 16, 0.0);
    const WaveletPyramid pyr = decompose(img, default_filters(), 2);
    const FeatureSet fs = refine(pyr, RefineConfig::defaults(2));
    REQUIRE(fs.count() > 0);
    for (size_t i = 0; i < fs.count(); ++i) {
        const double* p = fs.point(i);
        for (int k = 0; k + 1 < fs.dim; ++k) {
            CHECK(p[k] == 0.0);
        }
        CHECK((p[fs.dim - 1] == 1.0 || p[fs.dim - 1] == 2.0));
    }
}

TEST_CASE("refine: deterministic, bit-exact across calls") {
    std::mt19937 rng(77);
    const LumaImage img = oracle::random_luma(rng, 20, 20);
    const WaveletPyramid pyr = decompose(img, default_filters(), 2);
    const RefineConfig cfg = RefineConfig::defaults(2);
    const FeatureSet a = refine(pyr, cfg);
    const FeatureSet b = refine(pyr, cfg);
    CHECK(a.dim == b.dim);
    CHECK(a.data == b.data);
}

TEST_CASE("refine: 8x8 image matches the direct reimplementation") {
    std::mt19937 rng(123);
    const LumaImage img = oracle::random_luma(rng, 8, 8);
    const FilterBank bank = default_filters();

    RefineConfig cfg;
    cfg.levels_used = {1};
    const FeatureSet fs = refine(decompose(img, bank, 1), cfg);

    const auto naive = oracle::decompose_naive(img.as_grid(), bank, 1);
    const auto expected = refine_oracle(naive[0], 1, cfg.low_weight, cfg.high_weight,
                                        cfg.magnitude_only);
    REQUIRE(fs.count() == expected.size());
    REQUIRE(fs.dim == static_cast<int>(expected[0].size()));
    for (size_t i = 0; i < expected.size(); ++i) {
        for (int k = 0; k < fs.dim; ++k) {
            CHECK(fs.point(i)[k] == expected[i][static_cast<size_t>(k)]);
        }
    }
}

TEST_CASE("feature_count matches refine output size") {
    std::mt19937 rng(9);
    const LumaImage img = oracle::random_luma(rng, 64, 64);
    const WaveletPyramid pyr = decompose(img, default_filters(), 2);

    RefineConfig one;
    one.levels_used = {1};
    // 64x64 -> 63x63 subbands -> 31x31 quad sites on level 1
    CHECK(feature_count(pyr, one) == 31u * 31u);
    CHECK(refine(pyr, one).count() == feature_count(pyr, one));

    RefineConfig two = RefineConfig::defaults(2);
    RefineConfig second;
    second.levels_used = {2};
    CHECK(feature_count(pyr, two) == feature_count(pyr, one) + feature_count(pyr, second));
    CHECK(refine(pyr, two).count() == feature_count(pyr, two));
}

TEST_CASE("refine: config validation") {
    const LumaImage img(16, 16, 0.5);
    const WaveletPyramid pyr = decompose(img, default_filters(), 2);

    RefineConfig empty;
    empty.levels_used = {};
    CHECK_THROWS_AS(feature_count(pyr, empty), ConfigMismatch);
    CHECK_THROWS_AS(refine(pyr, empty), ConfigMismatch);

    RefineConfig deep;
    deep.levels_used = {3};
    CHECK_THROWS_AS(refine(pyr, deep), ConfigMismatch);

    RefineConfig zeroed = RefineConfig::defaults(2);
    zeroed.low_weight = 0.0;
    zeroed.high_weight = 0.0;
    CHECK_THROWS_AS(refine(pyr, zeroed), ConfigMismatch);

    RefineConfig negative = RefineConfig::defaults(2);
    negative.low_weight = -1.0;
    CHECK_THROWS_AS(refine(pyr, negative), ConfigMismatch);
}

TEST_CASE("refine: scaling covariance with magnitude on") {
    std::mt19937 rng(31);
    const LumaImage img = oracle::random_luma(rng, 24, 24);
    LumaImage scaled = img;
    const double a = 0.35;
    for (double& v : scaled.samples) v *= a;

    const RefineConfig cfg = RefineConfig::defaults(2);
    const FeatureSet f1 = refine(decompose(img, default_filters(), 2), cfg);
    const FeatureSet f2 = refine(decompose(scaled, default_filters(), 2), cfg);
    REQUIRE(f1.count() == f2.count());
    for (size_t i = 0; i < f1.count(); ++i) {
        for (int k = 0; k + 1 < f1.dim; ++k) {
            CHECK(f2.point(i)[k] == doctest::Approx(a * f1.point(i)[k]).epsilon(1e-12));
        }
        CHECK(f2.point(i)[f1.dim - 1] == f1.point(i)[f1.dim - 1]); // level tag untouched
    }
}

TEST_CASE("refine: zero low weight zeroes every approximation coordinate") {
    std::mt19937 rng(13);
    const LumaImage img = oracle::random_luma(rng, 20, 20);
    RefineConfig cfg = RefineConfig::defaults(2);
    cfg.low_weight = 0.0;
    const FeatureSet fs = refine(decompose(img, default_filters(), 2), cfg);
    for (size_t i = 0; i < fs.count(); ++i) {
        CHECK(fs.point(i)[0] == 0.0);
    }
}

TEST_CASE("refine: all coordinates finite") {
    std::mt19937 rng(99);
    const LumaImage img = oracle::random_luma(rng, 33, 17);
    const FeatureSet fs = refine(decompose(img, default_filters(), 2), RefineConfig::defaults(2));
    REQUIRE(fs.count() > 0);
    for (double v : fs.data) {
        CHECK(std::isfinite(v));
    }
}
