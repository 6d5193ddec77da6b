// Copyright 2026 The waveliq authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <random>

#include "oracles.hpp"
#include "waveliq/errors.hpp"
#include "waveliq/feature_io.hpp"
#include "waveliq/simdist.hpp"

using namespace waveliq;

namespace {

FeatureSet make_set(int dim, std::initializer_list<double> flat) {
    FeatureSet fs;
    fs.dim = dim;
    fs.data = flat;
    return fs;
}

} // namespace

TEST_CASE("hausdorff identity and singleton cases") {
    std::mt19937 rng(1);
    const FeatureSet a = oracle::random_feature_set(rng, 12, 3);
    CHECK(hausdorff(a, a, GroundMetric::L2) == 0.0);
    CHECK(hausdorff(a, a, GroundMetric::L1) == 0.0);

    const FeatureSet p = make_set(2, {0, 0});
    const FeatureSet q = make_set(2, {3, 4});
    CHECK(hausdorff(p, q, GroundMetric::L2) == 5.0);
    CHECK(hausdorff(p, q, GroundMetric::L1) == 7.0);
}

TEST_CASE("hausdorff 1-D brute-force example") {
    const FeatureSet a = make_set(1, {0, 1, 2});
    const FeatureSet b = make_set(1, {0, 4});
    CHECK(hausdorff(a, b, GroundMetric::L2) == 2.0);
    CHECK(directed_hausdorff(a, b, GroundMetric::L2) == 2.0);
    CHECK(directed_hausdorff(b, a, GroundMetric::L2) == 2.0);
}

TEST_CASE("hausdorff input validation") {
    const FeatureSet a = make_set(2, {0, 0});
    const FeatureSet b = make_set(3, {0, 0, 0});
    CHECK_THROWS_AS(hausdorff(a, b, GroundMetric::L2), DimMismatch);
    FeatureSet empty;
    empty.dim = 2;
    CHECK_THROWS_AS(hausdorff(a, empty, GroundMetric::L2), EmptySet);
}

TEST_CASE("hausdorff is symmetric and matches the naive oracle bit for bit") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const int dim = 1 + static_cast<int>(rng() % 8);
        const size_t n = 1 + rng() % 32;
        const size_t m = 1 + rng() % 32;
        const FeatureSet a = oracle::random_feature_set(rng, n, dim);
        const FeatureSet b = oracle::random_feature_set(rng, m, dim);
        for (GroundMetric metric : {GroundMetric::L2, GroundMetric::L1}) {
            const double h = hausdorff(a, b, metric);
            CHECK(h == hausdorff(b, a, metric));
            CHECK(h == oracle::hausdorff_naive(a, b, metric == GroundMetric::L2));
        }
    }
}

TEST_CASE("hausdorff triangle inequality on random triples") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const int dim = 1 + static_cast<int>(rng() % 6);
        const FeatureSet a = oracle::random_feature_set(rng, 1 + rng() % 24, dim);
        const FeatureSet b = oracle::random_feature_set(rng, 1 + rng() % 24, dim);
        const FeatureSet c = oracle::random_feature_set(rng, 1 + rng() % 24, dim);
        for (GroundMetric metric : {GroundMetric::L2, GroundMetric::L1}) {
            CHECK(hausdorff(a, c, metric) <=
                  hausdorff(a, b, metric) + hausdorff(b, c, metric) + 1e-9);
        }
    }
}

TEST_CASE("hausdorff and coupled_distance are translation invariant") {
    std::mt19937 rng(55);
    const int dim = 4;
    const FeatureSet a = oracle::random_feature_set(rng, 20, dim);
    const FeatureSet b = oracle::random_feature_set(rng, 20, dim);
    FeatureSet at = a, bt = b;
    const double shift[4] = {3.25, -1.5, 0.75, 10.0};
    for (size_t i = 0; i < at.count(); ++i) {
        for (int k = 0; k < dim; ++k) {
            at.point(i)[k] += shift[k];
            bt.point(i)[k] += shift[k];
        }
    }
    CHECK(hausdorff(at, bt, GroundMetric::L2) ==
          doctest::Approx(hausdorff(a, b, GroundMetric::L2)).epsilon(1e-9));
    CHECK(coupled_distance(at, bt, Coupling::Aligned, GroundMetric::L2) ==
          doctest::Approx(coupled_distance(a, b, Coupling::Aligned, GroundMetric::L2))
              .epsilon(1e-9));
}

TEST_CASE("coupled_distance examples and contract") {
    std::mt19937 rng(4);
    const FeatureSet a = oracle::random_feature_set(rng, 10, 2);
    CHECK(coupled_distance(a, a, Coupling::Aligned, GroundMetric::L2) == 0.0);

    const FeatureSet x = make_set(1, {0, 1});
    const FeatureSet y = make_set(1, {1, 0});
    CHECK(coupled_distance(x, y, Coupling::Aligned, GroundMetric::L2) == 1.0);

    const FeatureSet z = make_set(1, {1, 0, 2});
    CHECK_THROWS_AS(coupled_distance(x, z, Coupling::Aligned, GroundMetric::L2),
                    CouplingUnavailable);
}

TEST_CASE("coupled_distance is not an upper bound for hausdorff") {
    // nine coincident points plus one outlier
    FeatureSet a, b;
    a.dim = b.dim = 1;
    for (int i = 0; i < 9; ++i) {
        a.data.push_back(0.0);
        b.data.push_back(0.0);
    }
    a.data.push_back(10.0);
    b.data.push_back(0.0);
    const double h = hausdorff(a, b, GroundMetric::L2);
    const double coupled = coupled_distance(a, b, Coupling::Aligned, GroundMetric::L2);
    CHECK(h == 10.0);
    CHECK(coupled == 1.0);
    CHECK(h > coupled);
}

TEST_CASE("map_similarity closed forms and contract") {
    CHECK(map_similarity(0.0) == 1.0);
    CHECK(map_similarity(1.0) == 0.5);
    CHECK(map_similarity(3.0) == 0.25);
    CHECK_THROWS_AS(map_similarity(-0.1), InvalidDistance);
    CHECK_THROWS_AS(map_similarity(std::numeric_limits<double>::infinity()), InvalidDistance);
    CHECK_THROWS_AS(map_similarity(std::numeric_limits<double>::quiet_NaN()), InvalidDistance);
}

TEST_CASE("map_similarity is strictly decreasing and bounded") {
    double prev = map_similarity(0.0);
    CHECK(prev == 1.0);
    for (double d = 0.25; d < 50.0; d += 0.25) {
        const double s = map_similarity(d);
        CHECK(s < prev);
        CHECK(s > 0.0);
        CHECK(s <= 1.0);
        prev = s;
    }
}

TEST_CASE("feature file round-trip is bit-exact") {
    std::mt19937 rng(6);
    const FeatureSet fs = oracle::random_feature_set(rng, 17, 5);
    const auto bytes = features_to_bytes(fs);
    const FeatureSet back = features_from_bytes(bytes);
    CHECK(back.dim == fs.dim);
    CHECK(back.data == fs.data);

    const auto tmp = std::filesystem::temp_directory_path() / "waveliq_features_rt.wlfs";
    save_feature_file(fs, tmp.string());
    const FeatureSet loaded = load_feature_file(tmp.string());
    std::filesystem::remove(tmp);
    CHECK(loaded.data == fs.data);
    CHECK(loaded.origin == tmp.string());
}

TEST_CASE("feature file: golden bytes authored in-test") {
    // 3 points, dim 2: (1, -2), (0.5, 0), (3.25, 4)
    const double values[6] = {1.0, -2.0, 0.5, 0.0, 3.25, 4.0};
    std::vector<uint8_t> bytes = {'W', 'L', 'F', 'S'};
    auto push32 = [&](uint32_t x) {
        for (int i = 0; i < 4; ++i) bytes.push_back(static_cast<uint8_t>((x >> (8 * i)) & 0xff));
    };
    auto push64 = [&](uint64_t x) {
        for (int i = 0; i < 8; ++i) bytes.push_back(static_cast<uint8_t>((x >> (8 * i)) & 0xff));
    };
    push32(1); // version
    push32(2); // dim
    push64(3); // count
    const size_t payload_start = bytes.size();
    for (double v : values) {
        uint64_t bits;
        std::memcpy(&bits, &v, 8);
        push64(bits);
    }
    push32(oracle::crc32_naive(bytes.data() + payload_start, bytes.size() - payload_start));

    const FeatureSet fs = features_from_bytes(bytes);
    CHECK(fs.dim == 2);
    REQUIRE(fs.count() == 3);
    for (int i = 0; i < 6; ++i) {
        CHECK(fs.data[static_cast<size_t>(i)] == values[i]);
    }
}

TEST_CASE("feature file: malformed payloads raise FormatError") {
    std::mt19937 rng(8);
    const FeatureSet fs = oracle::random_feature_set(rng, 4, 3);
    auto bytes = features_to_bytes(fs);

    auto truncated = bytes;
    truncated.resize(truncated.size() - 5);
    CHECK_THROWS_AS(features_from_bytes(truncated), FormatError);

    auto bad_magic = bytes;
    bad_magic[0] = 'X';
    CHECK_THROWS_AS(features_from_bytes(bad_magic), FormatError);

    auto bad_crc = bytes;
    bad_crc[24] ^= 0x01; // flip a payload bit
    CHECK_THROWS_AS(features_from_bytes(bad_crc), FormatError);

    auto bad_version = bytes;
    bad_version[4] = 9;
    CHECK_THROWS_AS(features_from_bytes(bad_version), FormatError);

    FeatureSet nan_set = fs;
    nan_set.data[0] = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(features_to_bytes(nan_set), FormatError);
}
