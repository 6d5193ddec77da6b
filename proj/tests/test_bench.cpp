// Copyright 2026 The waveliq authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <random>

#include "oracles.hpp"
#include "waveliq/bench.hpp"
#include "waveliq/distort.hpp"
#include "waveliq/errors.hpp"

using namespace waveliq;

namespace {

double mean_abs_deviation(const RasterImage& a, const RasterImage& b) {
    double sum = 0.0;
    for (size_t i = 0; i < a.samples.size(); ++i) {
        sum += std::fabs(a.samples[i] - b.samples[i]);
    }
    return sum / static_cast<double>(a.samples.size());
}

} // namespace

TEST_CASE("synthesize: same seed reproduces the same image") {
    std::mt19937 rng(1);
    const RasterImage ref = oracle::random_rgb(rng, 16, 16);
    for (Distortion kind :
         {Distortion::GaussianNoise, Distortion::GaussianBlur, Distortion::ContrastScale}) {
        const RasterImage a = synthesize(ref, kind, 3, 99);
        const RasterImage b = synthesize(ref, kind, 3, 99);
        CHECK(a.samples == b.samples);
    }
}

TEST_CASE("synthesize: noise severity is strictly increasing in level") {
    std::mt19937 rng(2);
    const RasterImage ref = oracle::random_rgb(rng, 24, 24);
    double prev = 0.0;
    for (int level = 1; level <= 5; ++level) {
        const double mad = mean_abs_deviation(ref, synthesize(ref, Distortion::GaussianNoise,
                                                              level, 7));
        CHECK(mad > prev);
        prev = mad;
    }
}

TEST_CASE("synthesize: contrast fixes the mid-gray image") {
    const RasterImage mid(12, 12, 3, 0.5);
    for (int level = 1; level <= 5; ++level) {
        const RasterImage out = synthesize(mid, Distortion::ContrastScale, level, 0);
        CHECK(out.samples == mid.samples);
    }
}

TEST_CASE("synthesize: outputs stay in [0,1]; bad level rejected") {
    std::mt19937 rng(3);
    const RasterImage ref = oracle::random_rgb(rng, 10, 10);
    for (Distortion kind :
         {Distortion::GaussianNoise, Distortion::GaussianBlur, Distortion::ContrastScale}) {
        const RasterImage out = synthesize(ref, kind, 5, 1);
        for (double v : out.samples) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
    }
    CHECK_THROWS_AS(synthesize(ref, Distortion::GaussianNoise, 0, 1), ConfigMismatch);
    CHECK_THROWS_AS(synthesize(ref, Distortion::GaussianNoise, 6, 1), ConfigMismatch);
}

TEST_CASE("run_benchmark: single-kind ladder ranks perfectly by construction") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "waveliq_bench_ladder";
    fs::create_directories(dir);

    std::mt19937 rng(4);
    const RasterImage ref = oracle::random_rgb(rng, 32, 32);
    save_image(ref, (dir / "ref.png").string());

    DatasetManifest manifest;
    for (int level = 1; level <= 5; ++level) {
        const RasterImage dist = synthesize(ref, Distortion::GaussianNoise, level, 11);
        const std::string name = "noise_l" + std::to_string(level) + ".png";
        save_image(dist, (dir / name).string());
        manifest.records.push_back({"noise_l" + std::to_string(level),
                                    (dir / "ref.png").string(), (dir / name).string(),
                                    -static_cast<double>(level), "noise"});
    }

    const BenchmarkReport report =
        run_benchmark(manifest, ScoreConfig{}, /*use_logistic=*/false, 1, "ladder");
    fs::remove_all(dir);

    REQUIRE(report.correlations.has_value());
    CHECK(report.correlations->srcc == 1.0);
    CHECK(report.correlations->n == 5);
    CHECK(report.dataset_name == "ladder");
    CHECK(report.config_fingerprint == ScoreConfig{}.fingerprint());
    for (const RecordResult& rec : report.records) {
        CHECK(rec.ok());
    }

    // reported correlations agree with the independent statistics oracle
    std::vector<double> q, mos;
    for (const RecordResult& rec : report.records) {
        q.push_back(rec.q_p);
        mos.push_back(rec.mos);
    }
    CHECK(report.correlations->plcc ==
          doctest::Approx(oracle::pearson_naive(q, mos)).epsilon(1e-9));
    CHECK(report.correlations->srcc ==
          doctest::Approx(oracle::spearman_naive(q, mos)).epsilon(1e-9));
}

TEST_CASE("run_benchmark: unreadable records are listed, not fatal") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "waveliq_bench_missing";
    fs::create_directories(dir);
    std::mt19937 rng(5);
    const RasterImage ref = oracle::random_rgb(rng, 16, 16);
    save_image(ref, (dir / "ref.png").string());
    save_image(synthesize(ref, Distortion::GaussianNoise, 1, 1), (dir / "d1.png").string());

    DatasetManifest manifest;
    manifest.records.push_back(
        {"good", (dir / "ref.png").string(), (dir / "d1.png").string(), 1.0, ""});
    manifest.records.push_back(
        {"missing", (dir / "ref.png").string(), (dir / "nope.png").string(), 2.0, ""});

    const BenchmarkReport report = run_benchmark(manifest, ScoreConfig{}, false, 1, "mixed");
    fs::remove_all(dir);

    REQUIRE(report.records.size() == 2);
    CHECK(report.records[0].ok());
    CHECK_FALSE(report.records[1].ok());
    // one good record is not enough for correlations
    CHECK_FALSE(report.correlations.has_value());
    CHECK_FALSE(report.correlation_error.empty());
}

TEST_CASE("report JSON round-trips through the documented schema") {
    BenchmarkReport report;
    report.dataset_name = "demo";
    report.config_fingerprint = ScoreConfig{}.fingerprint();
    report.records.push_back({"a", 0.9, 4.5, ""});
    report.records.push_back({"b", 0.4, 1.5, ""});
    report.records.push_back({"c", 0.0, 2.0, "decode failed"});
    CorrelationResult corr;
    corr.plcc = 0.91;
    corr.srcc = 0.88;
    corr.n = 2;
    corr.logistic_params = std::array<double, 4>{1.0, 2.0, 0.5, 0.25};
    report.correlations = corr;
    report.per_tag.push_back({"noise", 1.0, 5});

    const std::string text = report_to_json(report);
    const BenchmarkReport back = report_from_json(text);

    CHECK(back.dataset_name == report.dataset_name);
    CHECK(back.config_fingerprint == report.config_fingerprint);
    REQUIRE(back.records.size() == 3);
    CHECK(back.records[0].q_p == 0.9);
    CHECK(back.records[2].error == "decode failed");
    REQUIRE(back.correlations.has_value());
    CHECK(back.correlations->plcc == corr.plcc);
    CHECK(back.correlations->srcc == corr.srcc);
    CHECK(back.correlations->n == corr.n);
    REQUIRE(back.correlations->logistic_params.has_value());
    CHECK(*back.correlations->logistic_params == *corr.logistic_params);
    REQUIRE(back.per_tag.size() == 1);
    CHECK(back.per_tag[0].tag == "noise");
    CHECK(back.per_tag[0].srcc == 1.0);
    CHECK(back.per_tag[0].n == 5);

    // degenerate form round-trips too
    BenchmarkReport degen;
    degen.dataset_name = "tiny";
    degen.config_fingerprint = "cfg";
    degen.correlation_error = "too few records";
    const BenchmarkReport dback = report_from_json(report_to_json(degen));
    CHECK_FALSE(dback.correlations.has_value());
    CHECK(dback.correlation_error == "too few records");

    CHECK_THROWS_AS(report_from_json("{not json"), ParseError);
}

TEST_CASE("report CSV lists successful records under the documented header") {
    BenchmarkReport report;
    report.records.push_back({"a", 0.5, 3.0, ""});
    report.records.push_back({"bad", 0.0, 1.0, "boom"});
    const std::string csv = report_to_csv(report);
    CHECK(csv.rfind("record_id,q_p,mos\n", 0) == 0);
    CHECK(csv.find("a,0.5,3\n") != std::string::npos);
    CHECK(csv.find("bad") == std::string::npos);
}
