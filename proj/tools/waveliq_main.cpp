// Copyright 2026 The waveliq authors
// SPDX-License-Identifier: Apache-2.0
//
// waveliq command-line front end.
//
//   waveliq score REF DIST [flags]      score one pair, JSON on stdout
//   waveliq bench MANIFEST [flags]      run a dataset benchmark
//   waveliq ladder REF --out-dir DIR    synthesize a distortion ladder
//   waveliq features ACTION ...         feature tensor tooling
//
// Exit codes: 0 success, 1 I/O error, 2 validation error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "waveliq/bench.hpp"
#include "waveliq/distort.hpp"
#include "waveliq/errors.hpp"
#include "waveliq/feature_io.hpp"
#include "waveliq/image.hpp"
#include "waveliq/log.hpp"
#include "waveliq/manifest.hpp"
#include "waveliq/score.hpp"
#include "waveliq/simdist.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitValidation = 2;

struct ScoreFlags {
    std::string mode = "dwt+ch";
    int levels = 2;
    int bins = 64;
    std::string metric = "l2";
    double beta = 1.0;
    double low_weight = 1.0;
    double high_weight = 1.0;
    int jobs = 0;
    bool eq9_verbatim = false;
};

void add_score_flags(CLI::App* cmd, ScoreFlags& flags) {
    cmd->add_option("--mode", flags.mode, "Score mode")
        ->check(CLI::IsMember({"dwt", "ch", "dwt+ch"}))
        ->capture_default_str();
    cmd->add_option("--levels", flags.levels, "Wavelet pyramid depth")
        ->check(CLI::Range(1, 4))
        ->capture_default_str();
    cmd->add_option("--bins", flags.bins, "Histogram bins per channel")
        ->check(CLI::Range(2, 4096))
        ->capture_default_str();
    cmd->add_option("--metric", flags.metric, "Ground metric")
        ->check(CLI::IsMember({"l1", "l2"}))
        ->capture_default_str();
    cmd->add_option("--beta", flags.beta, "Histogram weight strength")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    cmd->add_option("--low-weight", flags.low_weight, "Approximation lineage weight")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cmd->add_option("--high-weight", flags.high_weight, "Detail lineage weight")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cmd->add_option("--jobs", flags.jobs, "Worker threads (0 = hardware)")
        ->check(CLI::Range(0, 1024))
        ->capture_default_str();
    cmd->add_flag("--compat-eq9-verbatim", flags.eq9_verbatim,
                  "Keep the published (identically zero) row-difference branch");
}

waveliq::ScoreConfig to_config(const ScoreFlags& flags) {
    waveliq::ScoreConfig cfg;
    if (flags.mode == "dwt") {
        cfg.mode = waveliq::ScoreMode::DwtOnly;
    } else if (flags.mode == "ch") {
        cfg.mode = waveliq::ScoreMode::ChOnly;
    } else {
        cfg.mode = waveliq::ScoreMode::DwtPlusCh;
    }
    cfg.levels = flags.levels;
    cfg.bins = flags.bins;
    cfg.metric = flags.metric == "l1" ? waveliq::GroundMetric::L1 : waveliq::GroundMetric::L2;
    cfg.beta = flags.beta;
    cfg.refine.low_weight = flags.low_weight;
    cfg.refine.high_weight = flags.high_weight;
    cfg.eq9 = flags.eq9_verbatim ? waveliq::Eq9Mode::Verbatim : waveliq::Eq9Mode::Corrected;
    return cfg;
}

json report_to_json(const waveliq::QualityReport& rep, const waveliq::ScoreConfig& cfg) {
    json j;
    j["q_p"] = rep.q_p;
    j["hausdorff_d"] = rep.hausdorff_d;
    if (rep.coupled_d) {
        j["coupled_d"] = *rep.coupled_d;
    } else {
        j["coupled_d"] = nullptr;
    }
    j["ch_weight"] = rep.ch_weight;
    j["per_level"] = json::array();
    for (const auto& lvl : rep.per_level) {
        j["per_level"].push_back({{"level", lvl.level},
                                  {"feature_count", lvl.feature_count},
                                  {"forward_d", lvl.forward_d},
                                  {"backward_d", lvl.backward_d}});
    }
    j["config_fingerprint"] = cfg.fingerprint();
    return j;
}

void dump_pyramid(const waveliq::WaveletPyramid& pyr, const std::string& dir,
                  const std::string& prefix) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    auto dump_grid = [&](const waveliq::Grid& g, const std::string& name) {
        if (g.empty()) return;
        waveliq::FeatureSet fs_grid;
        fs_grid.dim = g.cols;
        fs_grid.data = g.data;
        waveliq::save_feature_file(fs_grid, (fs::path(dir) / (prefix + "_" + name + ".wlfs")).string());
    };
    static const char* kBand[4] = {"ll", "lh", "hl", "hh"};
    for (size_t lvl = 0; lvl < pyr.levels.size(); ++lvl) {
        const auto& level = pyr.levels[lvl];
        const std::string tag = "level" + std::to_string(lvl + 1);
        dump_grid(level.subbands.s_ll, tag + "_s_ll");
        dump_grid(level.subbands.s_lh, tag + "_s_lh");
        dump_grid(level.subbands.s_hl, tag + "_s_hl");
        dump_grid(level.subbands.s_hh, tag + "_s_hh");
        for (int b = 0; b < 4; ++b) {
            dump_grid(level.pairs[b].c_a, tag + std::string("_") + kBand[b] + "_c_a");
            dump_grid(level.pairs[b].c_d, tag + std::string("_") + kBand[b] + "_c_d");
            dump_grid(level.quads[b].c_aa, tag + std::string("_") + kBand[b] + "_c_aa");
            dump_grid(level.quads[b].c_ad, tag + std::string("_") + kBand[b] + "_c_ad");
            dump_grid(level.quads[b].c_da, tag + std::string("_") + kBand[b] + "_c_da");
            dump_grid(level.quads[b].c_dd, tag + std::string("_") + kBand[b] + "_c_dd");
        }
    }
}

int cmd_score(const std::string& ref_path, const std::string& dist_path, const ScoreFlags& flags,
              const std::string& pyramid_dir) {
    const waveliq::ScoreConfig cfg = to_config(flags);
    const waveliq::RasterImage ref = waveliq::load_image(ref_path);
    const waveliq::RasterImage dist = waveliq::load_image(dist_path);
    const waveliq::QualityReport rep = waveliq::evaluate_pair(ref, dist, cfg);

    if (!pyramid_dir.empty()) {
        const waveliq::FilterBank bank = waveliq::default_filters();
        dump_pyramid(waveliq::decompose(waveliq::to_luma(ref), bank, cfg.levels, cfg.eq9),
                     pyramid_dir, "ref");
        dump_pyramid(waveliq::decompose(waveliq::to_luma(dist), bank, cfg.levels, cfg.eq9),
                     pyramid_dir, "dist");
    }
    std::cout << report_to_json(rep, cfg).dump(2) << "\n";
    return kExitOk;
}

int cmd_bench(const std::string& manifest_path, const std::string& out_path,
              const ScoreFlags& flags, bool use_logistic, bool emit_csv,
              std::string dataset_name) {
    const waveliq::ScoreConfig cfg = to_config(flags);
    const waveliq::DatasetManifest manifest = waveliq::load_manifest(manifest_path);
    if (dataset_name.empty()) {
        dataset_name = std::filesystem::path(manifest_path).stem().string();
    }
    const waveliq::BenchmarkReport report =
        waveliq::run_benchmark(manifest, cfg, use_logistic, flags.jobs, dataset_name);

    {
        std::ofstream out(out_path, std::ios::trunc);
        if (!out) {
            throw waveliq::IoError("cannot open report path: " + out_path);
        }
        out << waveliq::report_to_json(report) << "\n";
        if (!out.good()) {
            throw waveliq::IoError("failed writing report: " + out_path);
        }
    }
    if (emit_csv) {
        std::filesystem::path csv_path(out_path);
        csv_path.replace_extension(".csv");
        std::ofstream out(csv_path, std::ios::trunc);
        if (!out) {
            throw waveliq::IoError("cannot open CSV path: " + csv_path.string());
        }
        out << waveliq::report_to_csv(report);
    }

    if (report.correlations) {
        std::printf("%s: plcc=%.4f srcc=%.4f n=%zu", dataset_name.c_str(),
                    report.correlations->plcc, report.correlations->srcc,
                    report.correlations->n);
    } else {
        std::printf("%s: plcc=n/a srcc=n/a (%s)", dataset_name.c_str(),
                    report.correlation_error.c_str());
    }
    for (const waveliq::TagCorrelation& tag : report.per_tag) {
        std::printf(" srcc[%s]=%.4f", tag.tag.c_str(), tag.srcc);
    }
    std::printf("\n");
    return kExitOk;
}

int cmd_ladder(const std::string& ref_path, const std::string& out_dir, uint64_t seed) {
    namespace fs = std::filesystem;
    const waveliq::RasterImage ref = waveliq::load_image(ref_path);
    fs::create_directories(out_dir);

    waveliq::save_image(ref, (fs::path(out_dir) / "ref.png").string());

    waveliq::DatasetManifest manifest;
    static constexpr waveliq::Distortion kKinds[3] = {waveliq::Distortion::GaussianNoise,
                                                      waveliq::Distortion::GaussianBlur,
                                                      waveliq::Distortion::ContrastScale};
    for (const waveliq::Distortion kind : kKinds) {
        for (int level = 1; level <= 5; ++level) {
            const waveliq::RasterImage dist = waveliq::synthesize(ref, kind, level, seed);
            const std::string name =
                std::string(waveliq::distortion_name(kind)) + "_l" + std::to_string(level) + ".png";
            waveliq::save_image(dist, (fs::path(out_dir) / name).string());
            waveliq::ManifestRecord rec;
            rec.record_id = std::string(waveliq::distortion_name(kind)) + "_l" + std::to_string(level);
            rec.ref_path = "ref.png";
            rec.dist_path = name;
            rec.mos = -static_cast<double>(level); // higher mos = better quality
            rec.distortion_tag = waveliq::distortion_name(kind);
            manifest.records.push_back(std::move(rec));
        }
    }
    const std::string manifest_path = (fs::path(out_dir) / "manifest.csv").string();
    waveliq::save_manifest(manifest, manifest_path);
    std::printf("wrote %zu distorted images and %s\n", manifest.records.size(),
                manifest_path.c_str());
    return kExitOk;
}

int cmd_features_extract(const std::string& img_path, const std::string& out_path,
                         const ScoreFlags& flags) {
    const waveliq::ScoreConfig cfg = to_config(flags);
    const waveliq::RasterImage img = waveliq::load_image(img_path);
    const waveliq::WaveletPyramid pyr = waveliq::decompose(
        waveliq::to_luma(img), waveliq::default_filters(), cfg.levels, cfg.eq9);
    waveliq::RefineConfig rc = cfg.refine;
    if (rc.levels_used.empty()) {
        rc = waveliq::RefineConfig::defaults(cfg.levels);
        rc.low_weight = cfg.refine.low_weight;
        rc.high_weight = cfg.refine.high_weight;
    }
    waveliq::FeatureSet fsst = waveliq::refine(pyr, rc);
    fsst.origin = img_path;
    waveliq::save_feature_file(fsst, out_path);
    std::printf("wrote %zu x %d features to %s\n", fsst.count(), fsst.dim, out_path.c_str());
    return kExitOk;
}

int cmd_features_info(const std::string& path) {
    const waveliq::FeatureSet fsst = waveliq::load_feature_file(path);
    json j;
    j["path"] = path;
    j["dim"] = fsst.dim;
    j["count"] = fsst.count();
    if (!fsst.data.empty()) {
        double lo = fsst.data[0], hi = fsst.data[0];
        for (double v : fsst.data) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        j["min"] = lo;
        j["max"] = hi;
    }
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_features_compare(const std::string& path_a, const std::string& path_b,
                         const std::string& metric_name) {
    const waveliq::GroundMetric metric =
        metric_name == "l1" ? waveliq::GroundMetric::L1 : waveliq::GroundMetric::L2;
    const waveliq::FeatureSet a = waveliq::load_feature_file(path_a);
    const waveliq::FeatureSet b = waveliq::load_feature_file(path_b);
    json j;
    const double h = waveliq::hausdorff(a, b, metric);
    j["hausdorff_d"] = h;
    j["similarity"] = waveliq::map_similarity(h);
    if (a.count() == b.count()) {
        j["coupled_d"] = waveliq::coupled_distance(a, b, waveliq::Coupling::Aligned, metric);
    } else {
        j["coupled_d"] = nullptr;
    }
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

int classify_error(const std::exception& e) {
    if (dynamic_cast<const waveliq::IoError*>(&e) != nullptr ||
        dynamic_cast<const waveliq::DecodeError*>(&e) != nullptr ||
        dynamic_cast<const waveliq::FormatError*>(&e) != nullptr) {
        return kExitIo;
    }
    return kExitValidation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"waveliq - wavelet feature-set image quality metric"};
    app.require_subcommand(1);

    ScoreFlags flags;

    // score
    auto* score = app.add_subcommand("score", "Score a distorted image against its reference");
    std::string ref_path, dist_path, pyramid_dir;
    score->add_option("ref", ref_path, "Reference image")->required();
    score->add_option("dist", dist_path, "Distorted image")->required();
    add_score_flags(score, flags);
    score->add_option("--dump-pyramid", pyramid_dir,
                      "Directory receiving both pyramids as .wlfs grids");

    // bench
    auto* bench = app.add_subcommand("bench", "Benchmark a manifest against MOS values");
    std::string manifest_path, out_path = "report.json", dataset_name;
    std::string logistic = "on";
    bool emit_csv = false;
    bench->add_option("manifest", manifest_path, "Dataset manifest CSV")->required();
    bench->add_option("--out", out_path, "Report JSON path")->capture_default_str();
    bench->add_option("--name", dataset_name, "Dataset name for the report");
    bench->add_option("--logistic", logistic, "Fit a 4-parameter logistic before PLCC")
        ->check(CLI::IsMember({"on", "off"}))
        ->capture_default_str();
    bench->add_flag("--csv", emit_csv, "Also write record_id,q_p,mos next to the report");
    add_score_flags(bench, flags);

    // ladder
    auto* ladder = app.add_subcommand("ladder", "Write a synthetic distortion ladder");
    std::string ladder_ref, ladder_dir;
    uint64_t seed = 42;
    ladder->add_option("ref", ladder_ref, "Reference image")->required();
    ladder->add_option("--out-dir", ladder_dir, "Output directory")->required();
    ladder->add_option("--seed", seed, "Noise seed")->capture_default_str();

    // features
    auto* features = app.add_subcommand("features", "Feature tensor tooling");
    auto* fx = features->add_subcommand("extract", "Extract features from an image");
    std::string fx_img, fx_out = "features.wlfs";
    fx->add_option("image", fx_img, "Input image")->required();
    fx->add_option("-o,--out", fx_out, "Output .wlfs path")->capture_default_str();
    add_score_flags(fx, flags);
    auto* fi = features->add_subcommand("info", "Describe a feature tensor file");
    std::string fi_path;
    fi->add_option("file", fi_path, "Feature tensor file")->required();
    auto* fc = features->add_subcommand("compare", "Compare two feature tensor files");
    std::string fc_a, fc_b, fc_metric = "l2";
    fc->add_option("a", fc_a, "First feature file")->required();
    fc->add_option("b", fc_b, "Second feature file")->required();
    fc->add_option("--metric", fc_metric, "Ground metric")
        ->check(CLI::IsMember({"l1", "l2"}))
        ->capture_default_str();
    features->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help and friends exit 0 through CLI11's own path
        return app.exit(e) == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (score->parsed()) {
            return cmd_score(ref_path, dist_path, flags, pyramid_dir);
        }
        if (bench->parsed()) {
            return cmd_bench(manifest_path, out_path, flags, logistic == "on", emit_csv,
                             dataset_name);
        }
        if (ladder->parsed()) {
            return cmd_ladder(ladder_ref, ladder_dir, seed);
        }
        if (features->parsed()) {
            if (fx->parsed()) return cmd_features_extract(fx_img, fx_out, flags);
            if (fi->parsed()) return cmd_features_info(fi_path);
            if (fc->parsed()) return cmd_features_compare(fc_a, fc_b, fc_metric);
        }
    } catch (const waveliq::Error& e) {
        std::fprintf(stderr, "waveliq: %s\n", e.what());
        return classify_error(e);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "waveliq: %s\n", e.what());
        return kExitIo;
    }
    return kExitValidation;
}
