// Copyright 2026 The waveliq authors
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "waveliq/bench.hpp"
#include "waveliq/chroma.hpp"
#include "waveliq/distort.hpp"
#include "waveliq/errors.hpp"
#include "waveliq/feature_io.hpp"
#include "waveliq/image.hpp"
#include "waveliq/logistic.hpp"
#include "waveliq/manifest.hpp"
#include "waveliq/refine.hpp"
#include "waveliq/score.hpp"
#include "waveliq/simdist.hpp"
#include "waveliq/stats.hpp"
#include "waveliq/wavelet.hpp"

namespace py = pybind11;

namespace {

using DArray = py::array_t<double, py::array::c_style | py::array::forcecast>;

waveliq::RasterImage image_from_array(const DArray& arr) {
    const auto info = arr.request();
    if (info.ndim != 2 && info.ndim != 3) {
        throw waveliq::UnsupportedChannels("expected a (h,w) or (h,w,c) array");
    }
    const int h = static_cast<int>(info.shape[0]);
    const int w = static_cast<int>(info.shape[1]);
    const int c = info.ndim == 2 ? 1 : static_cast<int>(info.shape[2]);
    if (c != 1 && c != 3) {
        throw waveliq::UnsupportedChannels("expected 1 or 3 channels, got " + std::to_string(c));
    }
    waveliq::RasterImage img(w, h, c);
    const double* src = static_cast<const double*>(info.ptr);
    img.samples.assign(src, src + img.samples.size());
    for (double v : img.samples) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw waveliq::DecodeError("samples must lie in [0,1]");
        }
    }
    return img;
}

py::array image_to_array(const waveliq::RasterImage& img) {
    if (img.channels == 1) {
        py::array_t<double> out({img.height, img.width});
        std::copy(img.samples.begin(), img.samples.end(), out.mutable_data());
        return out;
    }
    py::array_t<double> out({img.height, img.width, img.channels});
    std::copy(img.samples.begin(), img.samples.end(), out.mutable_data());
    return out;
}

py::array grid_to_array(const waveliq::Grid& g) {
    py::array_t<double> out({g.rows, g.cols});
    std::copy(g.data.begin(), g.data.end(), out.mutable_data());
    return out;
}

waveliq::FeatureSet features_from_array(const DArray& arr) {
    const auto info = arr.request();
    if (info.ndim != 2) {
        throw waveliq::DimMismatch("expected a (n, dim) array of points");
    }
    waveliq::FeatureSet fs;
    fs.dim = static_cast<int>(info.shape[1]);
    const double* src = static_cast<const double*>(info.ptr);
    fs.data.assign(src, src + info.shape[0] * info.shape[1]);
    return fs;
}

py::array features_to_array(const waveliq::FeatureSet& fs) {
    py::array_t<double> out({static_cast<py::ssize_t>(fs.count()),
                             static_cast<py::ssize_t>(fs.dim)});
    std::copy(fs.data.begin(), fs.data.end(), out.mutable_data());
    return out;
}

waveliq::GroundMetric parse_metric(const std::string& name) {
    if (name == "l1") return waveliq::GroundMetric::L1;
    if (name == "l2") return waveliq::GroundMetric::L2;
    throw waveliq::ConfigMismatch("metric must be 'l1' or 'l2'");
}

waveliq::ScoreConfig make_config(const std::string& mode, int levels, int bins,
                                 const std::string& metric, double beta, double low_weight,
                                 double high_weight, bool magnitude_only, bool eq9_verbatim) {
    waveliq::ScoreConfig cfg;
    if (mode == "dwt") {
        cfg.mode = waveliq::ScoreMode::DwtOnly;
    } else if (mode == "ch") {
        cfg.mode = waveliq::ScoreMode::ChOnly;
    } else if (mode == "dwt+ch") {
        cfg.mode = waveliq::ScoreMode::DwtPlusCh;
    } else {
        throw waveliq::ConfigMismatch("mode must be 'dwt', 'ch', or 'dwt+ch'");
    }
    cfg.levels = levels;
    cfg.bins = bins;
    cfg.metric = parse_metric(metric);
    cfg.beta = beta;
    cfg.refine.low_weight = low_weight;
    cfg.refine.high_weight = high_weight;
    cfg.refine.magnitude_only = magnitude_only;
    cfg.eq9 = eq9_verbatim ? waveliq::Eq9Mode::Verbatim : waveliq::Eq9Mode::Corrected;
    return cfg;
}

py::dict report_to_dict(const waveliq::QualityReport& rep) {
    py::dict out;
    out["q_p"] = rep.q_p;
    out["hausdorff_d"] = rep.hausdorff_d;
    out["coupled_d"] = rep.coupled_d ? py::object(py::float_(*rep.coupled_d)) : py::none();
    out["ch_weight"] = rep.ch_weight;
    py::list levels;
    for (const auto& lvl : rep.per_level) {
        py::dict d;
        d["level"] = lvl.level;
        d["feature_count"] = lvl.feature_count;
        d["forward_d"] = lvl.forward_d;
        d["backward_d"] = lvl.backward_d;
        levels.append(d);
    }
    out["per_level"] = levels;
    return out;
}

waveliq::Distortion parse_distortion(const std::string& kind) {
    if (kind == "noise") return waveliq::Distortion::GaussianNoise;
    if (kind == "blur") return waveliq::Distortion::GaussianBlur;
    if (kind == "contrast") return waveliq::Distortion::ContrastScale;
    throw waveliq::ConfigMismatch("kind must be 'noise', 'blur', or 'contrast'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Training-free wavelet/Hausdorff full-reference image quality metric";

    py::register_exception<waveliq::Error>(m, "WaveliqError", PyExc_ValueError);

    m.def(
        "load_image",
        [](const std::string& path) { return image_to_array(waveliq::load_image(path)); },
        py::arg("path"), "Decode a PNG/BMP/JPEG file to a (h,w[,c]) float64 array in [0,1].");

    m.def(
        "save_image",
        [](const std::string& path, const DArray& arr) {
            waveliq::save_image(image_from_array(arr), path);
        },
        py::arg("path"), py::arg("image"), "Quantize to 8 bits and write PNG or BMP.");

    m.def(
        "to_luma",
        [](const DArray& arr) {
            const waveliq::LumaImage luma = waveliq::to_luma(image_from_array(arr));
            py::array_t<double> out({luma.height, luma.width});
            std::copy(luma.samples.begin(), luma.samples.end(), out.mutable_data());
            return out;
        },
        py::arg("image"), "BT.601 luma of a (h,w[,c]) array.");

    m.def(
        "decompose",
        [](const DArray& luma, int levels, bool eq9_verbatim) {
            const auto info = luma.request();
            if (info.ndim != 2) {
                throw waveliq::UnsupportedChannels("decompose expects a (h,w) luma array");
            }
            waveliq::LumaImage img(static_cast<int>(info.shape[1]),
                                   static_cast<int>(info.shape[0]));
            const double* src = static_cast<const double*>(info.ptr);
            img.samples.assign(src, src + img.samples.size());
            const waveliq::WaveletPyramid pyr =
                waveliq::decompose(img, waveliq::default_filters(), levels,
                                   eq9_verbatim ? waveliq::Eq9Mode::Verbatim
                                                : waveliq::Eq9Mode::Corrected);
            py::list out;
            static const char* kBand[4] = {"ll", "lh", "hl", "hh"};
            for (const auto& level : pyr.levels) {
                py::dict d;
                d["s_ll"] = grid_to_array(level.subbands.s_ll);
                d["s_lh"] = grid_to_array(level.subbands.s_lh);
                d["s_hl"] = grid_to_array(level.subbands.s_hl);
                d["s_hh"] = grid_to_array(level.subbands.s_hh);
                for (int b = 0; b < 4; ++b) {
                    const std::string tag = kBand[b];
                    d[("c_a_" + tag).c_str()] = grid_to_array(level.pairs[b].c_a);
                    d[("c_d_" + tag).c_str()] = grid_to_array(level.pairs[b].c_d);
                    d[("c_aa_" + tag).c_str()] = grid_to_array(level.quads[b].c_aa);
                    d[("c_ad_" + tag).c_str()] = grid_to_array(level.quads[b].c_ad);
                    d[("c_da_" + tag).c_str()] = grid_to_array(level.quads[b].c_da);
                    d[("c_dd_" + tag).c_str()] = grid_to_array(level.quads[b].c_dd);
                }
                out.append(d);
            }
            return out;
        },
        py::arg("luma"), py::arg("levels") = 2, py::arg("eq9_verbatim") = false,
        "Per-level dict of wavelet subbands and split coefficients.");

    m.def(
        "refine_features",
        [](const DArray& image, int levels, double low_weight, double high_weight,
           bool magnitude_only, bool eq9_verbatim) {
            const waveliq::RasterImage img = image_from_array(image);
            const waveliq::WaveletPyramid pyr = waveliq::decompose(
                waveliq::to_luma(img), waveliq::default_filters(), levels,
                eq9_verbatim ? waveliq::Eq9Mode::Verbatim : waveliq::Eq9Mode::Corrected);
            waveliq::RefineConfig rc = waveliq::RefineConfig::defaults(levels);
            rc.low_weight = low_weight;
            rc.high_weight = high_weight;
            rc.magnitude_only = magnitude_only;
            return features_to_array(waveliq::refine(pyr, rc));
        },
        py::arg("image"), py::arg("levels") = 2, py::arg("low_weight") = 1.0,
        py::arg("high_weight") = 1.0, py::arg("magnitude_only") = true,
        py::arg("eq9_verbatim") = false, "Feature set of an image, one row per spatial site.");

    m.def(
        "hausdorff",
        [](const DArray& a, const DArray& b, const std::string& metric) {
            return waveliq::hausdorff(features_from_array(a), features_from_array(b),
                                      parse_metric(metric));
        },
        py::arg("a"), py::arg("b"), py::arg("metric") = "l2",
        "Exact Hausdorff distance between two (n, dim) point sets.");

    m.def(
        "coupled_distance",
        [](const DArray& a, const DArray& b, const std::string& metric) {
            return waveliq::coupled_distance(features_from_array(a), features_from_array(b),
                                             waveliq::Coupling::Aligned, parse_metric(metric));
        },
        py::arg("a"), py::arg("b"), py::arg("metric") = "l2",
        "Mean ground distance under the identity pairing.");

    m.def("map_similarity", &waveliq::map_similarity, py::arg("distance"),
          "1 / (1 + distance), in (0, 1].");

    m.def(
        "histogram",
        [](const DArray& image, int bins) {
            const waveliq::ColorHistogram h = waveliq::histogram(image_from_array(image), bins);
            py::array_t<double> out({h.channels, h.bins_per_channel});
            std::copy(h.mass.begin(), h.mass.end(), out.mutable_data());
            return out;
        },
        py::arg("image"), py::arg("bins") = 64, "Per-channel normalized histogram.");

    m.def(
        "hellinger_weight",
        [](const DArray& hr, const DArray& hd) {
            auto to_hist = [](const DArray& arr) {
                const auto info = arr.request();
                if (info.ndim != 2) {
                    throw waveliq::ShapeMismatch("expected a (channels, bins) array");
                }
                waveliq::ColorHistogram h;
                h.channels = static_cast<int>(info.shape[0]);
                h.bins_per_channel = static_cast<int>(info.shape[1]);
                const double* src = static_cast<const double*>(info.ptr);
                h.mass.assign(src, src + info.shape[0] * info.shape[1]);
                return h;
            };
            return waveliq::hellinger_weight(to_hist(hr), to_hist(hd));
        },
        py::arg("hr"), py::arg("hd"), "Mean per-channel Hellinger distance, in [0,1].");

    m.def(
        "evaluate_pair",
        [](const DArray& ref, const DArray& dist, const std::string& mode, int levels, int bins,
           const std::string& metric, double beta, double low_weight, double high_weight,
           bool magnitude_only, bool eq9_verbatim) {
            const waveliq::ScoreConfig cfg =
                make_config(mode, levels, bins, metric, beta, low_weight, high_weight,
                            magnitude_only, eq9_verbatim);
            return report_to_dict(
                waveliq::evaluate_pair(image_from_array(ref), image_from_array(dist), cfg));
        },
        py::arg("ref"), py::arg("dist"), py::arg("mode") = "dwt+ch", py::arg("levels") = 2,
        py::arg("bins") = 64, py::arg("metric") = "l2", py::arg("beta") = 1.0,
        py::arg("low_weight") = 1.0, py::arg("high_weight") = 1.0,
        py::arg("magnitude_only") = true, py::arg("eq9_verbatim") = false,
        "Full quality report for one reference/distorted pair.");

    m.def(
        "synthesize",
        [](const DArray& ref, const std::string& kind, int level, uint64_t seed) {
            return image_to_array(
                waveliq::synthesize(image_from_array(ref), parse_distortion(kind), level, seed));
        },
        py::arg("ref"), py::arg("kind"), py::arg("level"), py::arg("seed") = 42,
        "Apply a severity-laddered distortion (kind: noise|blur|contrast).");

    m.def("plcc", &waveliq::plcc, py::arg("x"), py::arg("y"),
          "Pearson linear correlation coefficient.");
    m.def("srcc", &waveliq::srcc, py::arg("x"), py::arg("y"),
          "Spearman rank-order correlation coefficient (average ranks for ties).");

    m.def(
        "fit_logistic4",
        [](const std::vector<double>& pred, const std::vector<double>& mos, uint64_t seed) {
            const waveliq::Logistic4Fit fit = waveliq::fit_logistic4(pred, mos, seed);
            py::dict out;
            out["params"] = fit.params;
            out["sse"] = fit.sse;
            out["converged"] = fit.converged;
            return out;
        },
        py::arg("pred"), py::arg("mos"), py::arg("seed") = 0,
        "Least-squares 4-parameter logistic mapping from scores to MOS.");

    m.def(
        "apply_logistic4",
        [](const std::array<double, 4>& params, double q) {
            return waveliq::apply_logistic4(params, q);
        },
        py::arg("params"), py::arg("q"));

    m.def(
        "run_benchmark",
        [](const std::string& manifest_path, const std::string& mode, int levels, int bins,
           const std::string& metric, double beta, bool use_logistic, int jobs,
           const std::string& dataset_name) {
            const waveliq::ScoreConfig cfg =
                make_config(mode, levels, bins, metric, beta, 1.0, 1.0, true, false);
            const waveliq::DatasetManifest manifest = waveliq::load_manifest(manifest_path);
            const std::string name =
                dataset_name.empty() ? std::string("dataset") : dataset_name;
            const waveliq::BenchmarkReport report =
                waveliq::run_benchmark(manifest, cfg, use_logistic, jobs, name);
            py::dict out;
            out["dataset_name"] = report.dataset_name;
            out["config_fingerprint"] = report.config_fingerprint;
            py::list records;
            for (const auto& rec : report.records) {
                py::dict r;
                r["record_id"] = rec.record_id;
                r["mos"] = rec.mos;
                if (rec.ok()) {
                    r["q_p"] = rec.q_p;
                } else {
                    r["q_p"] = py::none();
                    r["error"] = rec.error;
                }
                records.append(r);
            }
            out["records"] = records;
            if (report.correlations) {
                out["plcc"] = report.correlations->plcc;
                out["srcc"] = report.correlations->srcc;
                out["n"] = report.correlations->n;
            } else {
                out["plcc"] = py::none();
                out["srcc"] = py::none();
                out["n"] = 0;
            }
            return out;
        },
        py::arg("manifest_path"), py::arg("mode") = "dwt+ch", py::arg("levels") = 2,
        py::arg("bins") = 64, py::arg("metric") = "l2", py::arg("beta") = 1.0,
        py::arg("use_logistic") = true, py::arg("jobs") = 0, py::arg("dataset_name") = "",
        "Score a manifest and correlate against its MOS column.");

    m.def(
        "save_features",
        [](const std::string& path, const DArray& points) {
            waveliq::save_feature_file(features_from_array(points), path);
        },
        py::arg("path"), py::arg("points"), "Write a (n, dim) array as a feature tensor file.");

    m.def(
        "load_features",
        [](const std::string& path) {
            return features_to_array(waveliq::load_feature_file(path));
        },
        py::arg("path"), "Load a feature tensor file as a (n, dim) array.");
}
