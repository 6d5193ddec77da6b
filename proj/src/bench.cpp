// Copyright 2026 The waveliq authors
// SPDX-License-Identifier: Apache-2.0

#include "waveliq/bench.hpp"

#include <map>

#include <json.hpp>

#include "waveliq/errors.hpp"
#include "waveliq/log.hpp"
#include "waveliq/logistic.hpp"
#include "waveliq/stats.hpp"

namespace waveliq {

BenchmarkReport run_benchmark(const DatasetManifest& manifest, const ScoreConfig& cfg,
                              bool use_logistic, int jobs, const std::string& dataset_name) {
    BenchmarkReport report;
    report.dataset_name = dataset_name;
    report.config_fingerprint = cfg.fingerprint();
    report.records.resize(manifest.records.size());

    // Decode images up front; records whose files fail stay errored and
    // are skipped by the scorer.
    std::vector<std::pair<RasterImage, RasterImage>> images(manifest.records.size());
    std::vector<std::pair<const RasterImage*, const RasterImage*>> pairs;
    std::vector<size_t> pair_index;
    for (size_t i = 0; i < manifest.records.size(); ++i) {
        const ManifestRecord& rec = manifest.records[i];
        report.records[i].record_id = rec.record_id;
        report.records[i].mos = rec.mos;
        try {
            images[i].first = load_image(rec.ref_path);
            images[i].second = load_image(rec.dist_path);
            pairs.emplace_back(&images[i].first, &images[i].second);
            pair_index.push_back(i);
        } catch (const std::exception& e) {
            report.records[i].error = e.what();
        }
    }

    const std::vector<PairOutcome> outcomes = score_batch(pairs, cfg, jobs);
    for (size_t k = 0; k < outcomes.size(); ++k) {
        RecordResult& rec = report.records[pair_index[k]];
        if (outcomes[k].ok()) {
            rec.q_p = outcomes[k].report.q_p;
        } else {
            rec.error = outcomes[k].error;
        }
    }

    std::vector<double> preds, targets;
    for (const RecordResult& rec : report.records) {
        if (rec.ok()) {
            preds.push_back(rec.q_p);
            targets.push_back(rec.mos);
        }
    }

    // per-tag rank correlations, for manifests whose MOS is only
    // rank-calibrated within a distortion family (ladders)
    {
        std::map<std::string, std::pair<std::vector<double>, std::vector<double>>> groups;
        for (size_t i = 0; i < manifest.records.size(); ++i) {
            const std::string& tag = manifest.records[i].distortion_tag;
            if (tag.empty() || !report.records[i].ok()) continue;
            groups[tag].first.push_back(report.records[i].q_p);
            groups[tag].second.push_back(report.records[i].mos);
        }
        for (const auto& [tag, series] : groups) {
            if (series.first.size() < 3) continue;
            try {
                report.per_tag.push_back({tag, srcc(series.first, series.second),
                                          series.first.size()});
            } catch (const DegenerateInput&) {
                // constant group, nothing to rank
            }
        }
    }

    try {
        CorrelationResult corr;
        corr.n = preds.size();
        corr.srcc = srcc(preds, targets);
        if (use_logistic) {
            try {
                const Logistic4Fit fit = fit_logistic4(preds, targets);
                std::vector<double> mapped(preds.size());
                for (size_t i = 0; i < preds.size(); ++i) {
                    mapped[i] = apply_logistic4(fit.params, preds[i]);
                }
                corr.plcc = plcc(mapped, targets);
                corr.logistic_params = fit.params;
            } catch (const DegenerateInput& e) {
                log::warn(std::string("logistic mapping skipped: ") + e.what());
                corr.plcc = plcc(preds, targets);
            }
        } else {
            corr.plcc = plcc(preds, targets);
        }
        report.correlations = corr;
    } catch (const DegenerateInput& e) {
        report.correlation_error = e.what();
    }
    return report;
}

std::string report_to_json(const BenchmarkReport& report, int indent) {
    nlohmann::json j;
    j["dataset_name"] = report.dataset_name;
    j["config_fingerprint"] = report.config_fingerprint;
    j["records"] = nlohmann::json::array();
    for (const RecordResult& rec : report.records) {
        nlohmann::json r;
        r["record_id"] = rec.record_id;
        r["mos"] = rec.mos;
        if (rec.ok()) {
            r["q_p"] = rec.q_p;
        } else {
            r["q_p"] = nullptr;
            r["error"] = rec.error;
        }
        j["records"].push_back(std::move(r));
    }
    if (report.correlations) {
        j["plcc"] = report.correlations->plcc;
        j["srcc"] = report.correlations->srcc;
        j["n"] = report.correlations->n;
        if (report.correlations->logistic_params) {
            j["logistic_params"] = *report.correlations->logistic_params;
        }
    } else {
        j["plcc"] = nullptr;
        j["srcc"] = nullptr;
        j["n"] = 0;
        if (!report.correlation_error.empty()) {
            j["correlation_error"] = report.correlation_error;
        }
    }
    if (!report.per_tag.empty()) {
        nlohmann::json tags = nlohmann::json::object();
        for (const TagCorrelation& t : report.per_tag) {
            tags[t.tag] = {{"srcc", t.srcc}, {"n", t.n}};
        }
        j["per_tag"] = std::move(tags);
    }
    return j.dump(indent);
}

BenchmarkReport report_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("report JSON: ") + e.what());
    }
    BenchmarkReport report;
    try {
        report.dataset_name = j.at("dataset_name").get<std::string>();
        report.config_fingerprint = j.at("config_fingerprint").get<std::string>();
        for (const auto& r : j.at("records")) {
            RecordResult rec;
            rec.record_id = r.at("record_id").get<std::string>();
            rec.mos = r.at("mos").get<double>();
            if (r.contains("error")) {
                rec.error = r.at("error").get<std::string>();
            } else {
                rec.q_p = r.at("q_p").get<double>();
            }
            report.records.push_back(std::move(rec));
        }
        if (!j.at("plcc").is_null()) {
            CorrelationResult corr;
            corr.plcc = j.at("plcc").get<double>();
            corr.srcc = j.at("srcc").get<double>();
            corr.n = j.at("n").get<size_t>();
            if (j.contains("logistic_params")) {
                corr.logistic_params = j.at("logistic_params").get<std::array<double, 4>>();
            }
            report.correlations = corr;
        } else if (j.contains("correlation_error")) {
            report.correlation_error = j.at("correlation_error").get<std::string>();
        }
        if (j.contains("per_tag")) {
            for (const auto& [tag, val] : j.at("per_tag").items()) {
                report.per_tag.push_back(
                    {tag, val.at("srcc").get<double>(), val.at("n").get<size_t>()});
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("report JSON: ") + e.what());
    }
    return report;
}

std::string report_to_csv(const BenchmarkReport& report) {
    std::string out = "record_id,q_p,mos\n";
    char buf[128];
    for (const RecordResult& rec : report.records) {
        if (!rec.ok()) continue;
        std::snprintf(buf, sizeof(buf), "%s,%.17g,%.17g\n", rec.record_id.c_str(), rec.q_p,
                      rec.mos);
        out += buf;
    }
    return out;
}

} // namespace waveliq
