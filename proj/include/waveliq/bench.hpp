// Copyright 2026 The waveliq authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "waveliq/manifest.hpp"
#include "waveliq/score.hpp"

namespace waveliq {

struct CorrelationResult {
    double plcc = 0.0;
    double srcc = 0.0;
    size_t n = 0;
    std::optional<std::array<double, 4>> logistic_params; // set when PLCC used the mapping
};

struct RecordResult {
    std::string record_id;
    double q_p = 0.0;
    double mos = 0.0;
    std::string error; // empty on success
    bool ok() const { return error.empty(); }
};

/// Rank correlation within one distortion_tag group. Severity ladders are
/// only rank-calibrated within a tag, so the pooled SRCC understates them;
/// these are the per-family numbers.
struct TagCorrelation {
    std::string tag;
    double srcc = 0.0;
    size_t n = 0;
};

struct BenchmarkReport {
    std::string dataset_name;
    std::string config_fingerprint;
    std::vector<RecordResult> records;
    std::optional<CorrelationResult> correlations;
    std::string correlation_error; // set when correlations are unavailable
    std::vector<TagCorrelation> per_tag; // groups with >= 3 valid records
};

/// Score every manifest record and correlate q_p against MOS. SRCC is
/// always computed on raw q_p; PLCC on logistic-mapped q_p when
/// use_logistic (falling back to raw if the fit preconditions fail).
/// Per-record failures are excluded from the correlations but listed.
BenchmarkReport run_benchmark(const DatasetManifest& manifest, const ScoreConfig& cfg,
                              bool use_logistic, int jobs = 0,
                              const std::string& dataset_name = "dataset");

/// Stable report schema:
/// {dataset_name, config_fingerprint, records:[{record_id, q_p, mos, error?}],
///  plcc, srcc, n, logistic_params?}
std::string report_to_json(const BenchmarkReport& report, int indent = 2);

BenchmarkReport report_from_json(const std::string& text);

/// CSV export of the successful records: header `record_id,q_p,mos`.
std::string report_to_csv(const BenchmarkReport& report);

} // namespace waveliq
