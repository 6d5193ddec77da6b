// Copyright 2026 The waveliq authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

namespace waveliq {

struct ManifestRecord {
    std::string record_id;
    std::string ref_path;  // absolute, or resolved against the manifest dir
    std::string dist_path;
    double mos = 0.0;
    std::string distortion_tag; // may be empty
};

/// Normalized CSV form of a subjective-score dataset. The expected header is
///   record_id,ref_path,dist_path,mos,distortion_tag
struct DatasetManifest {
    std::vector<ManifestRecord> records;
};

/// Parse a manifest CSV. Relative ref/dist paths are resolved against the
/// directory containing `path`. LF and CRLF are both accepted.
/// Throws ParseError (with the offending line number) or DuplicateId.
DatasetManifest load_manifest(const std::string& path);

/// Parse manifest text; `base_dir` resolves relative paths ("" keeps them).
DatasetManifest parse_manifest(const std::string& text, const std::string& base_dir);

/// Serialize back to the documented CSV form (paths written verbatim).
std::string manifest_to_csv(const DatasetManifest& m);

void save_manifest(const DatasetManifest& m, const std::string& path);

inline const char* kManifestHeader = "record_id,ref_path,dist_path,mos,distortion_tag";

} // namespace waveliq
