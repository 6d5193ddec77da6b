// Copyright 2026 The waveliq authors
// SPDX-License-Identifier: Apache-2.0

#include "waveliq/manifest.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "waveliq/errors.hpp"

namespace waveliq {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    fields.push_back(cur);
    return fields;
}

std::string resolve(const std::string& base_dir, const std::string& p) {
    if (base_dir.empty() || p.empty()) return p;
    std::filesystem::path fp(p);
    if (fp.is_absolute()) return p;
    return (std::filesystem::path(base_dir) / fp).string();
}

} // namespace

DatasetManifest parse_manifest(const std::string& text, const std::string& base_dir) {
    std::istringstream in(text);
    std::string line;
    size_t line_no = 0;
    DatasetManifest manifest;
    std::unordered_set<std::string> seen;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line_no == 1) {
            if (line != kManifestHeader) {
                throw ParseError("manifest line 1: expected header '" +
                                 std::string(kManifestHeader) + "'");
            }
            continue;
        }
        if (line.empty()) {
            continue; // tolerate a trailing blank line
        }
        const auto fields = split_csv_line(line);
        if (fields.size() != 5) {
            throw ParseError("manifest line " + std::to_string(line_no) + ": expected 5 fields, got " +
                             std::to_string(fields.size()));
        }
        ManifestRecord rec;
        rec.record_id = fields[0];
        if (rec.record_id.empty()) {
            throw ParseError("manifest line " + std::to_string(line_no) + ": empty record_id");
        }
        rec.ref_path = resolve(base_dir, fields[1]);
        rec.dist_path = resolve(base_dir, fields[2]);
        try {
            size_t used = 0;
            rec.mos = std::stod(fields[3], &used);
            if (used != fields[3].size()) {
                throw std::invalid_argument("trailing garbage");
            }
        } catch (const std::exception&) {
            throw ParseError("manifest line " + std::to_string(line_no) +
                             ": non-numeric mos value '" + fields[3] + "'");
        }
        if (!std::isfinite(rec.mos)) {
            throw ParseError("manifest line " + std::to_string(line_no) + ": non-finite mos");
        }
        rec.distortion_tag = fields[4];
        if (!seen.insert(rec.record_id).second) {
            throw DuplicateId("manifest line " + std::to_string(line_no) +
                              ": duplicate record_id '" + rec.record_id + "'");
        }
        manifest.records.push_back(std::move(rec));
    }
    return manifest;
}

DatasetManifest load_manifest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open manifest: " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string dir = std::filesystem::path(path).parent_path().string();
    return parse_manifest(buf.str(), dir);
}

std::string manifest_to_csv(const DatasetManifest& m) {
    std::ostringstream out;
    out << kManifestHeader << "\n";
    out.precision(17);
    for (const auto& r : m.records) {
        out << r.record_id << ',' << r.ref_path << ',' << r.dist_path << ',' << r.mos << ','
            << r.distortion_tag << "\n";
    }
    return out.str();
}

void save_manifest(const DatasetManifest& m, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open manifest for writing: " + path);
    }
    out << manifest_to_csv(m);
    if (!out.good()) {
        throw IoError("failed writing manifest: " + path);
    }
}

} // namespace waveliq
