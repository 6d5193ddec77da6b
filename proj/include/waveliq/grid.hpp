// Copyright 2026 The waveliq authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace waveliq {

/// Dense row-major matrix of doubles. Zero rows or columns is a valid
/// (empty) grid; several wavelet components degenerate to empty on
/// narrow inputs and the rest of the pipeline must tolerate that.
struct Grid {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    Grid() = default;
    Grid(int r, int c, double fill = 0.0)
        : rows(r), cols(c), data(static_cast<size_t>(r) * static_cast<size_t>(c), fill) {}

    double& at(int i, int j) {
        assert(i >= 0 && i < rows && j >= 0 && j < cols);
        return data[static_cast<size_t>(i) * cols + j];
    }
    double at(int i, int j) const {
        assert(i >= 0 && i < rows && j >= 0 && j < cols);
        return data[static_cast<size_t>(i) * cols + j];
    }

    bool empty() const { return rows == 0 || cols == 0; }
    size_t size() const { return data.size(); }

    bool same_shape(const Grid& o) const { return rows == o.rows && cols == o.cols; }
};

} // namespace waveliq
