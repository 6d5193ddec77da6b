// Copyright 2026 The waveliq authors
// SPDX-License-Identifier: Apache-2.0

#include "waveliq/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "waveliq/errors.hpp"

namespace waveliq {

std::vector<double> average_ranks(const std::vector<double>& x) {
    const size_t n = x.size();
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return x[a] < x[b]; });

    std::vector<double> ranks(n, 0.0);
    size_t i = 0;
    while (i < n) {
        size_t j = i;
        while (j + 1 < n && x[order[j + 1]] == x[order[i]]) {
            ++j;
        }
        // positions i..j (0-based) share the average 1-based rank
        const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (size_t k = i; k <= j; ++k) {
            ranks[order[k]] = avg;
        }
        i = j + 1;
    }
    return ranks;
}

double plcc(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) {
        throw DegenerateInput("plcc: sequence lengths differ");
    }
    const size_t n = x.size();
    if (n < 3) {
        throw DegenerateInput("plcc: need at least 3 samples, got " + std::to_string(n));
    }
    double mx = 0.0, my = 0.0;
    for (size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);

    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        throw DegenerateInput("plcc: zero variance input");
    }
    return sxy / std::sqrt(sxx * syy);
}

double srcc(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) {
        throw DegenerateInput("srcc: sequence lengths differ");
    }
    return plcc(average_ranks(x), average_ranks(y));
}

} // namespace waveliq
