// Copyright 2026 The waveliq authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace waveliq {

struct Logistic4Fit {
    std::array<double, 4> params{}; // beta1..beta4
    double sse = 0.0;
    bool converged = false;
};

/// m(q) = b1 * (1/2 - 1/(1 + exp(b2 * (q - b3)))) + b4
double apply_logistic4(const std::array<double, 4>& params, double q);

/// Least-squares fit of the 4-parameter logistic by multi-start local
/// search (Nelder-Mead over (b2,b3) with the linear pair profiled out).
/// Deterministic for a fixed seed. Throws DegenerateInput for n < 8 or a
/// constant sequence; a run that stalls still returns best-so-far with
/// converged = false.
Logistic4Fit fit_logistic4(const std::vector<double>& pred, const std::vector<double>& mos,
                           uint64_t seed = 0);

} // namespace waveliq
