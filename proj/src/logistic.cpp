// Copyright 2026 The waveliq authors
// SPDX-License-Identifier: Apache-2.0

#include "waveliq/logistic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "waveliq/errors.hpp"

namespace waveliq {

namespace {

double safe_exp(double x) {
    return std::exp(std::clamp(x, -500.0, 500.0));
}

struct ProfiledFit {
    double b1 = 0.0;
    double b4 = 0.0;
    double sse = std::numeric_limits<double>::infinity();
};

// For fixed (b2,b3) the model is linear in (b1,b4); solve that pair in
// closed form and return the residual.
ProfiledFit profile(const std::vector<double>& q, const std::vector<double>& y, double b2,
                    double b3) {
    const size_t n = q.size();
    double su = 0.0, sy = 0.0;
    std::vector<double> u(n);
    for (size_t i = 0; i < n; ++i) {
        u[i] = 0.5 - 1.0 / (1.0 + safe_exp(b2 * (q[i] - b3)));
        su += u[i];
        sy += y[i];
    }
    const double mu = su / static_cast<double>(n);
    const double my = sy / static_cast<double>(n);
    double suu = 0.0, suy = 0.0;
    for (size_t i = 0; i < n; ++i) {
        suu += (u[i] - mu) * (u[i] - mu);
        suy += (u[i] - mu) * (y[i] - my);
    }
    ProfiledFit fit;
    if (suu > 0.0 && std::isfinite(suu) && std::isfinite(suy)) {
        fit.b1 = suy / suu;
    } else {
        fit.b1 = 0.0; // flat sigmoid: intercept-only model
    }
    fit.b4 = my - fit.b1 * mu;
    double sse = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const double r = fit.b1 * u[i] + fit.b4 - y[i];
        sse += r * r;
    }
    fit.sse = std::isfinite(sse) ? sse : std::numeric_limits<double>::infinity();
    return fit;
}

struct NmResult {
    double b2 = 0.0, b3 = 0.0;
    double sse = std::numeric_limits<double>::infinity();
    bool converged = false;
};

// Plain 2-D Nelder-Mead on (b2,b3).
NmResult nelder_mead(const std::vector<double>& q, const std::vector<double>& y, double b2,
                     double b3, double scale2, double scale3) {
    struct Vertex {
        double p[2];
        double f;
    };
    auto eval = [&](const double p[2]) { return profile(q, y, p[0], p[1]).sse; };

    Vertex simplex[3];
    simplex[0] = {{b2, b3}, 0.0};
    simplex[1] = {{b2 + scale2, b3}, 0.0};
    simplex[2] = {{b2, b3 + scale3}, 0.0};
    for (auto& v : simplex) v.f = eval(v.p);

    constexpr int kMaxIter = 500;
    constexpr double kTol = 1e-14;
    bool converged = false;
    for (int iter = 0; iter < kMaxIter; ++iter) {
        std::sort(std::begin(simplex), std::end(simplex),
                  [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
        const double spread = std::fabs(simplex[2].f - simplex[0].f);
        if (spread <= kTol * (1.0 + std::fabs(simplex[0].f))) {
            converged = true;
            break;
        }
        const double cx = (simplex[0].p[0] + simplex[1].p[0]) / 2.0;
        const double cy = (simplex[0].p[1] + simplex[1].p[1]) / 2.0;

        auto try_point = [&](double alpha, Vertex& out) {
            out.p[0] = cx + alpha * (cx - simplex[2].p[0]);
            out.p[1] = cy + alpha * (cy - simplex[2].p[1]);
            out.f = eval(out.p);
        };

        Vertex refl;
        try_point(1.0, refl);
        if (refl.f < simplex[0].f) {
            Vertex exp_;
            try_point(2.0, exp_);
            simplex[2] = (exp_.f < refl.f) ? exp_ : refl;
        } else if (refl.f < simplex[1].f) {
            simplex[2] = refl;
        } else {
            Vertex contr;
            try_point(refl.f < simplex[2].f ? 0.5 : -0.5, contr);
            if (contr.f < std::min(refl.f, simplex[2].f)) {
                simplex[2] = contr;
            } else {
                // shrink toward the best vertex
                for (int v = 1; v < 3; ++v) {
                    simplex[v].p[0] = (simplex[v].p[0] + simplex[0].p[0]) / 2.0;
                    simplex[v].p[1] = (simplex[v].p[1] + simplex[0].p[1]) / 2.0;
                    simplex[v].f = eval(simplex[v].p);
                }
            }
        }
    }
    std::sort(std::begin(simplex), std::end(simplex),
              [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
    return {simplex[0].p[0], simplex[0].p[1], simplex[0].f, converged};
}

} // namespace

double apply_logistic4(const std::array<double, 4>& p, double q) {
    return p[0] * (0.5 - 1.0 / (1.0 + safe_exp(p[1] * (q - p[2])))) + p[3];
}

Logistic4Fit fit_logistic4(const std::vector<double>& pred, const std::vector<double>& mos,
                           uint64_t seed) {
    if (pred.size() != mos.size()) {
        throw DegenerateInput("fit_logistic4: sequence lengths differ");
    }
    const size_t n = pred.size();
    if (n < 8) {
        throw DegenerateInput("fit_logistic4: need at least 8 samples, got " + std::to_string(n));
    }
    const auto [qmin_it, qmax_it] = std::minmax_element(pred.begin(), pred.end());
    const auto [ymin_it, ymax_it] = std::minmax_element(mos.begin(), mos.end());
    if (*qmin_it == *qmax_it) {
        throw DegenerateInput("fit_logistic4: predictions have zero variance");
    }
    if (*ymin_it == *ymax_it) {
        throw DegenerateInput("fit_logistic4: target values have zero variance");
    }

    const double range = *qmax_it - *qmin_it;
    const double mid = (*qmax_it + *qmin_it) / 2.0;

    std::vector<std::pair<double, double>> starts;
    for (double slope : {0.25, 1.0, 4.0, 16.0, -1.0, -4.0}) {
        for (double center : {mid, *qmin_it + 0.25 * range, *qmin_it + 0.75 * range}) {
            starts.emplace_back(slope / range, center);
        }
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uc(*qmin_it, *qmax_it);
    std::uniform_real_distribution<double> us(-32.0, 32.0);
    for (int extra = 0; extra < 8; ++extra) {
        starts.emplace_back(us(rng) / range, uc(rng));
    }

    Logistic4Fit best;
    best.sse = std::numeric_limits<double>::infinity();
    for (const auto& [b2, b3] : starts) {
        const NmResult r = nelder_mead(pred, mos, b2, b3, 0.5 * std::fabs(b2) + 0.1 / range,
                                       0.25 * range + 1e-12);
        if (r.sse < best.sse) {
            const ProfiledFit lin = profile(pred, mos, r.b2, r.b3);
            best.params = {lin.b1, r.b2, r.b3, lin.b4};
            best.sse = r.sse;
            best.converged = r.converged;
        }
    }
    return best;
}

} // namespace waveliq
