// Copyright 2026 The waveliq authors
// SPDX-License-Identifier: Apache-2.0

#include "waveliq/simdist.hpp"

#include <cmath>
#include <limits>

#include "waveliq/errors.hpp"

namespace waveliq {

namespace {

void validate_pair(const FeatureSet& a, const FeatureSet& b) {
    if (a.dim != b.dim) {
        throw DimMismatch("feature sets have dims " + std::to_string(a.dim) + " and " +
                          std::to_string(b.dim));
    }
    if (a.count() == 0 || b.count() == 0) {
        throw EmptySet("set distance of an empty feature set is undefined");
    }
}

// Distance in "accumulation space": squared for L2, plain sum for L1.
// Aborts once the partial sum reaches `bound`; an aborted result is only
// ever used as "not smaller than bound", which keeps the min exact.
double accum_distance(const double* a, const double* b, int dim, GroundMetric m,
                      double bound) {
    double s = 0.0;
    if (m == GroundMetric::L2) {
        for (int k = 0; k < dim; ++k) {
            const double d = a[k] - b[k];
            s += d * d;
            if (s >= bound) return s;
        }
    } else {
        for (int k = 0; k < dim; ++k) {
            s += std::fabs(a[k] - b[k]);
            if (s >= bound) return s;
        }
    }
    return s;
}

double finalize(double accum, GroundMetric m) {
    return m == GroundMetric::L2 ? std::sqrt(accum) : accum;
}

// Directed sup-inf in accumulation space. Once a point's running inf can no
// longer exceed the running sup, the rest of its inner scan is skipped.
double directed_accum(const FeatureSet& a, const FeatureSet& b, GroundMetric m) {
    const int dim = a.dim;
    const size_t na = a.count();
    const size_t nb = b.count();
    double cmax = 0.0;
    for (size_t i = 0; i < na; ++i) {
        const double* pa = a.point(i);
        double cmin = std::numeric_limits<double>::infinity();
        for (size_t j = 0; j < nb; ++j) {
            const double d = accum_distance(pa, b.point(j), dim, m, cmin);
            if (d < cmin) cmin = d;
            if (cmin <= cmax) break;
        }
        if (cmin > cmax) cmax = cmin;
    }
    return cmax;
}

} // namespace

double ground_distance(const double* a, const double* b, int dim, GroundMetric m) {
    return finalize(accum_distance(a, b, dim, m, std::numeric_limits<double>::infinity()), m);
}

double directed_hausdorff(const FeatureSet& a, const FeatureSet& b, GroundMetric m) {
    validate_pair(a, b);
    return finalize(directed_accum(a, b, m), m);
}

double hausdorff(const FeatureSet& a, const FeatureSet& b, GroundMetric m) {
    validate_pair(a, b);
    const double fwd = directed_accum(a, b, m);
    const double rev = directed_accum(b, a, m);
    return finalize(fwd > rev ? fwd : rev, m);
}

double coupled_distance(const FeatureSet& a, const FeatureSet& b, Coupling c, GroundMetric m) {
    if (a.dim != b.dim) {
        throw DimMismatch("feature sets have dims " + std::to_string(a.dim) + " and " +
                          std::to_string(b.dim));
    }
    if (c == Coupling::Aligned && a.count() != b.count()) {
        throw CouplingUnavailable("aligned coupling needs equal cardinalities, got " +
                                  std::to_string(a.count()) + " and " + std::to_string(b.count()));
    }
    if (a.count() == 0) {
        throw EmptySet("coupled distance of empty feature sets is undefined");
    }
    double total = 0.0;
    for (size_t i = 0; i < a.count(); ++i) {
        total += ground_distance(a.point(i), b.point(i), a.dim, m);
    }
    return total / static_cast<double>(a.count());
}

double map_similarity(double d) {
    if (!(d >= 0.0) || !std::isfinite(d)) {
        throw InvalidDistance("similarity mapping needs a finite non-negative distance");
    }
    return 1.0 / (1.0 + d);
}

} // namespace waveliq
