// Copyright 2026 The waveliq authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "waveliq/refine.hpp"

namespace waveliq {

/// Pointwise metric the set distances are built on. Both sets of a
/// comparison are always measured under the same kind.
enum class GroundMetric { L1, L2 };

/// Pairing rule for coupled_distance. Aligned pairs the i-th point of one
/// set with the i-th point of the other and needs equal cardinalities.
enum class Coupling { Aligned };

/// Ground distance between two dim-length vectors.
double ground_distance(const double* a, const double* b, int dim, GroundMetric m);

/// Directed Hausdorff distance: sup over a of inf over b. Exact; the
/// early-exit pruning never changes the result.
double directed_hausdorff(const FeatureSet& a, const FeatureSet& b, GroundMetric m);

/// Symmetric Hausdorff distance, max of the two directed values.
/// Throws DimMismatch or EmptySet.
double hausdorff(const FeatureSet& a, const FeatureSet& b, GroundMetric m);

/// Mean ground distance over coupled pairs. For Aligned this is the
/// identity pairing; throws CouplingUnavailable on cardinality mismatch.
/// Reported alongside hausdorff as a companion statistic; it is NOT an
/// upper bound in general (a handful of coincident points plus one
/// outlier breaks the inequality), so nothing here asserts it as one.
double coupled_distance(const FeatureSet& a, const FeatureSet& b, Coupling c, GroundMetric m);

/// Map a distance to a similarity in (0,1]: s = 1 / (1 + d).
/// Throws InvalidDistance on negative or non-finite input.
double map_similarity(double d);

} // namespace waveliq
