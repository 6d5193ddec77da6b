// Copyright 2026 The waveliq authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

namespace waveliq {

/// Average ranks (1-based); tied values share the mean of their positions.
std::vector<double> average_ranks(const std::vector<double>& x);

/// Pearson product-moment correlation. Throws DegenerateInput for length
/// mismatch, n < 3, or zero variance in either sequence.
double plcc(const std::vector<double>& x, const std::vector<double>& y);

/// Spearman rank-order correlation: Pearson correlation of average ranks.
double srcc(const std::vector<double>& x, const std::vector<double>& y);

} // namespace waveliq
