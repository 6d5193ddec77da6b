// Copyright 2026 The waveliq authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <vector>

#include "waveliq/grid.hpp"
#include "waveliq/image.hpp"

namespace waveliq {

/// 2x2 analysis kernel, applied as a valid-mode correlation.
struct Kernel2 {
    double k00 = 0.0, k01 = 0.0;
    double k10 = 0.0, k11 = 0.0;

    double sum() const { return k00 + k01 + k10 + k11; }
};

/// The four analysis filters. f_ll entries sum to 1; the detail kernels
/// each sum to 0 so constant regions produce exactly zero detail.
struct FilterBank {
    Kernel2 f_ll;
    Kernel2 f_lh;
    Kernel2 f_hl;
    Kernel2 f_hh;
};

/// Haar-style bank:
///   f_ll = 1/4 [[ 1,  1], [ 1,  1]]
///   f_lh = 1/2 [[ 1, -1], [ 1, -1]]
///   f_hl = 1/2 [[ 1,  1], [-1, -1]]
///   f_hh = 1/2 [[ 1, -1], [-1,  1]]
FilterBank default_filters();

/// One round of subband images, all (h-1) x (w-1) for an h x w input.
struct SubbandSet {
    Grid s_ll;
    Grid s_lh;
    Grid s_hl;
    Grid s_hh;
};

/// Column-pair averages (c_a) and row-pair differences (c_d) of a subband.
/// c_a is rows x floor(cols/2); c_d is floor(rows/2) x cols. Trailing odd
/// rows/columns are dropped.
struct CoeffPair {
    Grid c_a;
    Grid c_d;
};

/// Second-stage split of a CoeffPair.
struct CoeffQuad {
    Grid c_aa; // column-pair mean of c_a
    Grid c_ad; // column-pair half-difference of c_d
    Grid c_da; // row-pair difference of c_a (see Eq9Mode)
    Grid c_dd; // column-pair difference of c_d
};

/// The published second-stage split has a degenerate row-average branch
/// whose difference is taken against itself and is therefore identically
/// zero. Corrected uses the row-pair difference instead; Verbatim keeps
/// the zero branch for auditing.
enum class Eq9Mode { Corrected, Verbatim };

struct PyramidLevel {
    SubbandSet subbands;
    std::array<CoeffPair, 4> pairs; // LL, LH, HL, HH order
    std::array<CoeffQuad, 4> quads; // same order
};

/// Multi-level decomposition. Level k+1 recurses on level k's s_ll.
struct WaveletPyramid {
    std::vector<PyramidLevel> levels;
};

/// Valid-mode 2x2 correlation of the image with each kernel, stride 1,
/// no padding; outputs are (h-1) x (w-1). Throws ImageTooSmall below 2x2.
SubbandSet convolve_subbands(const LumaImage& img, const FilterBank& bank);
SubbandSet convolve_subbands(const Grid& img, const FilterBank& bank);

/// First-stage average/difference split. A component whose pairing axis has
/// fewer than two entries comes back empty; throws GridTooSmall only when
/// both components would be empty.
CoeffPair split_pair(const Grid& s);

/// Second-stage split (four components). Components with too-narrow inputs
/// come back empty; throws GridTooSmall when every component would be.
CoeffQuad split_quad(const CoeffPair& p, Eq9Mode mode = Eq9Mode::Corrected);

/// Full pyramid. Each recursion input (the image, then successive s_ll
/// grids) must be at least 4x4; the error names the failing level.
WaveletPyramid decompose(const LumaImage& img, const FilterBank& bank, int levels,
                         Eq9Mode mode = Eq9Mode::Corrected);

} // namespace waveliq
