// Copyright 2026 The waveliq authors
// SPDX-License-Identifier: Apache-2.0

#include "waveliq/wavelet.hpp"

#include <string>

#include "waveliq/errors.hpp"

namespace waveliq {

FilterBank default_filters() {
    FilterBank bank;
    bank.f_ll = {0.25, 0.25, 0.25, 0.25};
    bank.f_lh = {0.5, -0.5, 0.5, -0.5};
    bank.f_hl = {0.5, 0.5, -0.5, -0.5};
    bank.f_hh = {0.5, -0.5, -0.5, 0.5};
    return bank;
}

namespace {

Grid correlate2(const Grid& in, const Kernel2& k) {
    Grid out(in.rows - 1, in.cols - 1);
    for (int i = 0; i < out.rows; ++i) {
        const double* r0 = &in.data[static_cast<size_t>(i) * in.cols];
        const double* r1 = r0 + in.cols;
        double* o = &out.data[static_cast<size_t>(i) * out.cols];
        for (int j = 0; j < out.cols; ++j) {
            o[j] = k.k00 * r0[j] + k.k01 * r0[j + 1] + k.k10 * r1[j] + k.k11 * r1[j + 1];
        }
    }
    return out;
}

// Column-pair means: out(i,j) = (g(i,2j) + g(i,2j+1)) / 2.
Grid pair_cols_mean(const Grid& g) {
    Grid out(g.rows, g.cols / 2);
    for (int i = 0; i < out.rows; ++i) {
        for (int j = 0; j < out.cols; ++j) {
            out.at(i, j) = (g.at(i, 2 * j) + g.at(i, 2 * j + 1)) / 2.0;
        }
    }
    return out;
}

// Column-pair differences, optionally halved.
Grid pair_cols_diff(const Grid& g, bool halve) {
    Grid out(g.rows, g.cols / 2);
    for (int i = 0; i < out.rows; ++i) {
        for (int j = 0; j < out.cols; ++j) {
            const double d = g.at(i, 2 * j) - g.at(i, 2 * j + 1);
            out.at(i, j) = halve ? d / 2.0 : d;
        }
    }
    return out;
}

// Row-pair differences: out(i,j) = g(2i,j) - g(2i+1,j).
Grid pair_rows_diff(const Grid& g) {
    Grid out(g.rows / 2, g.cols);
    for (int i = 0; i < out.rows; ++i) {
        for (int j = 0; j < out.cols; ++j) {
            out.at(i, j) = g.at(2 * i, j) - g.at(2 * i + 1, j);
        }
    }
    return out;
}

} // namespace

SubbandSet convolve_subbands(const Grid& img, const FilterBank& bank) {
    if (img.rows < 2 || img.cols < 2) {
        throw ImageTooSmall("convolve_subbands: input must be at least 2x2, got " +
                            std::to_string(img.rows) + "x" + std::to_string(img.cols));
    }
    SubbandSet out;
    out.s_ll = correlate2(img, bank.f_ll);
    out.s_lh = correlate2(img, bank.f_lh);
    out.s_hl = correlate2(img, bank.f_hl);
    out.s_hh = correlate2(img, bank.f_hh);
    return out;
}

SubbandSet convolve_subbands(const LumaImage& img, const FilterBank& bank) {
    return convolve_subbands(img.as_grid(), bank);
}

CoeffPair split_pair(const Grid& s) {
    if (s.cols < 2 && s.rows < 2) {
        throw GridTooSmall("split_pair: grid " + std::to_string(s.rows) + "x" +
                           std::to_string(s.cols) + " admits neither split");
    }
    CoeffPair out;
    out.c_a = pair_cols_mean(s);   // rows x floor(cols/2); empty when cols < 2
    out.c_d = pair_rows_diff(s);   // floor(rows/2) x cols; empty when rows < 2
    return out;
}

CoeffQuad split_quad(const CoeffPair& p, Eq9Mode mode) {
    const bool a_usable = p.c_a.cols >= 2 || (mode == Eq9Mode::Corrected && p.c_a.rows >= 2);
    const bool d_usable = p.c_d.cols >= 2;
    if (!a_usable && !d_usable) {
        throw GridTooSmall("split_quad: both coefficient grids too small to split");
    }
    CoeffQuad out;
    out.c_aa = pair_cols_mean(p.c_a);
    out.c_ad = pair_cols_diff(p.c_d, /*halve=*/true);
    if (mode == Eq9Mode::Corrected) {
        out.c_da = pair_rows_diff(p.c_a);
    } else {
        // As published the branch subtracts a coefficient from itself.
        out.c_da = Grid(p.c_a.rows, p.c_a.cols / 2, 0.0);
    }
    out.c_dd = pair_cols_diff(p.c_d, /*halve=*/false);
    return out;
}

WaveletPyramid decompose(const LumaImage& img, const FilterBank& bank, int levels,
                         Eq9Mode mode) {
    if (levels < 1) {
        throw ConfigMismatch("decompose: levels must be >= 1");
    }
    WaveletPyramid pyr;
    pyr.levels.reserve(static_cast<size_t>(levels));
    Grid current = img.as_grid();
    for (int lvl = 1; lvl <= levels; ++lvl) {
        if (current.rows < 4 || current.cols < 4) {
            throw ImageTooSmall("decompose: level " + std::to_string(lvl) +
                                " input is " + std::to_string(current.rows) + "x" +
                                std::to_string(current.cols) + ", need at least 4x4");
        }
        PyramidLevel level;
        level.subbands = convolve_subbands(current, bank);
        const Grid* bands[4] = {&level.subbands.s_ll, &level.subbands.s_lh,
                                &level.subbands.s_hl, &level.subbands.s_hh};
        for (int b = 0; b < 4; ++b) {
            level.pairs[b] = split_pair(*bands[b]);
            level.quads[b] = split_quad(level.pairs[b], mode);
        }
        Grid next = level.subbands.s_ll;
        pyr.levels.push_back(std::move(level));
        current = std::move(next);
    }
    return pyr;
}

} // namespace waveliq
