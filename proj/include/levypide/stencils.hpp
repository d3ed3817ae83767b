#pragma once

#include "levypide/banded.hpp"
#include "levypide/grid.hpp"

namespace levypide {

// F/B: one-sided first-order first derivative. C: central first derivative.
// F2/B2: one-sided second-order first derivative. C2: central second
// derivative. Rows whose stencil would reach beyond the grid keep only the
// in-range coefficients (zero ghost values); this preserves the Toeplitz
// structure the schemes' matrix analysis relies on, including the exact
// transpose symmetry between the forward and backward variants.
enum class StencilKind { F, B, C, F2, B2, C2 };

inline BandedMatrix build_stencil(StencilKind kind, const CompositeGrid& grid) {
    const int n = grid.size();
    if (n < 3) throw GridError("build_stencil: grid needs at least 3 nodes");
    const bool uni = grid.uniform;
    if (!uni && (kind == StencilKind::F2 || kind == StencilKind::B2))
        throw GridError("build_stencil: F2/B2 require a uniform grid");

    auto put = [&](BandedMatrix& m, int i, int j, double v) {
        if (j >= 0 && j < n) m.at(i, j) += v;
    };

    switch (kind) {
        case StencilKind::F: {
            BandedMatrix m(n, 0, 1);
            for (int i = 0; i < n; ++i) {
                const double hi = (i + 1 < n) ? grid.step(i) : grid.step(i - 1);
                put(m, i, i, -1.0 / hi);
                put(m, i, i + 1, 1.0 / hi);
            }
            return m;
        }
        case StencilKind::B: {
            BandedMatrix m(n, 1, 0);
            for (int i = 0; i < n; ++i) {
                const double hi = (i > 0) ? grid.step(i - 1) : grid.step(i);
                put(m, i, i, 1.0 / hi);
                put(m, i, i - 1, -1.0 / hi);
            }
            return m;
        }
        case StencilKind::C: {
            BandedMatrix m(n, 1, 1);
            for (int i = 0; i < n; ++i) {
                const double hl = (i > 0) ? grid.step(i - 1) : grid.step(i);
                const double hr = (i + 1 < n) ? grid.step(i) : grid.step(i - 1);
                put(m, i, i - 1, -hr / (hl * (hl + hr)));
                put(m, i, i, (hr - hl) / (hl * hr));
                put(m, i, i + 1, hl / (hr * (hl + hr)));
            }
            return m;
        }
        case StencilKind::B2: {
            const double h = grid.h;
            BandedMatrix m(n, 2, 0);
            for (int i = 0; i < n; ++i) {
                put(m, i, i, 3.0 / (2.0 * h));
                put(m, i, i - 1, -4.0 / (2.0 * h));
                put(m, i, i - 2, 1.0 / (2.0 * h));
            }
            return m;
        }
        case StencilKind::F2: {
            const double h = grid.h;
            BandedMatrix m(n, 0, 2);
            for (int i = 0; i < n; ++i) {
                put(m, i, i, -3.0 / (2.0 * h));
                put(m, i, i + 1, 4.0 / (2.0 * h));
                put(m, i, i + 2, -1.0 / (2.0 * h));
            }
            return m;
        }
        case StencilKind::C2: {
            BandedMatrix m(n, 1, 1);
            for (int i = 0; i < n; ++i) {
                const double hl = (i > 0) ? grid.step(i - 1) : grid.step(i);
                const double hr = (i + 1 < n) ? grid.step(i) : grid.step(i - 1);
                put(m, i, i - 1, 2.0 / (hl * (hl + hr)));
                put(m, i, i, -2.0 / (hl * hr));
                put(m, i, i + 1, 2.0 / (hr * (hl + hr)));
            }
            return m;
        }
    }
    throw Error("build_stencil: unknown kind");
}

// Inner matrix shared by the NIG and GH schemes:
//   M2 = (alpha^2 - beta^2) I - 2 beta A2 - C2,
// with the one-sided branch chosen by the sign of beta (backward for
// beta < 0, forward for beta >= 0).
inline BandedMatrix build_m2(double alpha, double beta, const CompositeGrid& grid) {
    grid.require_uniform("build_m2");
    const BandedMatrix A2 =
        build_stencil(beta < 0.0 ? StencilKind::B2 : StencilKind::F2, grid);
    const BandedMatrix C2 = build_stencil(StencilKind::C2, grid);
    const BandedMatrix I = BandedMatrix::identity(grid.size());
    return band_lincomb({{alpha * alpha - beta * beta, &I}, {-2.0 * beta, &A2}, {-1.0, &C2}});
}

}  // namespace levypide
