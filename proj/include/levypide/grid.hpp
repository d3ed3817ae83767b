#pragma once

#include <cmath>
#include <cstdlib>
#include <vector>

#include <Eigen/Dense>

#include "levypide/errors.hpp"

namespace levypide {

using PriceVector = Eigen::VectorXd;

struct GridOptions {
    double wing_ratio = 1.5;  // geometric progression of the outer-wing steps
    int wing_budget = 30;     // node budget per side
    int max_nodes = 1 << 20;  // CapacityError beyond this
};

// Log-space grid: a uniform inner diffusion window, optionally extended by
// outer jump wings. The jump grid is a superset of the diffusion grid; the
// inner window nodes coincide with the diffusion nodes exactly.
struct CompositeGrid {
    std::vector<double> nodes;  // strictly increasing, log-moneyness
    int inner_lo = 0;           // index range of the diffusion window
    int inner_hi = 0;
    double h = 0.0;             // inner uniform step
    bool uniform = true;        // true iff all steps equal h

    int size() const { return static_cast<int>(nodes.size()); }
    int inner_size() const { return inner_hi - inner_lo + 1; }
    double step(int j) const { return nodes[j + 1] - nodes[j]; }

    void require_uniform(const char* who) const {
        if (!uniform) throw GridError(std::string(who) + ": requires a uniform grid");
    }
};

// Uniform inner grid of step h spanning `width` around `center`; outer wings
// appended on both sides up to `jump_extension` with geometric steps.
// The spanned width is rounded to the nearest multiple of h.
inline CompositeGrid build_grid(double h, double width, double jump_extension,
                                double center, GridOptions opts = {}) {
    if (!(h > 0.0)) throw GridError("build_grid: h must be positive");
    if (!(width > 0.0)) throw GridError("build_grid: width must be positive");
    if (!(jump_extension >= 0.0)) throw GridError("build_grid: jump_extension must be >= 0");

    const long long intervals = std::llround(width / h);
    const long long n_inner = intervals + 1;
    if (n_inner < 3) throw GridError("build_grid: grid needs at least 3 nodes (N >= 3)");
    if (n_inner > opts.max_nodes)
        throw CapacityError("build_grid: inner node count exceeds the configured maximum");

    std::vector<double> wing;  // offsets beyond an inner edge
    if (jump_extension > 0.0) {
        double offset = 0.0, step = h * opts.wing_ratio;
        for (int j = 0; j < opts.wing_budget && offset < jump_extension; ++j) {
            offset += step;
            wing.push_back(offset);
            step *= opts.wing_ratio;
        }
    }

    CompositeGrid g;
    g.h = h;
    const double lo = center - 0.5 * intervals * h;
    for (auto it = wing.rbegin(); it != wing.rend(); ++it) g.nodes.push_back(lo - *it);
    for (long long i = 0; i < n_inner; ++i) g.nodes.push_back(lo + i * h);
    const double hi = lo + intervals * h;
    for (double off : wing) g.nodes.push_back(hi + off);

    g.inner_lo = static_cast<int>(wing.size());
    g.inner_hi = g.inner_lo + static_cast<int>(n_inner) - 1;
    g.uniform = wing.empty() || opts.wing_ratio == 1.0;
    if (g.size() > opts.max_nodes)
        throw CapacityError("build_grid: total node count exceeds the configured maximum");
    return g;
}

// Value at x = log(strike/spot), linearly interpolated between the two
// bracketing nodes (exact when the strike lies on a node).
inline double price_at_strike(const CompositeGrid& grid, const PriceVector& v,
                              double spot, double strike) {
    const double xq = std::log(strike / spot);
    const auto& x = grid.nodes;
    if (xq < x.front() || xq > x.back())
        throw GridError("price_at_strike: strike is outside the grid");
    int i = static_cast<int>(std::lower_bound(x.begin(), x.end(), xq) - x.begin());
    if (i == 0) return v[0];
    if (std::abs(x[i - 1] - xq) < 1e-14) return v[i - 1];
    const double w = (xq - x[i - 1]) / (x[i] - x[i - 1]);
    return (1.0 - w) * v[i - 1] + w * v[i];
}

}  // namespace levypide
