#include "tvreg/grid.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace tvreg {

Grid Grid::interval(int n, double length) {
    if (n < 3) throw std::invalid_argument("interval: need at least 3 cells");
    if (length <= 0) throw std::invalid_argument("interval: length must be positive");
    Grid g;
    g.dim_ = 1;
    g.nx_ = n;
    g.ny_ = 1;
    g.hx_ = length / n;
    g.hy_ = 0;
    g.mask_.assign(static_cast<size_t>(n), 1);
    g.finalize();
    return g;
}

Grid Grid::rectangle(int nx, int ny, double lx, double ly) {
    if (nx < 3 || ny < 3) throw std::invalid_argument("rectangle: need at least 3 cells per axis");
    if (lx <= 0 || ly <= 0) throw std::invalid_argument("rectangle: side lengths must be positive");
    Grid g;
    g.dim_ = 2;
    g.nx_ = nx;
    g.ny_ = ny;
    g.hx_ = lx / nx;
    g.hy_ = ly / ny;
    g.mask_.assign(static_cast<size_t>(nx) * ny, 1);
    g.finalize();
    return g;
}

Grid Grid::masked(int nx, int ny, double hx, double hy, std::vector<std::uint8_t> mask) {
    if (nx < 3 || ny < 3) throw std::invalid_argument("masked: need at least 3 cells per axis");
    if (hx <= 0 || hy <= 0) throw std::invalid_argument("masked: spacing must be positive");
    if (mask.size() != static_cast<size_t>(nx) * ny)
        throw std::invalid_argument("masked: mask size does not match shape");
    Grid g;
    g.dim_ = 2;
    g.nx_ = nx;
    g.ny_ = ny;
    g.hx_ = hx;
    g.hy_ = hy;
    g.mask_ = std::move(mask);
    g.finalize();
    return g;
}

Grid Grid::lshape(int n, double length) {
    if (n < 4) throw std::invalid_argument("lshape: need at least 4 cells per axis");
    const int m = n / 2;
    std::vector<std::uint8_t> mask(static_cast<size_t>(n) * n, 1);
    for (int iy = m; iy < n; ++iy)
        for (int ix = m; ix < n; ++ix) mask[ix + static_cast<size_t>(n) * iy] = 0;
    return masked(n, n, length / n, length / n, std::move(mask));
}

void Grid::finalize() {
    interior_count_ = 0;
    for (auto v : mask_)
        if (v) ++interior_count_;
    if (interior_count_ == 0) throw std::invalid_argument("grid: empty interior");

    // connectivity of the interior (4-neighborhood)
    std::vector<std::uint8_t> seen(mask_.size(), 0);
    std::vector<int> stack;
    int first = 0;
    while (!mask_[first]) ++first;
    stack.push_back(first);
    seen[first] = 1;
    int reached = 0;
    while (!stack.empty()) {
        const int c = stack.back();
        stack.pop_back();
        ++reached;
        const int ix = c % nx_, iy = c / nx_;
        const int nb[4][2] = {{ix - 1, iy}, {ix + 1, iy}, {ix, iy - 1}, {ix, iy + 1}};
        for (auto& q : nb) {
            if (!in_box(q[0], q[1])) continue;
            const int j = index(q[0], q[1]);
            if (mask_[j] && !seen[j]) {
                seen[j] = 1;
                stack.push_back(j);
            }
        }
    }
    if (reached != interior_count_)
        throw std::invalid_argument("grid: mask interior is disconnected");

    boundary_.clear();
    for (int iy = 0; iy < ny_; ++iy) {
        for (int ix = 0; ix < nx_; ++ix) {
            const int c = index(ix, iy);
            if (!mask_[c]) continue;
            if (!interior(ix + 1, iy)) boundary_.push_back({c, 0, +1});
            if (!interior(ix - 1, iy)) boundary_.push_back({c, 0, -1});
            if (dim_ == 2) {
                if (!interior(ix, iy + 1)) boundary_.push_back({c, 1, +1});
                if (!interior(ix, iy - 1)) boundary_.push_back({c, 1, -1});
            }
        }
    }

    // Only intervals and full rectangles count as convex.
    convex_ = (interior_count_ == nx_ * ny_);
}

std::string Grid::describe() const {
    char buf[128];
    if (dim_ == 1) {
        std::snprintf(buf, sizeof(buf), "interval(n=%d,L=%g)", nx_, lx());
    } else if (convex_) {
        std::snprintf(buf, sizeof(buf), "rectangle(%dx%d,%gx%g)", nx_, ny_, lx(), ly());
    } else {
        std::snprintf(buf, sizeof(buf), "masked(%dx%d,%gx%g,int=%d)", nx_, ny_, lx(), ly(),
                      interior_count_);
    }
    return buf;
}

GridPtr make_interval(int n, double length) {
    return std::make_shared<const Grid>(Grid::interval(n, length));
}
GridPtr make_rectangle(int nx, int ny, double lx, double ly) {
    return std::make_shared<const Grid>(Grid::rectangle(nx, ny, lx, ly));
}
GridPtr make_masked(int nx, int ny, double hx, double hy, std::vector<std::uint8_t> mask) {
    return std::make_shared<const Grid>(Grid::masked(nx, ny, hx, hy, std::move(mask)));
}
GridPtr make_lshape(int n, double length) {
    return std::make_shared<const Grid>(Grid::lshape(n, length));
}

GridPtr build_grid(const DomainSpec& spec) {
    if (spec.kind == "interval") {
        return make_interval(spec.n ? spec.n : spec.nx, spec.length);
    }
    if (spec.kind == "rectangle") {
        const int nx = spec.nx ? spec.nx : spec.n;
        const int ny = spec.ny ? spec.ny : spec.n;
        return make_rectangle(nx, ny, spec.lx, spec.ly);
    }
    if (spec.kind == "lshape") {
        return make_lshape(spec.n ? spec.n : spec.nx, spec.length);
    }
    throw std::invalid_argument("build_grid: unknown domain kind '" + spec.kind + "'");
}

}  // namespace tvreg
