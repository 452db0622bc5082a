#include "tvreg/field.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tvreg {

ScalarField::ScalarField(GridPtr g, double fill) : grid(std::move(g)) {
    v.assign(static_cast<size_t>(grid->cell_count()), 0.0);
    if (fill != 0.0) {
        for (int c = 0; c < grid->cell_count(); ++c)
            if (grid->interior(c)) v[c] = fill;
    }
}

VectorField::VectorField(GridPtr g) : grid(std::move(g)) {
    fx.assign(static_cast<size_t>(grid->cell_count()), 0.0);
    if (grid->dim() == 2) fy.assign(static_cast<size_t>(grid->cell_count()), 0.0);
}

ScalarField make_field(GridPtr g, double fill) { return ScalarField(std::move(g), fill); }

ScalarField make_field(GridPtr g, const std::function<double(double, double)>& fn) {
    ScalarField u(g);
    const Grid& gr = *u.grid;
    for (int iy = 0; iy < gr.ny(); ++iy)
        for (int ix = 0; ix < gr.nx(); ++ix) {
            const int c = gr.index(ix, iy);
            if (gr.interior(c)) u[c] = fn(gr.cx(ix), gr.cy(iy));
        }
    return u;
}

void check_same_grid(const ScalarField& a, const ScalarField& b) {
    if (a.grid.get() != b.grid.get())
        throw std::invalid_argument("fields live on different grids");
}

VectorField gradient(const ScalarField& u) {
    const Grid& g = *u.grid;
    VectorField p(u.grid);
    for (int iy = 0; iy < g.ny(); ++iy)
        for (int ix = 0; ix < g.nx(); ++ix) {
            const int c = g.index(ix, iy);
            if (!g.interior(c)) continue;
            if (g.interior(ix + 1, iy)) p.fx[c] = (u[c + 1] - u[c]) / g.hx();
            if (g.dim() == 2 && g.interior(ix, iy + 1))
                p.fy[c] = (u[c + g.nx()] - u[c]) / g.hy();
        }
    return p;
}

ScalarField divergence(const VectorField& p) {
    const Grid& g = *p.grid;
    ScalarField d(p.grid);
    for (int iy = 0; iy < g.ny(); ++iy)
        for (int ix = 0; ix < g.nx(); ++ix) {
            const int c = g.index(ix, iy);
            if (!g.interior(c)) continue;
            double s = (p.fx[c] - (ix > 0 ? p.fx[c - 1] : 0.0)) / g.hx();
            if (g.dim() == 2)
                s += (p.fy[c] - (iy > 0 ? p.fy[c - g.nx()] : 0.0)) / g.hy();
            d[c] = s;
        }
    return d;
}

ScalarField laplacian(const ScalarField& u) { return divergence(gradient(u)); }

std::vector<double> boundary_normal_derivative(const ScalarField& u) {
    const Grid& g = *u.grid;
    std::vector<double> out;
    out.reserve(g.boundary_cells().size());
    for (const auto& b : g.boundary_cells()) {
        const int ix = b.cell % g.nx(), iy = b.cell / g.nx();
        const double h = b.axis == 0 ? g.hx() : g.hy();
        const int jx = b.axis == 0 ? ix - b.sign : ix;
        const int jy = b.axis == 1 ? iy - b.sign : iy;
        // inward neighbor missing only on one-cell-wide necks
        const double d =
            g.interior(jx, jy) ? (u[b.cell] - u[g.index(jx, jy)]) / h : 0.0;
        out.push_back(d);
    }
    return out;
}

ScalarField gradient_magnitude(const VectorField& p) {
    const Grid& g = *p.grid;
    ScalarField m(p.grid);
    for (int c = 0; c < g.cell_count(); ++c) {
        if (!g.interior(c)) continue;
        const double gx = p.fx[c];
        const double gy = g.dim() == 2 ? p.fy[c] : 0.0;
        m[c] = std::sqrt(gx * gx + gy * gy);
    }
    return m;
}

double field_norm(const ScalarField& u, double p) {
    if (!(p >= 1.0))
        throw std::invalid_argument("field_norm: p must be >= 1");
    const Grid& g = *u.grid;
    if (std::isinf(p)) {
        double m = 0;
        for (int c = 0; c < g.cell_count(); ++c)
            if (g.interior(c)) m = std::max(m, std::abs(u[c]));
        return m;
    }
    const double measure = g.cell_measure();
    double s = 0;
    for (int c = 0; c < g.cell_count(); ++c)
        if (g.interior(c)) s += std::pow(std::abs(u[c]), p) * measure;
    return std::pow(s, 1.0 / p);
}

double field_norm(const VectorField& p_field, double p) {
    return field_norm(gradient_magnitude(p_field), p);
}

double dot(const ScalarField& a, const ScalarField& b) {
    check_same_grid(a, b);
    const Grid& g = *a.grid;
    const double measure = g.cell_measure();
    double s = 0;
    for (int c = 0; c < g.cell_count(); ++c)
        if (g.interior(c)) s += a[c] * b[c] * measure;
    return s;
}

double dot(const VectorField& a, const VectorField& b) {
    if (a.grid.get() != b.grid.get())
        throw std::invalid_argument("vector fields live on different grids");
    const Grid& g = *a.grid;
    const double measure = g.cell_measure();
    double s = 0;
    for (int c = 0; c < g.cell_count(); ++c) {
        double t = a.fx[c] * b.fx[c];
        if (g.dim() == 2) t += a.fy[c] * b.fy[c];
        s += t * measure;
    }
    return s;
}

double field_min(const ScalarField& u) {
    const Grid& g = *u.grid;
    double m = std::numeric_limits<double>::infinity();
    for (int c = 0; c < g.cell_count(); ++c)
        if (g.interior(c)) m = std::min(m, u[c]);
    return m;
}

double field_max(const ScalarField& u) {
    const Grid& g = *u.grid;
    double m = -std::numeric_limits<double>::infinity();
    for (int c = 0; c < g.cell_count(); ++c)
        if (g.interior(c)) m = std::max(m, u[c]);
    return m;
}

double field_mean(const ScalarField& u) {
    const Grid& g = *u.grid;
    double s = 0;
    for (int c = 0; c < g.cell_count(); ++c)
        if (g.interior(c)) s += u[c];
    return s / g.interior_count();
}

ScalarField add_scaled(const ScalarField& a, double s, const ScalarField& b) {
    check_same_grid(a, b);
    ScalarField out(a.grid);
    for (int c = 0; c < a.size(); ++c) out[c] = a[c] + s * b[c];
    return out;
}

}  // namespace tvreg
