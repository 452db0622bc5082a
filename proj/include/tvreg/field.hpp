#pragma once

#include <functional>
#include <vector>

#include "tvreg/grid.hpp"

namespace tvreg {

/// Node values, one slot per bounding-box cell; exterior cells are held at 0.
struct ScalarField {
    GridPtr grid;
    std::vector<double> v;

    ScalarField() = default;
    explicit ScalarField(GridPtr g, double fill = 0.0);

    double& operator[](int c) { return v[static_cast<size_t>(c)]; }
    double operator[](int c) const { return v[static_cast<size_t>(c)]; }
    int size() const { return static_cast<int>(v.size()); }
};

/// Staggered face values with a forward-difference layout: fx[c] sits on the
/// face between cell c and c+ex, fy[c] between c and c+ey. Faces that cross
/// the boundary (or leave the box) carry value 0.
struct VectorField {
    GridPtr grid;
    std::vector<double> fx, fy;

    VectorField() = default;
    explicit VectorField(GridPtr g);
};

ScalarField make_field(GridPtr g, double fill = 0.0);
ScalarField make_field(GridPtr g, const std::function<double(double, double)>& fn);

/// Forward differences; boundary-crossing faces are 0 (discrete du/dnu = 0).
VectorField gradient(const ScalarField& u);

/// Exact negative adjoint of gradient: <div p, u> = -<p, grad u>.
ScalarField divergence(const VectorField& p);

/// divergence(gradient(u)) composed.
ScalarField laplacian(const ScalarField& u);

/// One-sided difference along the outward normal, one value per entry of
/// grid->boundary_cells(); positive means increasing outward.
std::vector<double> boundary_normal_derivative(const ScalarField& u);

/// Euclidean distance of each interior cell center to the domain boundary.
/// Closed form on intervals/rectangles, two-pass transform on masked grids.
ScalarField distance_field(const GridPtr& grid);

/// Gradient magnitude as a cell quantity: each cell owns its forward faces.
/// Summed with the cell measure this makes p=1 the discrete TV seminorm.
ScalarField gradient_magnitude(const VectorField& p);

/// Discrete L^p norm with cell-measure weights; p = inf gives the max.
double field_norm(const ScalarField& u, double p);
double field_norm(const VectorField& p_field, double p);

double dot(const ScalarField& a, const ScalarField& b);
double dot(const VectorField& a, const VectorField& b);

double field_min(const ScalarField& u);
double field_max(const ScalarField& u);
double field_mean(const ScalarField& u);

/// c = a + s*b
ScalarField add_scaled(const ScalarField& a, double s, const ScalarField& b);

void check_same_grid(const ScalarField& a, const ScalarField& b);

}  // namespace tvreg
