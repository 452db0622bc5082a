#pragma once

#include "tvreg/field.hpp"

namespace tvreg {

/// Exact minimizer of the discrete 1D functional
///   J_mu(u) = mu * sum_i |u_{i+1}-u_i| + (h/2) * sum_i (u_i-f_i)^2
/// via the taut-string construction (pools merged in a left-to-right sweep).
ScalarField taut_string_1d(const ScalarField& f, double mu);

/// State of the dual fixed-point iteration for min_u mu*TV(u) + 1/2|u-f|^2.
struct DualState {
    VectorField p;          // dual field, |p| <= mu per cell after projection
    ScalarField u;          // primal estimate f + div p
    int iterations = 0;
    double gap = 0.0;       // duality-gap estimate at the returned iterate
    bool converged = false;
    std::vector<double> energy_trace;  // primal energy per iteration, non-increasing
};

/// Projected-gradient iteration on the dual with the classical stable step
/// for the 4/h^2-bounded discrete Laplacian, plus Nesterov extrapolation
/// with gradient restarts. The returned iterate is the best primal energy
/// seen, so the exposed energy trace is non-increasing by construction.
DualState dual_projection(const ScalarField& f, double mu, double tol, int max_iter);

/// Discrete J_mu(u) = mu*||grad u||_1 + 1/2*||u-f||_2^2.
double energy_tv(const ScalarField& u, const ScalarField& f, double mu);

/// Discrete integral of delta*|grad u|^2/2 + sqrt(eps+|grad u|^2) plus the
/// quadratic data term, with the same cell-anchored gradient magnitude as
/// energy_tv.
double energy_regularized(const ScalarField& u, const ScalarField& f, double eps,
                          double delta);

}  // namespace tvreg
