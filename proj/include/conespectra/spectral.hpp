#pragma once

#include "conespectra/graph.hpp"

#include <vector>

namespace conespectra {

// Dominant eigenpair of M_alpha = A + alpha * D. theta is the largest
// eigenvalue, weights the positive unit eigenvector (the per-vertex weight
// function), residual the max-norm of M*f - theta*f at return.
struct PerronResult {
    double theta = 0.0;
    std::vector<double> weights;
    double residual = 0.0;
    long iterations = 0;
};

// Dense M_alpha as a row-major symmetric matrix (adjacency plus alpha times
// the degree on the diagonal). Requires alpha >= 0.
std::vector<std::vector<double>> assemble(const Graph& g, double alpha);

// Power iteration on M_alpha + sigma*I with sigma = alpha * max_degree + 1,
// which keeps the dominant eigenvalue simple and strictly largest in
// magnitude for every connected graph. Stops when the residual max-norm
// drops to tol; throws NoConvergence (with the best estimate in the
// message) after max_iterations, Disconnected for disconnected input.
PerronResult theta(const Graph& g, double alpha, double tol = 1e-12,
                   long max_iterations = 1000000);

// 2 * sum_{uv in E} phi(u) phi(v) + alpha * sum_v d(v) phi(v)^2 for a unit
// vector phi; throws NotUnit when | ||phi|| - 1 | > 1e-9, LengthMismatch on
// wrong dimension.
double rayleigh(const Graph& g, double alpha, const std::vector<double>& phi);

enum class ThetaOrder { Less, Greater, Indistinguishable };

// Compares dominant eigenvalues with a strictness margin: Less when
// theta(g1) + margin < theta(g2), Greater symmetrically, otherwise
// Indistinguishable. Both values are resolved to a residual below margin/10.
ThetaOrder compare_theta(const Graph& g1, const Graph& g2, double alpha,
                         double margin = 1e-9);

} // namespace conespectra
