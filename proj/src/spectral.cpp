#include "conespectra/spectral.hpp"
#include "conespectra/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace conespectra {

std::vector<std::vector<double>> assemble(const Graph& g, double alpha) {
    if (alpha < 0) fail("RangeError", "alpha must be non-negative");
    const int n = g.size();
    std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
    for (int v = 0; v < n; ++v) {
        m[v][v] = alpha * g.degree(v);
        for (int w : g.neighbors(v)) m[v][w] = 1.0;
    }
    return m;
}

PerronResult theta(const Graph& g, double alpha, double tol, long max_iterations) {
    if (alpha < 0) fail("RangeError", "alpha must be non-negative");
    if (tol <= 0) fail("RangeError", "tolerance must be positive");
    if (!g.connected()) fail("Disconnected", "dominant weights need a connected graph");

    const int n = g.size();
    PerronResult res;
    if (n == 1) {
        res.theta = 0.0;
        res.weights = {1.0};
        return res;
    }

    int max_deg = 0;
    for (int v = 0; v < n; ++v) max_deg = std::max(max_deg, g.degree(v));
    const double sigma = alpha * max_deg + 1.0;

    std::vector<double> f(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> mf(n);
    double est = 0.0, residual = 0.0;
    long it = 0;
    for (; it < max_iterations; ++it) {
        // mf = M_alpha * f (without the shift; the shift only enters the
        // normalization step below)
        for (int v = 0; v < n; ++v) {
            double acc = alpha * g.degree(v) * f[v];
            for (int w : g.neighbors(v)) acc += f[w];
            mf[v] = acc;
        }
        est = 0.0;  // Rayleigh quotient; f stays unit-norm
        for (int v = 0; v < n; ++v) est += f[v] * mf[v];
        residual = 0.0;
        for (int v = 0; v < n; ++v) residual = std::max(residual, std::fabs(mf[v] - est * f[v]));
        if (residual <= tol) break;

        double norm = 0.0;
        for (int v = 0; v < n; ++v) {
            mf[v] += sigma * f[v];
            norm += mf[v] * mf[v];
        }
        norm = std::sqrt(norm);
        for (int v = 0; v < n; ++v) f[v] = mf[v] / norm;
    }
    if (residual > tol) {
        std::ostringstream msg;
        msg << "no convergence after " << max_iterations << " iterations; best estimate "
            << est << " with residual " << residual;
        fail("NoConvergence", msg.str());
    }
    res.theta = est;
    res.weights = std::move(f);
    res.residual = residual;
    res.iterations = it;
    return res;
}

double rayleigh(const Graph& g, double alpha, const std::vector<double>& phi) {
    if (alpha < 0) fail("RangeError", "alpha must be non-negative");
    if (static_cast<int>(phi.size()) != g.size())
        fail("LengthMismatch", "vector length " + std::to_string(phi.size()) + " vs " +
                                   std::to_string(g.size()) + " vertices");
    double norm2 = 0.0;
    for (double x : phi) norm2 += x * x;
    if (std::fabs(std::sqrt(norm2) - 1.0) > 1e-9)
        fail("NotUnit", "vector norm is " + std::to_string(std::sqrt(norm2)));

    double val = 0.0;
    for (auto [u, v] : g.edges()) val += 2.0 * phi[u] * phi[v];
    for (int v = 0; v < g.size(); ++v) val += alpha * g.degree(v) * phi[v] * phi[v];
    return val;
}

ThetaOrder compare_theta(const Graph& g1, const Graph& g2, double alpha, double margin) {
    if (margin <= 0) fail("RangeError", "margin must be positive");
    const double tol = std::min(1e-12, margin / 10.0);
    double t1 = theta(g1, alpha, tol).theta;
    double t2 = theta(g2, alpha, tol).theta;
    if (t1 + margin < t2) return ThetaOrder::Less;
    if (t2 + margin < t1) return ThetaOrder::Greater;
    return ThetaOrder::Indistinguishable;
}

} // namespace conespectra
