#pragma once

#include <superq/rootdata.hpp>

#include <Eigen/Dense>
#include <vector>

namespace superq::oracles {

struct OracleRoot {
    Vec coords;
    Parity parity;
};

/// Roots of sl(m+1|n+1) from the matrix-unit realization inside gl(m+1|n+1):
/// brackets of the diagonal Cartan basis against every matrix unit, read off
/// as ad-eigenvalues.
std::vector<OracleRoot> type_a_roots(int m, int n);

/// Roots of the orthosymplectic families from the defining realization: the
/// invariance condition X^st Phi + Phi X = 0 is solved exactly on every
/// Cartan weight space of gl(M|2n); a root is a weight with nonzero solution
/// space (the test also asserts one-dimensionality).
std::vector<OracleRoot> osp_roots(Family family, int m, int n);

/// Brute-force double description: extreme rays of {x : rows.x >= 0} by
/// scanning all (dim-1)-subsets of the rows. Pointed full-dimensional cones
/// only; primitive integer output in lex order.
std::vector<Vec> dd_rays_bruteforce(const std::vector<Vec>& rows, std::size_t dim);

/// Central finite difference gradient of a scalar function.
template <typename F>
Eigen::VectorXd fd_gradient(const F& f, const Eigen::VectorXd& x, double h = 1e-5) {
    Eigen::VectorXd g(x.size());
    for (long i = 0; i < x.size(); ++i) {
        Eigen::VectorXd hi = x, lo = x;
        hi[i] += h;
        lo[i] -= h;
        g[i] = (f(hi) - f(lo)) / (2 * h);
    }
    return g;
}

}  // namespace superq::oracles
