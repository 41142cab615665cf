#include "oracles.hpp"

#include <superq/errors.hpp>

#include <algorithm>
#include <map>

namespace superq::oracles {

namespace {

using SqMat = std::vector<std::vector<Rat>>;

SqMat zeros(std::size_t n) { return SqMat(n, std::vector<Rat>(n, Rat(0))); }

SqMat mul(const SqMat& a, const SqMat& b) {
    std::size_t n = a.size();
    SqMat c = zeros(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

SqMat commutator(const SqMat& a, const SqMat& b) {
    SqMat ab = mul(a, b), ba = mul(b, a);
    std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) ab[i][j] -= ba[i][j];
    return ab;
}

}  // namespace

std::vector<OracleRoot> type_a_roots(int m, int n) {
    const int me = m + 1, ne = n + 1;
    const int N = me + ne;
    // Cartan basis of gl: E_ii. For every off-diagonal matrix unit E_ab,
    // bracket against each Cartan generator and read the eigenvalue.
    std::vector<OracleRoot> out;
    for (int a = 0; a < N; ++a) {
        for (int b = 0; b < N; ++b) {
            if (a == b) continue;
            SqMat e = zeros(N);
            e[a][b] = 1;
            Vec weight(N, Rat(0));
            for (int i = 0; i < N; ++i) {
                SqMat h = zeros(N);
                h[i][i] = 1;
                SqMat br = commutator(h, e);
                // br must be a scalar multiple of e
                Rat c = br[a][b];
                for (int r = 0; r < N; ++r)
                    for (int s = 0; s < N; ++s) {
                        Rat expect = (r == a && s == b) ? c : Rat(0);
                        if (br[r][s] != expect) throw Error("oracle: not an ad eigenvector");
                    }
                weight[i] = c;
            }
            Parity parity = ((a < me) != (b < me)) ? Parity::Odd : Parity::Even;
            out.push_back({weight, parity});
        }
    }
    return out;
}

namespace {

// split symmetric form for so, standard antisymmetric form for sp
Mat so_form(int M) {
    int m = M / 2;
    Mat g(M, Vec(M, Rat(0)));
    for (int i = 0; i < m; ++i) {
        g[i][m + i] = 1;
        g[m + i][i] = 1;
    }
    if (M % 2 == 1) g[M - 1][M - 1] = 1;
    return g;
}

Mat sp_form(int two_n) {
    int n = two_n / 2;
    Mat j(two_n, Vec(two_n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        j[i][n + i] = 1;
        j[n + i][i] = -1;
    }
    return j;
}

}  // namespace

std::vector<OracleRoot> osp_roots(Family family, int m, int n) {
    int M = 0, eps = 0, nd = 0;
    switch (family) {
        case Family::B: M = 2 * m + 1, eps = m, nd = n; break;
        case Family::C: M = 2, eps = 1, nd = n - 1; break;
        case Family::D: M = 2 * m, eps = m, nd = n; break;
        default: throw Error("osp oracle covers B, C, D only");
    }
    const int S = 2 * nd;   // symplectic size
    const int N = M + S;    // full supermatrix size
    Mat G = so_form(M), J = sp_form(S);

    // coordinate of each index in the (eps | delta) weight basis; the middle
    // so index (odd M) carries weight zero
    const int dim = eps + nd;
    auto coord = [&](int idx) {
        Vec c(dim, Rat(0));
        if (idx < M) {
            int half = M / 2;
            if (idx < half)
                c[idx] = 1;
            else if (idx < 2 * half)
                c[idx - half] = -1;
        } else {
            int j = idx - M;
            if (j < nd)
                c[eps + j] = 1;
            else
                c[eps + j - nd] = -1;
        }
        return c;
    };

    // X^st Phi + Phi X with X = E_ab, evaluated entrywise:
    //   X^st = [[A', C'], [-B', D']] for X = [[A, B], [C, D]]
    auto condition = [&](int a, int b) {
        Mat x(N, Vec(N, Rat(0)));
        x[a][b] = 1;
        Mat xst(N, Vec(N, Rat(0)));
        for (int r = 0; r < N; ++r)
            for (int s = 0; s < N; ++s) {
                if (x[r][s] == 0) continue;
                Rat sign = (r >= M && s < M) ? Rat(-1) : Rat(1);  // -B' block
                xst[s][r] = sign * x[r][s];
            }
        Mat phi(N, Vec(N, Rat(0)));
        for (int r = 0; r < M; ++r)
            for (int s = 0; s < M; ++s) phi[r][s] = G[r][s];
        for (int r = 0; r < S; ++r)
            for (int s = 0; s < S; ++s) phi[M + r][M + s] = J[r][s];
        Mat out(N, Vec(N, Rat(0)));
        for (int r = 0; r < N; ++r)
            for (int s = 0; s < N; ++s) {
                Rat v = 0;
                for (int k = 0; k < N; ++k) v += xst[r][k] * phi[k][s] + phi[r][k] * x[k][s];
                out[r][s] = v;
            }
        return out;
    };

    // group matrix units by Cartan weight
    std::map<Vec, std::vector<std::pair<int, int>>> groups;
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            if (a == b) continue;
            Vec w = sub(coord(a), coord(b));
            if (is_zero(w)) continue;
            groups[w].push_back({a, b});
        }

    std::vector<OracleRoot> out;
    for (const auto& [w, units] : groups) {
        // solve the invariance condition restricted to this weight space
        Mat rows;  // unknowns: coefficients of the units
        for (int r = 0; r < N; ++r)
            for (int s = 0; s < N; ++s) rows.emplace_back(units.size(), Rat(0));
        for (std::size_t u = 0; u < units.size(); ++u) {
            Mat cond = condition(units[u].first, units[u].second);
            for (int r = 0; r < N; ++r)
                for (int s = 0; s < N; ++s) rows[static_cast<std::size_t>(r) * N + s][u] = cond[r][s];
        }
        std::vector<Vec> kernel = nullspace(rows, units.size());
        if (kernel.empty()) continue;
        if (kernel.size() != 1) throw Error("oracle: unexpected root multiplicity");
        Parity parity = ((units[0].first < M) != (units[0].second < M)) ? Parity::Odd : Parity::Even;
        for (const auto& [a, b] : units) {
            Parity pu = ((a < M) != (b < M)) ? Parity::Odd : Parity::Even;
            if (pu != parity) throw Error("oracle: mixed parity weight space");
        }
        out.push_back({w, parity});
    }
    return out;
}

std::vector<Vec> dd_rays_bruteforce(const std::vector<Vec>& rows, std::size_t dim) {
    std::vector<Vec> clean;
    for (const Vec& r : rows) {
        Vec p = primitive(r);
        if (!is_zero(p)) clean.push_back(p);
    }
    std::vector<Vec> rays;
    // iterate over all (dim-1)-subsets
    std::vector<std::size_t> idx(dim - 1);
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    if (clean.size() + 1 < dim) return rays;
    while (true) {
        Mat sub;
        for (std::size_t i : idx) sub.push_back(clean[i]);
        std::vector<Vec> kernel = nullspace(sub, dim);
        if (kernel.size() == 1) {
            for (int sign : {1, -1}) {
                Vec v = scale(Rat(sign), kernel[0]);
                bool ok = true;
                for (const Vec& r : clean) ok = ok && dot(r, v) >= 0;
                if (!ok) continue;
                Vec p = primitive(v);
                if (std::find(rays.begin(), rays.end(), p) == rays.end()) rays.push_back(p);
            }
        }
        // next combination
        std::size_t k = idx.size();
        while (k > 0) {
            --k;
            if (idx[k] + (idx.size() - k) < clean.size()) {
                ++idx[k];
                for (std::size_t j = k + 1; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (k == 0) {
                std::sort(rays.begin(), rays.end(), lex_less);
                return rays;
            }
        }
        if (idx.empty()) break;
    }
    std::sort(rays.begin(), rays.end(), lex_less);
    return rays;
}

}  // namespace superq::oracles
