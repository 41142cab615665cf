#include "superq/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "superq/errors.hpp"

namespace superq {

Rat dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatchError("dot: size mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatchError("add: size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatchError("sub: size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec scale(const Rat& c, const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

Vec neg(const Vec& v) { return scale(Rat(-1), v); }

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

bool lex_less(const Vec& a, const Vec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string vec_to_string(const Vec& v, char sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += rat_to_string(v[i]);
    }
    return out;
}

Vec vec_from_string(std::string_view s) {
    Vec out;
    std::string token;
    std::string str(s);
    for (char& c : str)
        if (c == ',' || c == ';') c = ' ';
    std::istringstream in(str);
    while (in >> token) out.push_back(rat_from_string(token));
    return out;
}

Mat identity(std::size_t n) {
    Mat a(n, Vec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) a[i][i] = 1;
    return a;
}

Vec mat_vec(const Mat& a, const Vec& x) {
    Vec r(a.size(), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], x);
    return r;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.empty() || b.empty()) return {};
    Mat r(a.size(), Vec(b[0].size(), Rat(0)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < b[0].size(); ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

Mat transpose(const Mat& a) {
    if (a.empty()) return {};
    Mat r(a[0].size(), Vec(a.size(), Rat(0)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
    return r;
}

namespace {

// Row reduction; returns pivot columns. Operates in place.
std::vector<std::size_t> rref(Mat& a) {
    std::vector<std::size_t> pivots;
    if (a.empty()) return pivots;
    std::size_t rows = a.size(), cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        Rat inv = Rat(1) / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(Mat a) { return rref(a).size(); }

std::vector<Vec> nullspace(const Mat& rows, std::size_t dim) {
    Mat a = rows;
    for (const Vec& r : a)
        if (r.size() != dim) throw DimensionMismatchError("nullspace: row size mismatch");
    std::vector<std::size_t> pivots = rref(a);
    std::vector<bool> is_pivot(dim, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < dim; ++free) {
        if (is_pivot[free]) continue;
        Vec v(dim, Rat(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(Mat a, Vec b) {
    std::size_t rows = a.size();
    if (rows != b.size()) throw DimensionMismatchError("solve: rhs size mismatch");
    std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    std::vector<std::size_t> pivots = rref(a);
    // Inconsistent if a pivot landed in the rhs column.
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    Vec x(cols, Rat(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][cols];
    return x;
}

std::optional<Mat> inverse(const Mat& a) {
    std::size_t n = a.size();
    Mat work = a;
    for (std::size_t i = 0; i < n; ++i) {
        if (work[i].size() != n) throw DimensionMismatchError("inverse: not square");
        Vec id(n, Rat(0));
        id[i] = 1;
        work[i].insert(work[i].end(), id.begin(), id.end());
    }
    std::vector<std::size_t> pivots = rref(work);
    if (pivots.size() != n) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i)
        if (pivots[i] != i) return std::nullopt;
    Mat inv(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = work[i][n + j];
    return inv;
}

Rat det(Mat a) {
    std::size_t n = a.size();
    Rat d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            d = -d;
        }
        d *= a[c][c];
        Rat inv = Rat(1) / a[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            Rat f = a[i][c] * inv;
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return d;
}

Vec primitive(const Vec& v) {
    BigInt lcm = 1;
    for (const Rat& x : v) {
        BigInt den = denominator(x);
        lcm = lcm / gcd(lcm, den) * den;
    }
    BigInt g = 0;
    std::vector<BigInt> ints(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        ints[i] = numerator(v[i]) * (lcm / denominator(v[i]));
        g = gcd(g, ints[i]);
    }
    if (g == 0) return Vec(v.size(), Rat(0));
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(ints[i] / g);
    return out;
}

bool is_positive_semidefinite(const Mat& a) {
    std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw DimensionMismatchError("psd: not square");
        for (std::size_t j = 0; j < n; ++j)
            if (a[i][j] != a[j][i]) return false;
    }
    if (n > 16) throw Error("psd: matrix too large for the exact minor test");
    for (std::size_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        Mat sub(idx.size(), Vec(idx.size()));
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) sub[i][j] = a[idx[i]][idx[j]];
        if (det(sub) < 0) return false;
    }
    return true;
}

}  // namespace superq
