#include "superq/halfspaces.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "superq/errors.hpp"

namespace superq {

namespace {

struct Row {
    Vec a;
    bool strict = false;
};

// Primitive integer normalization keeps coefficients small across eliminations.
Row normalize(Row r) {
    r.a = primitive(r.a);
    return r;
}

// nullopt = system infeasible; otherwise rows with the trivial ones dropped
std::optional<std::vector<Row>> simplify(std::vector<Row> rows) {
    std::map<Vec, bool> seen;  // coefficient vector -> strict
    for (Row& r : rows) {
        r = normalize(std::move(r));
        if (is_zero(r.a)) {
            if (r.strict) return std::nullopt;  // 0 > 0
            continue;
        }
        auto [it, inserted] = seen.emplace(r.a, r.strict);
        if (!inserted) it->second = it->second || r.strict;
    }
    std::vector<Row> out;
    out.reserve(seen.size());
    for (auto& [a, strict] : seen) out.push_back({a, strict});
    return out;
}

struct Level {
    std::size_t var;
    std::vector<Row> rows;  // rows mentioning var, before elimination
};

// Eliminates variables from the last index down; records each level for the
// witness back-substitution.
std::optional<std::vector<Level>> eliminate(std::vector<Row> rows, std::size_t dim) {
    std::vector<Level> levels;
    for (std::size_t v = dim; v-- > 0;) {
        auto simplified = simplify(std::move(rows));
        if (!simplified) return std::nullopt;
        rows = std::move(*simplified);
        Level level{v, {}};
        std::vector<Row> rest;
        std::vector<const Row*> lower, upper;
        for (Row& r : rows) {
            if (r.a[v] == 0) {
                rest.push_back(r);
            } else {
                level.rows.push_back(r);
            }
        }
        for (const Row& r : level.rows) (r.a[v] > 0 ? lower : upper).push_back(&r);
        for (const Row* lo : lower)
            for (const Row* up : upper) {
                // lo: a.x >= 0 with a_v > 0, up: b.x >= 0 with b_v < 0
                Row combined;
                combined.strict = lo->strict || up->strict;
                combined.a = add(scale(-up->a[v], lo->a), scale(lo->a[v], up->a));
                combined.a[v] = 0;
                rest.push_back(std::move(combined));
            }
        levels.push_back(std::move(level));
        rows = std::move(rest);
    }
    auto final_rows = simplify(std::move(rows));
    if (!final_rows) return std::nullopt;
    return levels;
}

// Strict or weak one-sided bound on a single variable.
struct Bound {
    Rat value;
    bool strict = false;
};

Vec backsolve(const std::vector<Level>& levels, std::size_t dim) {
    Vec x(dim, Rat(0));
    for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
        std::size_t v = it->var;
        std::optional<Bound> lo, up;
        for (const Row& r : it->rows) {
            Rat rest = 0;
            for (std::size_t j = 0; j < dim; ++j)
                if (j != v) rest += r.a[j] * x[j];
            Rat bound = -rest / r.a[v];
            if (r.a[v] > 0) {
                if (!lo || bound > lo->value || (bound == lo->value && r.strict))
                    lo = Bound{bound, r.strict};
            } else {
                if (!up || bound < up->value || (bound == up->value && r.strict))
                    up = Bound{bound, r.strict};
            }
        }
        Rat val;
        if (lo && up) {
            if (lo->value == up->value) {
                val = lo->value;  // elimination guarantees neither side is strict here
            } else {
                val = (lo->value + up->value) / 2;
            }
        } else if (lo) {
            val = lo->strict ? lo->value + 1 : lo->value;
        } else if (up) {
            val = up->strict ? up->value - 1 : up->value;
        } else {
            val = 0;
        }
        x[v] = val;
    }
    return x;
}

// Substitutes an equality row into the system, eliminating one variable.
struct EqSubstitution {
    std::size_t var;
    Vec expr;  // x_var = expr . x (expr[var] == 0)
};

}  // namespace

FeasibilityResult feasible(const std::vector<HalfSpace>& input, std::size_t dim) {
    for (const HalfSpace& h : input)
        if (h.a.size() != dim) throw DimensionMismatchError("feasible: row size mismatch");

    // Phase 1: remove equalities by substitution.
    std::vector<Row> rows;
    std::vector<EqSubstitution> subs;
    std::vector<Vec> eqs;
    for (const HalfSpace& h : input) {
        if (h.rel == Rel::Eq)
            eqs.push_back(h.a);
        else
            rows.push_back({h.a, h.rel == Rel::Gt});
    }
    for (Vec eq : eqs) {
        for (const EqSubstitution& s : subs) {
            if (eq[s.var] == 0) continue;
            Rat c = eq[s.var];
            eq[s.var] = 0;
            eq = add(eq, scale(c, s.expr));
        }
        eq = primitive(eq);
        if (is_zero(eq)) continue;
        std::size_t var = 0;
        while (eq[var] == 0) ++var;
        Vec expr = scale(Rat(-1) / eq[var], eq);
        expr[var] = 0;
        subs.push_back({var, expr});
        for (Row& r : rows) {
            if (r.a[var] == 0) continue;
            Rat c = r.a[var];
            r.a[var] = 0;
            r.a = add(r.a, scale(c, expr));
        }
    }

    auto levels = eliminate(rows, dim);
    if (!levels) return {false, std::nullopt};
    Vec x = backsolve(*levels, dim);
    // Fold the equality substitutions back in, most recent first.
    for (auto it = subs.rbegin(); it != subs.rend(); ++it) x[it->var] = dot(it->expr, x);
    return {true, x};
}

bool is_redundant(const std::vector<HalfSpace>& rows, std::size_t dim, std::size_t idx) {
    std::vector<HalfSpace> test;
    test.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == idx) continue;
        test.push_back(rows[i]);
    }
    // violating half-space: a.x < 0, i.e. (-a).x > 0
    test.push_back({neg(rows[idx].a), Rel::Gt});
    return !feasible(test, dim).feasible;
}

std::vector<Vec> simplicial_cone_rays(const std::vector<Vec>& inequality_rows, std::size_t dim) {
    std::vector<HalfSpace> rows;
    for (const Vec& a : inequality_rows) {
        Vec p = primitive(a);
        if (is_zero(p)) continue;
        bool dup = false;
        for (const HalfSpace& h : rows) dup = dup || h.a == p;
        if (!dup) rows.push_back({p, Rel::Ge});
    }
    // peel off redundant facets
    for (std::size_t i = 0; i < rows.size();) {
        if (is_redundant(rows, dim, i))
            rows.erase(rows.begin() + static_cast<long>(i));
        else
            ++i;
    }
    if (rows.size() != dim)
        throw NotSimplicialError("cone has " + std::to_string(rows.size()) +
                                 " irredundant facets in dimension " + std::to_string(dim));
    Mat a(dim);
    for (std::size_t i = 0; i < dim; ++i) a[i] = rows[i].a;
    auto inv = inverse(a);
    if (!inv)
        throw NotSimplicialError("facet normals are linearly dependent; cone is not full-dimensional");
    std::vector<Vec> rays;
    Mat cols = transpose(*inv);
    for (std::size_t j = 0; j < dim; ++j) rays.push_back(primitive(cols[j]));
    std::sort(rays.begin(), rays.end(), lex_less);
    return rays;
}

}  // namespace superq
