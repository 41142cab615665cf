#include "superq/possys.hpp"

#include <algorithm>

namespace superq {

bool PositiveSystem::is_positive(const Vec& coords) const {
    for (const Root& r : positives)
        if (r.coords == coords) return true;
    return false;
}

PositiveSystem positive_system(const RootSystem& rs, const RealForm& rf, const Vec& functional) {
    if (static_cast<int>(functional.size()) != rs.ambient_dim)
        throw DimensionMismatchError("functional dimension does not match " + rs.spec.name());
    PositiveSystem ps;
    ps.functional = functional;
    for (const Root& r : rs.roots) {
        Rat v = dot(r.coords, functional);
        if (v == 0)
            throw DegenerateFunctionalError("functional annihilates root " +
                                            root_to_string(rs, r.coords));
        if (v > 0) ps.positives.push_back(r);
    }
    std::sort(ps.positives.begin(), ps.positives.end(),
              [](const Root& a, const Root& b) { return lex_less(a.coords, b.coords); });

    // simple = positive that is not a sum of two positives
    for (const Root& r : ps.positives) {
        bool decomposable = false;
        for (const Root& a : ps.positives) {
            if (decomposable) break;
            for (const Root& b : ps.positives) {
                if (add(a.coords, b.coords) == r.coords) {
                    decomposable = true;
                    break;
                }
            }
        }
        if (!decomposable) ps.simples.push_back(r);
    }
    for (const Root& s : ps.simples)
        if (s.is_even() && is_compact(rf, rs, s)) ps.pi_c.push_back(s);

    Vec acc(rs.ambient_dim, Rat(0));
    for (const Root& r : ps.positives) acc = r.is_even() ? add(acc, r.coords) : sub(acc, r.coords);
    ps.rho = scale(Rat(1, 2), acc);
    return ps;
}

Vec default_functional(const RootSystem& rs) {
    const int d = rs.ambient_dim;
    const int eps = rs.eps_count;
    Vec f(d, Rat(0));
    switch (rs.spec.family) {
        case Family::A:
            for (int i = 0; i < d; ++i) f[i] = d - i;
            break;
        case Family::B:
        case Family::C:
        case Family::D: {
            // decreasing within both blocks, delta block dominant
            const Rat big = Rat(10 * (eps + 1));
            for (int i = 0; i < eps; ++i) f[i] = eps - i;
            for (int j = eps; j < d; ++j) f[j] = big * Rat(d - j);
            break;
        }
        case Family::D21:
            f = {Rat(40), Rat(2), Rat(1)};
            break;
        case Family::F4:
            f = {Rat(40), Rat(2), Rat(1), Rat(1, 7)};
            break;
        case Family::G3:
            f = {Rat(3), Rat(2), Rat(1, 7)};
            break;
    }
    return f;
}

namespace {

// positive noncompact even and odd roots: the q+ directions of the test
std::vector<Root> q_plus(const PositiveSystem& ps, const RootSystem& rs, const RealForm& rf) {
    std::vector<Root> out;
    for (const Root& r : ps.positives)
        if (!r.is_even() || !is_compact(rf, rs, r)) out.push_back(r);
    return out;
}

}  // namespace

LiteralAdmissibility admissible_literal(const PositiveSystem& ps, const RootSystem& rs,
                                        const RealForm& rf) {
    LiteralAdmissibility out;
    std::vector<Root> q = q_plus(ps, rs, rf);
    auto in_q = [&](const Vec& v) {
        for (const Root& r : q)
            if (r.coords == v) return true;
        return false;
    };

    for (const Root& alpha : rs.roots) {
        if (!alpha.is_even() || !is_compact(rf, rs, alpha)) continue;
        for (const Root& beta : q) {
            Vec sum = add(alpha.coords, beta.coords);
            if (!rs.contains(sum)) continue;
            if (!in_q(sum)) {
                out.k_stable = false;
                out.k_witnesses.emplace_back(alpha, beta);
            }
        }
    }
    for (std::size_t i = 0; i < q.size(); ++i) {
        for (std::size_t j = i; j < q.size(); ++j) {
            if (i == j && q[i].is_even()) continue;  // [x,x] = 0 for even x
            Vec sum = add(q[i].coords, q[j].coords);
            if (rs.contains(sum)) {
                out.q_abelian = false;
                out.q_witnesses.emplace_back(q[i], q[j]);
            }
        }
    }
    return out;
}

ConeFeasibility admissible_feasible(const PositiveSystem& ps, const RootSystem& rs,
                                    const RealForm& rf) {
    std::vector<HalfSpace> rows;
    const std::size_t dim = static_cast<std::size_t>(rs.ambient_dim);
    for (const Root& r : ps.positives) {
        // constraint on lambda: B(lambda, r) >= 0 (compact) or < 0 (otherwise)
        Vec row = mat_vec(rs.gram, r.coords);
        if (r.is_even() && is_compact(rf, rs, r))
            rows.push_back({row, Rel::Ge});
        else
            rows.push_back({neg(row), Rel::Gt});
    }
    FeasibilityResult res = feasible(rows, dim);
    return {res.feasible, res.witness};
}

Context make_context(const AlgebraSpec& spec, const RealForm& rf, std::optional<Vec> functional) {
    Context ctx;
    ctx.rs = build_root_system(spec);
    ctx.rf = rf;
    Vec f = functional ? *functional : default_functional(ctx.rs);
    ctx.ps = positive_system(ctx.rs, ctx.rf, f);
    return ctx;
}

}  // namespace superq
