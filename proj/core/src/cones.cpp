#include "superq/cones.hpp"

#include <algorithm>
#include <cmath>

namespace superq {

std::string relation_name(Relation r) {
    switch (r) {
        case Relation::Ge0: return ">=0";
        case Relation::Gt0: return ">0";
        case Relation::Lt0: return "<0";
        case Relation::Eq0: return "=0";
        case Relation::Ne0: return "!=0";
    }
    return "?";
}

namespace {

bool compact_even(const Context& ctx, const Root& r) {
    return r.is_even() && is_compact(ctx.rf, ctx.rs, r);
}

}  // namespace

ConeRegion hc_cone(const Context& ctx) {
    ConeRegion region;
    for (const Root& r : ctx.ps.positives)
        region.constraints.push_back({r, compact_even(ctx, r) ? Relation::Ge0 : Relation::Lt0, false});
    return region;
}

ConeRegion parameter_set_C(const Context& ctx) {
    ConeRegion region = hc_cone(ctx);
    for (const Root& r : ctx.ps.positives)
        if (!compact_even(ctx, r)) region.constraints.push_back({r, Relation::Lt0, true});
    return region;
}

bool region_contains(const Context& ctx, const ConeRegion& region, const Vec& lam) {
    for (const Constraint& c : region.constraints) {
        Vec v = c.rho_shift ? add(lam, ctx.ps.rho) : lam;
        Rat value = pairing(ctx.rs, v, c.root.coords);
        switch (c.rel) {
            case Relation::Ge0:
                if (!(value >= 0)) return false;
                break;
            case Relation::Gt0:
                if (!(value > 0)) return false;
                break;
            case Relation::Lt0:
                if (!(value < 0)) return false;
                break;
            case Relation::Eq0:
                if (!(value == 0)) return false;
                break;
            case Relation::Ne0:
                if (value == 0) return false;
                break;
        }
    }
    return true;
}

std::vector<Root> closure_of_R(const Context& ctx, const std::vector<Root>& R) {
    for (const Root& r : R) {
        bool in_pi_c = false;
        for (const Root& s : ctx.ps.pi_c) in_pi_c = in_pi_c || s.coords == r.coords;
        if (!in_pi_c)
            throw Error("closure_of_R: " + root_to_string(ctx.rs, r.coords) +
                        " is not a compact simple root");
    }
    std::vector<Root> closure;
    if (R.empty()) return closure;
    const std::size_t d = static_cast<std::size_t>(ctx.rs.ambient_dim);
    Mat cols(d, Vec(R.size()));
    for (std::size_t j = 0; j < R.size(); ++j)
        for (std::size_t i = 0; i < d; ++i) cols[i][j] = R[j].coords[i];
    for (const Root& alpha : ctx.ps.positives) {
        auto coeff = solve(cols, alpha.coords);
        if (!coeff) continue;
        // verify (solve ignores inconsistency only via pivot check; re-check exactly)
        Vec recon(d, Rat(0));
        for (std::size_t j = 0; j < R.size(); ++j)
            recon = add(recon, scale((*coeff)[j], R[j].coords));
        if (recon != alpha.coords) continue;
        bool nonneg = std::all_of(coeff->begin(), coeff->end(), [](const Rat& c) { return c >= 0; });
        if (nonneg) closure.push_back(alpha);
    }
    return closure;
}

namespace {

std::vector<Vec> subspace_of(const Context& ctx, const std::vector<Root>& R) {
    Mat rows;
    for (const Root& r : R) rows.push_back(r.coords);
    if (ctx.rs.quotient_kernel) rows.push_back(*ctx.rs.quotient_kernel);
    if (rows.empty()) {
        std::vector<Vec> basis;
        for (std::size_t i = 0; i < static_cast<std::size_t>(ctx.rs.ambient_dim); ++i) {
            Vec e(ctx.rs.ambient_dim, Rat(0));
            e[i] = 1;
            basis.push_back(e);
        }
        return basis;
    }
    return nullspace(rows, static_cast<std::size_t>(ctx.rs.ambient_dim));
}

}  // namespace

std::vector<Cell> cells(const Context& ctx) {
    const std::vector<Root>& pi_c = ctx.ps.pi_c;
    if (pi_c.size() > 20) throw Error("too many compact simple roots for cell enumeration");
    std::vector<Cell> out;
    const std::size_t total = std::size_t{1} << pi_c.size();
    for (std::size_t mask = 0; mask < total; ++mask) {
        Cell cell;
        cell.index = mask;
        for (std::size_t i = 0; i < pi_c.size(); ++i)
            if (mask & (std::size_t{1} << i)) cell.R.push_back(pi_c[i]);
        cell.closure = closure_of_R(ctx, cell.R);
        cell.region = parameter_set_C(ctx);
        for (const Root& r : cell.R) cell.region.constraints.push_back({r, Relation::Eq0, false});
        for (std::size_t i = 0; i < pi_c.size(); ++i)
            if (!(mask & (std::size_t{1} << i)))
                cell.region.constraints.push_back({pi_c[i], Relation::Gt0, false});
        cell.subspace_basis = subspace_of(ctx, cell.R);
        out.push_back(std::move(cell));
    }
    return out;
}

std::optional<std::size_t> cell_of(const Context& ctx, const std::vector<Cell>& cs, const Vec& lam) {
    if (!region_contains(ctx, parameter_set_C(ctx), lam)) return std::nullopt;
    std::size_t mask = 0;
    for (std::size_t i = 0; i < ctx.ps.pi_c.size(); ++i)
        if (pairing(ctx.rs, lam, ctx.ps.pi_c[i].coords) == 0) mask |= std::size_t{1} << i;
    if (mask >= cs.size()) return std::nullopt;
    return region_contains(ctx, cs[mask].region, lam) ? std::optional<std::size_t>(mask)
                                                      : std::nullopt;
}

ConeRegion regular_set(const Context& ctx, const Cell& cell) {
    ConeRegion region;
    for (const Root& r : cell.R) region.constraints.push_back({r, Relation::Eq0, false});
    auto in_closure = [&](const Root& r) {
        for (const Root& c : cell.closure)
            if (c.coords == r.coords) return true;
        return false;
    };
    for (const Root& r : ctx.ps.positives)
        if (!in_closure(r)) region.constraints.push_back({r, Relation::Ne0, false});
    return region;
}

std::vector<Vec> enumerate_integral(const Context& ctx, const ConeRegion& region, int box,
                                    int lattice_den) {
    if (box < 0) throw Error("enumerate_integral: box must be nonnegative");
    if (lattice_den < 1) throw Error("enumerate_integral: lattice denominator must be >= 1");
    const int d = ctx.rs.ambient_dim;
    const long span = 2L * box * lattice_den + 1;
    double total = std::pow(static_cast<double>(span), d);
    if (total > 2e8) throw Error("enumerate_integral: box too large");

    std::vector<Vec> out;
    std::vector<long> idx(static_cast<std::size_t>(d), -static_cast<long>(box) * lattice_den);
    const long hi = static_cast<long>(box) * lattice_den;
    if (span <= 0) return out;
    while (true) {
        Vec lam(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) lam[static_cast<std::size_t>(i)] = Rat(idx[i], lattice_den);
        if (region_contains(ctx, region, lam)) out.push_back(lam);
        int pos = d - 1;
        while (pos >= 0) {
            if (idx[pos] < hi) {
                ++idx[pos];
                break;
            }
            idx[pos] = -hi;
            --pos;
        }
        if (pos < 0) break;
    }
    return out;
}

namespace {

// Pairing row of alpha acting on weights: lambda -> B(lambda, alpha).
Vec pairing_row(const Context& ctx, const Vec& alpha) { return mat_vec(ctx.rs.gram, alpha); }

}  // namespace

std::vector<Vec> extreme_rays(const Context& ctx, const Cell& cell) {
    const std::size_t d = static_cast<std::size_t>(ctx.rs.ambient_dim);
    // weight-space slice: vanish on R pairings; type A additionally pins the
    // last delta coordinate to zero to remove the lineality direction
    Mat eq_rows;
    for (const Root& r : cell.R) eq_rows.push_back(pairing_row(ctx, r.coords));
    if (ctx.rs.quotient_kernel) {
        Vec last(d, Rat(0));
        last[d - 1] = 1;
        eq_rows.push_back(last);
    }
    std::vector<Vec> slice =
        eq_rows.empty() ? subspace_of(ctx, {}) : nullspace(eq_rows, d);
    const std::size_t r = slice.size();

    std::size_t expected = d - cell.R.size() - (ctx.rs.quotient_kernel ? 1 : 0);
    if (r != expected)
        throw NotSimplicialError("cell subspace is degenerate: dimension " + std::to_string(r) +
                                 ", expected " + std::to_string(expected));

    std::vector<Vec> rows;
    for (const Root& root : ctx.ps.positives) {
        Vec g = pairing_row(ctx, root.coords);
        Vec row(r);
        for (std::size_t j = 0; j < r; ++j) row[j] = dot(g, slice[j]);
        if (!compact_even(ctx, root)) row = neg(row);  // noncompact/odd: B(lam, root) <= 0
        rows.push_back(std::move(row));
    }
    std::vector<Vec> z_rays = simplicial_cone_rays(rows, r);

    std::vector<Vec> rays;
    for (const Vec& z : z_rays) {
        Vec amb(d, Rat(0));
        for (std::size_t j = 0; j < r; ++j) amb = add(amb, scale(z[j], slice[j]));
        rays.push_back(primitive(amb));
    }
    std::sort(rays.begin(), rays.end(), lex_less);
    return rays;
}

Vec CellFrame::covector(const Vec& ambient_weight) const {
    Vec z(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) z[j] = dot(ambient_weight, basis[j]);
    return z;
}

Vec CellFrame::ambient_of(const Vec& covec) const {
    if (covec.size() != lift.size()) throw DimensionMismatchError("ambient_of: bad covector size");
    Vec out(lift.empty() ? 0 : lift[0].size(), Rat(0));
    for (std::size_t j = 0; j < lift.size(); ++j) out = add(out, scale(covec[j], lift[j]));
    return out;
}

CellFrame cell_frame(const Context& ctx, const Cell& cell) {
    CellFrame frame;
    frame.basis = cell.subspace_basis;
    const std::size_t d = static_cast<std::size_t>(ctx.rs.ambient_dim);
    const std::size_t r = frame.basis.size();

    // ambient representatives dual to the basis, constrained to the canonical
    // weight slice (R pairings zero; type A last delta coordinate zero)
    Mat sys;
    std::vector<std::size_t> rhs_rows;
    for (const Root& root : cell.R) sys.push_back(pairing_row(ctx, root.coords));
    if (ctx.rs.quotient_kernel) {
        Vec last(d, Rat(0));
        last[d - 1] = 1;
        sys.push_back(last);
    }
    for (std::size_t i = 0; i < r; ++i) {
        sys.push_back(frame.basis[i]);
        rhs_rows.push_back(sys.size() - 1);
    }
    for (std::size_t j = 0; j < r; ++j) {
        Vec rhs(sys.size(), Rat(0));
        rhs[rhs_rows[j]] = 1;
        auto w = solve(sys, rhs);
        if (!w) throw Error("cell frame is degenerate for " + ctx.rs.spec.name());
        frame.lift.push_back(*w);
    }

    auto in_closure = [&](const Root& root) {
        for (const Root& c : cell.closure)
            if (c.coords == root.coords) return true;
        return false;
    };
    for (const Root& root : ctx.ps.positives) {
        Vec g = pairing_row(ctx, root.coords);
        Vec row(r);
        for (std::size_t j = 0; j < r; ++j) row[j] = dot(g, frame.lift[j]);
        if (!in_closure(root)) {
            frame.regular_rows.push_back(row);
            frame.regular_labels.push_back(root_to_string(ctx.rs, root.coords));
        }
        if (compact_even(ctx, root)) {
            frame.hc_rows.push_back(row);  // weak: row.z >= 0
            frame.hc_strict.push_back(false);
        } else {
            frame.hc_rows.push_back(neg(row));  // strict: row.z > 0 after negation
            frame.hc_strict.push_back(true);
        }
    }
    return frame;
}

}  // namespace superq
