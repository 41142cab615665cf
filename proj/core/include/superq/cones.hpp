#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "superq/possys.hpp"

namespace superq {

enum class Relation { Ge0, Gt0, Lt0, Eq0, Ne0 };

std::string relation_name(Relation r);

/// One row of a rational region description: (lam [+ rho])(h_root) REL 0.
struct Constraint {
    Root root;
    Relation rel = Relation::Ge0;
    bool rho_shift = false;
};

struct ConeRegion {
    std::vector<Constraint> constraints;
};

/// Harish-Chandra cone: >=0 on positive compact roots, <0 on positive
/// noncompact and odd roots.
ConeRegion hc_cone(const Context& ctx);

/// The parameter set: the cone plus the rho-shifted strict conditions.
ConeRegion parameter_set_C(const Context& ctx);

bool region_contains(const Context& ctx, const ConeRegion& region, const Vec& lam);

/// Positive roots expressible as nonnegative rational combinations of R.
std::vector<Root> closure_of_R(const Context& ctx, const std::vector<Root>& R);

struct Cell {
    std::size_t index = 0;            // position in the deterministic cell list
    std::vector<Root> R;              // subset of the compact simples
    std::vector<Root> closure;        // R-bar inside the positives
    ConeRegion region;                // (vanishing on R, positive elsewhere) + C
    std::vector<Vec> subspace_basis;  // basis of h_sigma in ambient coordinates
};

/// One cell per subset of Pi_c, in binary-counter order over the Pi_c list.
std::vector<Cell> cells(const Context& ctx);

/// Index of the unique cell whose region contains lam, or nullopt when lam is
/// outside the parameter set.
std::optional<std::size_t> cell_of(const Context& ctx, const std::vector<Cell>& cs, const Vec& lam);

/// Regular functionals of the cell subspace: zero on R, nonzero on the
/// positives outside the closure of R.
ConeRegion regular_set(const Context& ctx, const Cell& cell);

/// All lattice points of the region with |coordinate| <= box, in lexicographic
/// order. The lattice is (1/lattice_den) Z^d.
std::vector<Vec> enumerate_integral(const Context& ctx, const ConeRegion& region, int box,
                                    int lattice_den = 1);

/// Primitive integral generators of the cell's homogeneous cone (rho-shifted
/// rows dropped, strictness relaxed, type A reduced to the last-delta-zero
/// slice). Throws NotSimplicialError when the ray count differs from dim.
std::vector<Vec> extreme_rays(const Context& ctx, const Cell& cell);

/// Linear bookkeeping identifying a_sigma with R^r: a basis of the subspace,
/// ambient representatives dual to it, and the pairing rows needed to test
/// moment values against the regular set and the Harish-Chandra cone.
struct CellFrame {
    std::vector<Vec> basis;       // b_j, ambient vectors spanning a_sigma
    std::vector<Vec> lift;        // w_j, ambient weights with dot(w_j, b_i) = delta_ij
    std::vector<Vec> regular_rows;           // z -> B(lift(z), alpha), alpha positive outside R-bar
    std::vector<std::string> regular_labels;
    std::vector<Vec> hc_rows;     // rows of the weak/strict cone on lifted covectors
    std::vector<bool> hc_strict;  // true when the row must stay strictly negative

    std::size_t dim() const { return basis.size(); }
    Vec covector(const Vec& ambient_weight) const;
    Vec ambient_of(const Vec& covec) const;
};

CellFrame cell_frame(const Context& ctx, const Cell& cell);

}  // namespace superq
