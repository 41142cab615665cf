#pragma once

#include <optional>
#include <vector>

#include "superq/linalg.hpp"

namespace superq {

/// Homogeneous constraint a.x REL 0 over the rationals.
enum class Rel { Ge, Gt, Eq };

struct HalfSpace {
    Vec a;
    Rel rel = Rel::Ge;
};

struct FeasibilityResult {
    bool feasible = false;
    std::optional<Vec> witness;  // satisfies every constraint exactly when feasible
};

/// Decides strict/weak rational feasibility by Fourier-Motzkin elimination
/// (equalities removed first by substitution). Deterministic.
FeasibilityResult feasible(const std::vector<HalfSpace>& rows, std::size_t dim);

/// True when dropping rows[idx] does not change the feasible set.
bool is_redundant(const std::vector<HalfSpace>& rows, std::size_t dim, std::size_t idx);

/// Extreme rays of { x : rows.x >= 0 } for a full-dimensional pointed simplicial
/// cone, as primitive integer vectors in deterministic (lex) order.
/// Throws NotSimplicialError when the irredundant facet count differs from dim,
/// or the cone fails to be pointed/full-dimensional.
std::vector<Vec> simplicial_cone_rays(const std::vector<Vec>& inequality_rows, std::size_t dim);

}  // namespace superq
