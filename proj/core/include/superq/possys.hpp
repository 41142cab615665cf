#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "superq/halfspaces.hpp"
#include "superq/realform.hpp"
#include "superq/rootdata.hpp"

namespace superq {

struct PositiveSystem {
    Vec functional;               // element of the Cartan in dual coordinates
    std::vector<Root> positives;
    std::vector<Root> simples;
    std::vector<Root> pi_c;       // compact simple roots
    Vec rho;                      // (sum of even positives - sum of odd positives)/2

    bool is_positive(const Vec& coords) const;
};

/// Splits the root set by the sign of functional evaluation (plain coordinate
/// pairing) and derives simples, compact simples and rho.
PositiveSystem positive_system(const RootSystem& rs, const RealForm& rf, const Vec& functional);

/// The standard positivity choice per family: for the osp-type families the
/// delta coordinates dominate, which keeps the Harish-Chandra cone nonempty
/// for the stored real forms.
Vec default_functional(const RootSystem& rs);

/// Literal bracket-condition diagnostic. k_stable: compact roots map the
/// positive noncompact+odd span into itself; q_abelian: no two positive
/// noncompact/odd roots (equal odd pairs allowed) sum to a root.
struct LiteralAdmissibility {
    bool k_stable = true;
    bool q_abelian = true;
    std::vector<std::pair<Root, Root>> k_witnesses;
    std::vector<std::pair<Root, Root>> q_witnesses;
};

LiteralAdmissibility admissible_literal(const PositiveSystem& ps, const RootSystem& rs,
                                        const RealForm& rf);

/// Nonemptiness of the Harish-Chandra cone as an exact strict/weak linear
/// feasibility problem; the operative admissibility notion.
struct ConeFeasibility {
    bool feasible = false;
    std::optional<Vec> witness;
};

ConeFeasibility admissible_feasible(const PositiveSystem& ps, const RootSystem& rs,
                                    const RealForm& rf);

/// Bundles the three immutable layers every cone-level operation needs.
struct Context {
    RootSystem rs;
    RealForm rf;
    PositiveSystem ps;
};

Context make_context(const AlgebraSpec& spec, const RealForm& rf,
                     std::optional<Vec> functional = std::nullopt);

}  // namespace superq
