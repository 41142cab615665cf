#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "superq/errors.hpp"
#include "superq/linalg.hpp"

namespace superq {

enum class Family { A, B, C, D, D21, F4, G3 };

Family family_from_string(std::string_view s);
std::string family_name(Family f);

/// Which contragredient family, at which ranks.
struct AlgebraSpec {
    Family family = Family::A;
    int m = 0;
    int n = 0;
    Rat alpha;  // D(2,1;a) only

    void validate() const;
    std::string name() const;
};

enum class Parity { Even, Odd };

struct Root {
    Vec coords;
    Parity parity = Parity::Even;

    bool is_even() const { return parity == Parity::Even; }
};

/// Full root set in the epsilon/delta ambient basis together with the
/// invariant bilinear form restricted to the Cartan dual.
struct RootSystem {
    AlgebraSpec spec;
    std::vector<Root> roots;
    Mat gram;
    int ambient_dim = 0;
    int eps_count = 0;                 // leading coordinates of epsilon type
    std::optional<Vec> quotient_kernel;  // type A supertrace direction

    bool contains(const Vec& coords) const;
    const Root* find(const Vec& coords) const;
    std::vector<Root> even_roots() const;
    std::vector<Root> odd_roots() const;
};

RootSystem build_root_system(const AlgebraSpec& spec);

/// Coroot pairing lam(h_alpha) = B(lam, alpha), exact.
Rat pairing(const RootSystem& rs, const Vec& lam, const Vec& alpha);

/// Human readable form such as "e1-d1" or "(e1+e2+e3+d1)/2".
std::string root_to_string(const RootSystem& rs, const Vec& coords);

}  // namespace superq
