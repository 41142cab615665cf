#include <doctest.h>
#include <superq/rootdata.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"

using namespace superq;

namespace {

std::multiset<std::pair<Vec, int>> root_multiset(const std::vector<Root>& roots) {
    std::multiset<std::pair<Vec, int>> s;
    for (const Root& r : roots) s.insert({r.coords, r.is_even() ? 0 : 1});
    return s;
}

std::multiset<std::pair<Vec, int>> root_multiset(const std::vector<oracles::OracleRoot>& roots) {
    std::multiset<std::pair<Vec, int>> s;
    for (const auto& r : roots) s.insert({r.coords, r.parity == Parity::Even ? 0 : 1});
    return s;
}

Vec rand_vec(std::mt19937& rng, int dim) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v[i] = Rat(num(rng), den(rng));
    return v;
}

}  // namespace

TEST_CASE("sl(2|1) root counts and membership") {
    RootSystem rs = build_root_system({Family::A, 1, 0, Rat(0)});
    CHECK(rs.ambient_dim == 3);
    CHECK(rs.even_roots().size() == 2);
    CHECK(rs.odd_roots().size() == 4);
    CHECK(rs.contains({Rat(1), Rat(-1), Rat(0)}));
    CHECK(rs.contains({Rat(1), Rat(0), Rat(-1)}));
    CHECK(rs.contains({Rat(0), Rat(1), Rat(-1)}));
    REQUIRE(rs.quotient_kernel.has_value());
    CHECK(*rs.quotient_kernel == Vec{Rat(1), Rat(1), Rat(-1)});
}

TEST_CASE("osp(3|2) root set") {
    RootSystem rs = build_root_system({Family::B, 1, 1, Rat(0)});
    CHECK(rs.even_roots().size() == 4);
    CHECK(rs.odd_roots().size() == 6);
    CHECK(rs.contains({Rat(1), Rat(0)}));   // e1
    CHECK(rs.contains({Rat(0), Rat(2)}));   // 2d1
    CHECK(rs.contains({Rat(0), Rat(1)}));   // d1
    CHECK(rs.contains({Rat(1), Rat(1)}));
    CHECK(rs.contains({Rat(-1), Rat(1)}));
    // non-isotropic odd root d1
    CHECK(pairing(rs, {Rat(0), Rat(1)}, {Rat(0), Rat(1)}) == Rat(-1));
}

TEST_CASE("root systems match the matrix realization oracle") {
    struct Case {
        AlgebraSpec spec;
    };
    std::vector<AlgebraSpec> cases = {
        {Family::A, 1, 0, Rat(0)}, {Family::A, 0, 1, Rat(0)}, {Family::A, 2, 0, Rat(0)},
        {Family::A, 2, 1, Rat(0)}, {Family::A, 1, 2, Rat(0)}, {Family::A, 3, 2, Rat(0)},
        {Family::B, 1, 1, Rat(0)}, {Family::B, 2, 1, Rat(0)}, {Family::B, 1, 2, Rat(0)},
        {Family::B, 2, 2, Rat(0)}, {Family::B, 0, 2, Rat(0)}, {Family::B, 3, 2, Rat(0)},
        {Family::C, 0, 2, Rat(0)}, {Family::C, 0, 3, Rat(0)},
        {Family::D, 2, 1, Rat(0)}, {Family::D, 2, 2, Rat(0)}, {Family::D, 3, 2, Rat(0)},
    };
    for (const AlgebraSpec& spec : cases) {
        CAPTURE(spec.name());
        RootSystem rs = build_root_system(spec);
        auto oracle = spec.family == Family::A
                          ? oracles::type_a_roots(spec.m, spec.n)
                          : oracles::osp_roots(spec.family, spec.m, spec.n);
        CHECK(root_multiset(rs.roots) == root_multiset(oracle));
    }
}

TEST_CASE("C(n) rank bookkeeping") {
    AlgebraSpec spec{Family::C, 0, 3, Rat(0)};
    RootSystem rs = build_root_system(spec);
    CHECK(rs.ambient_dim == 3);
    CHECK(rs.eps_count == 1);
    CHECK(rs.even_roots().size() == 8);   // sp(4) roots
    CHECK(rs.odd_roots().size() == 8);    // e1 +- d_j
}

TEST_CASE("negation closure for every family") {
    std::vector<AlgebraSpec> cases = {
        {Family::A, 2, 1, Rat(0)},   {Family::B, 2, 2, Rat(0)}, {Family::C, 0, 3, Rat(0)},
        {Family::D, 2, 2, Rat(0)},   {Family::D21, 0, 0, Rat(1, 2)}, {Family::F4, 0, 0, Rat(0)},
        {Family::G3, 0, 0, Rat(0)},
    };
    for (const AlgebraSpec& spec : cases) {
        CAPTURE(spec.name());
        RootSystem rs = build_root_system(spec);
        for (const Root& r : rs.roots) {
            const Root* other = rs.find(neg(r.coords));
            REQUIRE(other != nullptr);
            CHECK(other->parity == r.parity);
        }
        // even and odd roots are disjoint
        std::set<Vec> even, odd;
        for (const Root& r : rs.roots) (r.is_even() ? even : odd).insert(r.coords);
        for (const Vec& v : even) CHECK(odd.count(v) == 0);
    }
}

TEST_CASE("exceptional family tables") {
    RootSystem f4 = build_root_system({Family::F4, 0, 0, Rat(0)});
    CHECK(f4.even_roots().size() == 20);
    CHECK(f4.odd_roots().size() == 16);
    for (const Root& r : f4.odd_roots()) CHECK(pairing(f4, r.coords, r.coords) == 0);
    // longest positive-length even root has square two
    Rat longest = 0;
    for (const Root& r : f4.even_roots()) {
        Rat v = pairing(f4, r.coords, r.coords);
        if (v > longest) longest = v;
    }
    CHECK(longest == Rat(2));

    RootSystem g3 = build_root_system({Family::G3, 0, 0, Rat(0)});
    CHECK(g3.even_roots().size() == 14);
    CHECK(g3.odd_roots().size() == 14);
    // odd roots +-d are non-isotropic; the rest are isotropic
    int nonisotropic = 0;
    for (const Root& r : g3.odd_roots())
        if (pairing(g3, r.coords, r.coords) != 0) ++nonisotropic;
    CHECK(nonisotropic == 2);
    Rat g3_longest = 0;
    for (const Root& r : g3.even_roots()) {
        Rat v = pairing(g3, r.coords, r.coords);
        if (v > g3_longest) g3_longest = v;
    }
    CHECK(g3_longest == Rat(2));

    RootSystem d21 = build_root_system({Family::D21, 0, 0, Rat(2, 3)});
    CHECK(d21.even_roots().size() == 6);
    CHECK(d21.odd_roots().size() == 8);
    for (const Root& r : d21.odd_roots()) CHECK(pairing(d21, r.coords, r.coords) == 0);
}

TEST_CASE("pairing examples") {
    RootSystem a10 = build_root_system({Family::A, 1, 0, Rat(0)});
    CHECK(pairing(a10, {Rat(1), Rat(0), Rat(0)}, {Rat(1), Rat(0), Rat(-1)}) == Rat(1));
    // odd isotropic
    for (const Root& r : a10.odd_roots()) CHECK(pairing(a10, r.coords, r.coords) == 0);

    RootSystem b11 = build_root_system({Family::B, 1, 1, Rat(0)});
    CHECK(pairing(b11, {Rat(0), Rat(1)}, {Rat(0), Rat(2)}) == Rat(-2));
}

TEST_CASE("pairing is bilinear and symmetric") {
    RootSystem rs = build_root_system({Family::B, 2, 2, Rat(0)});
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 50; ++trial) {
        Vec a = rand_vec(rng, rs.ambient_dim), b = rand_vec(rng, rs.ambient_dim);
        Vec c = rand_vec(rng, rs.ambient_dim);
        Rat s(std::uniform_int_distribution<int>(-5, 5)(rng),
              std::uniform_int_distribution<int>(1, 3)(rng));
        CHECK(pairing(rs, add(a, scale(s, b)), c) == pairing(rs, a, c) + s * pairing(rs, b, c));
        CHECK(pairing(rs, a, b) == pairing(rs, b, a));
    }
    // symmetry on actual roots
    for (const Root& x : rs.roots)
        for (const Root& y : rs.roots)
            CHECK(pairing(rs, x.coords, y.coords) == pairing(rs, y.coords, x.coords));
}

TEST_CASE("rank validation") {
    CHECK_THROWS_AS(build_root_system({Family::A, 1, 1, Rat(0)}).roots.size(),
                    UnsupportedRankError);
    CHECK_THROWS_AS(build_root_system({Family::C, 0, 1, Rat(0)}).roots.size(),
                    UnsupportedRankError);
    CHECK_THROWS_AS(build_root_system({Family::D, 1, 1, Rat(0)}).roots.size(),
                    UnsupportedRankError);
    CHECK_THROWS_AS(build_root_system({Family::B, 1, 0, Rat(0)}).roots.size(),
                    UnsupportedRankError);
    CHECK_THROWS_AS(build_root_system({Family::D21, 0, 0, Rat(0)}).roots.size(), InvalidAlphaError);
    CHECK_THROWS_AS(build_root_system({Family::D21, 0, 0, Rat(-1)}).roots.size(),
                    InvalidAlphaError);
    CHECK_THROWS_AS(pairing(build_root_system({Family::A, 1, 0, Rat(0)}), {Rat(1)}, {Rat(1)}),
                    DimensionMismatchError);
}
