#include <doctest.h>
#include <superq/realform.hpp>

#include <set>

using namespace superq;

namespace {

// block membership oracle for su(p,q|r): an even root is compact when both of
// its support indices fall in the same unitary block
bool su_block_oracle(const RootSystem& rs, int p, const Root& r) {
    int lo = -1, hi = -1;
    for (int i = 0; i < rs.ambient_dim; ++i)
        if (r.coords[static_cast<std::size_t>(i)] != 0) {
            if (lo < 0) lo = i;
            hi = i;
        }
    if (lo >= rs.eps_count) return true;  // delta block u(n+1)
    return (lo < p) == (hi < p);
}

}  // namespace

TEST_CASE("stored real form lists") {
    AlgebraSpec a10{Family::A, 1, 0, Rat(0)};
    auto forms = list_supported(a10);
    REQUIRE(forms.size() == 3);
    CHECK(forms[0].tag() == "su(0,2|1)");
    CHECK(forms[1].tag() == "su(1,1|1)");
    CHECK(forms[2].tag() == "su(2,0|1)");

    auto b = list_supported({Family::B, 2, 2, Rat(0)});
    REQUIRE(b.size() == 1);
    CHECK(b[0].tag() == "so(5)+sp(2,R)");

    auto d21 = list_supported({Family::D21, 0, 0, Rat(1, 2)});
    REQUIRE(d21.size() == 2);
    CHECK(d21[0].tag() == "su(2)^2+sl(2,R)");
    CHECK(d21[1].tag() == "sl(2,R)^3");

    auto d = list_supported({Family::D, 3, 1, Rat(0)});
    REQUIRE(d.size() == 3);
    CHECK(d[0].tag() == "so(6)+sp(1,R)");
    CHECK(d[1].tag() == "so(4,2)+sp(1,R)");
    CHECK(d[2].tag() == "so*(6)+sp(1,R)");

    CHECK(list_supported({Family::C, 0, 3, Rat(0)})[0].tag() == "sp(2,R)+so(2)");
    CHECK(list_supported({Family::F4, 0, 0, Rat(0)})[0].tag() == "so(2,5)+su(2)");
    CHECK(list_supported({Family::G3, 0, 0, Rat(0)})[0].tag() == "g2c+sl(2,R)");

    CHECK_THROWS_AS(real_form_from_tag(a10, "su(9,9|9)"), InconsistentRealFormError);
}

TEST_CASE("su(1,1|1) and su(2,1|1) partitions") {
    AlgebraSpec a10{Family::A, 1, 0, Rat(0)};
    RootSystem rs = build_root_system(a10);
    RealForm su11 = real_form_from_tag(a10, "su(1,1|1)");
    EvenPartition part = classify_even_roots(su11, rs);
    CHECK(part.compact.empty());
    CHECK(part.noncompact.size() == 2);

    AlgebraSpec a20{Family::A, 2, 0, Rat(0)};
    RootSystem rs2 = build_root_system(a20);
    RealForm su21 = real_form_from_tag(a20, "su(2,1|1)");
    EvenPartition part2 = classify_even_roots(su21, rs2);
    std::set<Vec> compact;
    for (const Root& r : part2.compact) compact.insert(r.coords);
    CHECK(compact == std::set<Vec>{{Rat(1), Rat(-1), Rat(0), Rat(0)},
                                   {Rat(-1), Rat(1), Rat(0), Rat(0)}});
    CHECK(part2.noncompact.size() == 4);
}

TEST_CASE("so(2m+1)+sp(n,R) partition follows the standard Hermitian data") {
    AlgebraSpec b22{Family::B, 2, 2, Rat(0)};
    RootSystem rs = build_root_system(b22);
    RealForm rf = real_form_from_tag(b22, "so(5)+sp(2,R)");
    for (const Root& r : rs.roots) {
        if (!r.is_even()) continue;
        bool eps_side = r.coords[2] == 0 && r.coords[3] == 0;
        bool delta_diff = !eps_side && r.coords[2] + r.coords[3] == 0 &&
                          r.coords[0] == 0 && r.coords[1] == 0;
        CHECK(is_compact(rf, rs, r) == (eps_side || delta_diff));
    }
}

TEST_CASE("su block oracle agrees for every split") {
    for (int m : {1, 2}) {
        for (int n : {0, 1}) {
            if (m == n) continue;
            AlgebraSpec spec{Family::A, m, n, Rat(0)};
            RootSystem rs = build_root_system(spec);
            for (const RealForm& rf : list_supported(spec)) {
                CAPTURE(rf.tag());
                for (const Root& r : rs.roots)
                    if (r.is_even()) CHECK(is_compact(rf, rs, r) == su_block_oracle(rs, rf.p, r));
            }
        }
    }
}

TEST_CASE("partition invariants across all stored forms") {
    std::vector<AlgebraSpec> specs = {
        {Family::A, 2, 1, Rat(0)},      {Family::B, 2, 2, Rat(0)}, {Family::C, 0, 3, Rat(0)},
        {Family::D, 2, 2, Rat(0)},      {Family::D, 3, 1, Rat(0)}, {Family::D21, 0, 0, Rat(1, 2)},
        {Family::F4, 0, 0, Rat(0)},     {Family::G3, 0, 0, Rat(0)},
    };
    for (const AlgebraSpec& spec : specs) {
        RootSystem rs = build_root_system(spec);
        for (const RealForm& rf : list_supported(spec)) {
            CAPTURE(rf.tag());
            EvenPartition part = classify_even_roots(rf, rs);
            CHECK(part.compact.size() + part.noncompact.size() == rs.even_roots().size());
            std::set<Vec> compact;
            for (const Root& r : part.compact) compact.insert(r.coords);
            // negation invariance
            for (const Root& r : part.compact) CHECK(compact.count(neg(r.coords)) == 1);
            for (const Root& r : part.noncompact) CHECK(compact.count(neg(r.coords)) == 0);
            // compact roots close under addition inside the root system
            for (const Root& a : part.compact)
                for (const Root& b : part.compact) {
                    Vec sum = add(a.coords, b.coords);
                    const Root* s = rs.find(sum);
                    if (s != nullptr && s->is_even()) CHECK(compact.count(sum) == 1);
                }
        }
    }
}

TEST_CASE("classify rejects odd roots and foreign roots") {
    AlgebraSpec spec{Family::A, 1, 0, Rat(0)};
    RootSystem rs = build_root_system(spec);
    RealForm rf = real_form_from_tag(spec, "su(1,1|1)");
    CHECK_THROWS_AS(is_compact(rf, rs, *rs.find({Rat(1), Rat(0), Rat(-1)})),
                    InconsistentRealFormError);
    CHECK_THROWS_AS(is_compact(rf, rs, Root{{Rat(5), Rat(0), Rat(0)}, Parity::Even}),
                    InconsistentRealFormError);
}
