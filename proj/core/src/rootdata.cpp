#include "superq/rootdata.hpp"

#include <algorithm>

namespace superq {

Family family_from_string(std::string_view s) {
    if (s == "A") return Family::A;
    if (s == "B") return Family::B;
    if (s == "C") return Family::C;
    if (s == "D") return Family::D;
    if (s == "D21" || s == "D21alpha" || s == "D(2,1;a)") return Family::D21;
    if (s == "F4" || s == "F(4)") return Family::F4;
    if (s == "G3" || s == "G(3)") return Family::G3;
    throw Error("unknown family '" + std::string(s) + "'");
}

std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::D21: return "D21";
        case Family::F4: return "F4";
        case Family::G3: return "G3";
    }
    return "?";
}

void AlgebraSpec::validate() const {
    switch (family) {
        case Family::A:
            if (m < 0 || n < 0) throw UnsupportedRankError("A(m,n) requires m,n >= 0");
            if (m == n)
                throw UnsupportedRankError(
                    "A(n,n) is rejected: the supertrace direction is isotropic for the "
                    "invariant form, so the canonical coordinate quotient is unavailable");
            break;
        case Family::B:
            if (m < 0 || n < 1) throw UnsupportedRankError("B(m,n) requires m >= 0 and n >= 1");
            break;
        case Family::C:
            if (n < 2) throw UnsupportedRankError("C(n) requires n >= 2");
            break;
        case Family::D:
            if (m < 2 || n < 1) throw UnsupportedRankError("D(m,n) requires m >= 2 and n >= 1");
            break;
        case Family::D21:
            if (alpha == 0 || alpha == -1)
                throw InvalidAlphaError("D(2,1;a) requires a not in {0, -1}");
            break;
        case Family::F4:
        case Family::G3:
            break;
    }
    if (family != Family::D21 && alpha != 0)
        throw InvalidAlphaError("alpha parameter is only meaningful for D(2,1;a)");
}

std::string AlgebraSpec::name() const {
    switch (family) {
        case Family::A: return "A(" + std::to_string(m) + "," + std::to_string(n) + ")";
        case Family::B: return "B(" + std::to_string(m) + "," + std::to_string(n) + ")";
        case Family::C: return "C(" + std::to_string(n) + ")";
        case Family::D: return "D(" + std::to_string(m) + "," + std::to_string(n) + ")";
        case Family::D21: return "D(2,1;" + rat_to_string(alpha) + ")";
        case Family::F4: return "F(4)";
        case Family::G3: return "G(3)";
    }
    return "?";
}

bool RootSystem::contains(const Vec& coords) const { return find(coords) != nullptr; }

const Root* RootSystem::find(const Vec& coords) const {
    for (const Root& r : roots)
        if (r.coords == coords) return &r;
    return nullptr;
}

std::vector<Root> RootSystem::even_roots() const {
    std::vector<Root> out;
    for (const Root& r : roots)
        if (r.is_even()) out.push_back(r);
    return out;
}

std::vector<Root> RootSystem::odd_roots() const {
    std::vector<Root> out;
    for (const Root& r : roots)
        if (!r.is_even()) out.push_back(r);
    return out;
}

namespace {

Vec unit(int dim, int i, Rat c = Rat(1)) {
    Vec v(dim, Rat(0));
    v[i] = c;
    return v;
}

void push_pair(std::vector<Root>& roots, Vec v, Parity p) {
    roots.push_back({v, p});
    roots.push_back({neg(v), p});
}

// gl(m+1|n+1) type: even e_i - e_j, d_i - d_j; odd e_i - d_j.
RootSystem build_type_a(const AlgebraSpec& spec) {
    int me = spec.m + 1, nd = spec.n + 1;
    int d = me + nd;
    RootSystem rs;
    rs.spec = spec;
    rs.ambient_dim = d;
    rs.eps_count = me;
    rs.gram = identity(d);
    for (int j = me; j < d; ++j) rs.gram[j][j] = -1;
    for (int i = 0; i < me; ++i)
        for (int j = i + 1; j < me; ++j) push_pair(rs.roots, sub(unit(d, i), unit(d, j)), Parity::Even);
    for (int i = me; i < d; ++i)
        for (int j = i + 1; j < d; ++j) push_pair(rs.roots, sub(unit(d, i), unit(d, j)), Parity::Even);
    for (int i = 0; i < me; ++i)
        for (int j = me; j < d; ++j) push_pair(rs.roots, sub(unit(d, i), unit(d, j)), Parity::Odd);
    Vec k(d, Rat(1));
    for (int j = me; j < d; ++j) k[j] = -1;
    rs.quotient_kernel = k;
    return rs;
}

// osp families share the sp-side block; eps block differs (B: short roots, D: none).
RootSystem build_osp(const AlgebraSpec& spec, bool short_eps_roots, bool long_2delta) {
    int m = (spec.family == Family::C) ? 1 : spec.m;
    int nd = (spec.family == Family::C) ? spec.n - 1 : spec.n;
    int d = m + nd;
    RootSystem rs;
    rs.spec = spec;
    rs.ambient_dim = d;
    rs.eps_count = m;
    rs.gram = identity(d);
    for (int j = m; j < d; ++j) rs.gram[j][j] = -1;

    bool eps_pair_roots = spec.family != Family::C;  // C(n) has a single epsilon with no even roots
    if (eps_pair_roots) {
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                push_pair(rs.roots, sub(unit(d, i), unit(d, j)), Parity::Even);
                push_pair(rs.roots, add(unit(d, i), unit(d, j)), Parity::Even);
            }
        if (short_eps_roots)
            for (int i = 0; i < m; ++i) push_pair(rs.roots, unit(d, i), Parity::Even);
    }
    for (int i = m; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            push_pair(rs.roots, sub(unit(d, i), unit(d, j)), Parity::Even);
            push_pair(rs.roots, add(unit(d, i), unit(d, j)), Parity::Even);
        }
    if (long_2delta)
        for (int i = m; i < d; ++i) push_pair(rs.roots, unit(d, i, Rat(2)), Parity::Even);
    // odd: non-isotropic +-d_j only in B(m,n); e_i +- d_j everywhere
    if (short_eps_roots)
        for (int i = m; i < d; ++i) push_pair(rs.roots, unit(d, i), Parity::Odd);
    for (int i = 0; i < m; ++i)
        for (int j = m; j < d; ++j) {
            push_pair(rs.roots, sub(unit(d, i), unit(d, j)), Parity::Odd);
            push_pair(rs.roots, add(unit(d, i), unit(d, j)), Parity::Odd);
        }
    return rs;
}

RootSystem build_d21(const AlgebraSpec& spec) {
    RootSystem rs;
    rs.spec = spec;
    rs.ambient_dim = 3;
    rs.eps_count = 3;
    const Rat& a = spec.alpha;
    rs.gram = {{-(1 + a) / 2, Rat(0), Rat(0)}, {Rat(0), Rat(1, 2), Rat(0)}, {Rat(0), Rat(0), a / 2}};
    for (int i = 0; i < 3; ++i) push_pair(rs.roots, unit(3, i, Rat(2)), Parity::Even);
    for (int s2 : {1, -1})
        for (int s3 : {1, -1})
            push_pair(rs.roots, Vec{Rat(1), Rat(s2), Rat(s3)}, Parity::Odd);
    return rs;
}

RootSystem build_f4(const AlgebraSpec& spec) {
    RootSystem rs;
    rs.spec = spec;
    rs.ambient_dim = 4;
    rs.eps_count = 3;
    rs.gram = identity(4);
    rs.gram[3][3] = -3;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            push_pair(rs.roots, sub(unit(4, i), unit(4, j)), Parity::Even);
            push_pair(rs.roots, add(unit(4, i), unit(4, j)), Parity::Even);
        }
    for (int i = 0; i < 3; ++i) push_pair(rs.roots, unit(4, i), Parity::Even);
    push_pair(rs.roots, unit(4, 3), Parity::Even);
    for (int s1 : {1, -1})
        for (int s2 : {1, -1})
            for (int s3 : {1, -1})
                push_pair(rs.roots,
                          Vec{Rat(s1, 2), Rat(s2, 2), Rat(s3, 2), Rat(1, 2)}, Parity::Odd);
    // the 16 odd roots are (+-1/2, +-1/2, +-1/2, +-1/2); pairs above cover them once
    return rs;
}

RootSystem build_g3(const AlgebraSpec& spec) {
    RootSystem rs;
    rs.spec = spec;
    rs.ambient_dim = 3;
    rs.eps_count = 2;
    // e3 = -e1-e2; form normalized so the longest positive-length even root 2d has square 2
    rs.gram = {{Rat(-1, 2), Rat(1, 4), Rat(0)}, {Rat(1, 4), Rat(-1, 2), Rat(0)}, {Rat(0), Rat(0), Rat(1, 2)}};
    Vec e1 = unit(3, 0), e2 = unit(3, 1);
    Vec e3 = {Rat(-1), Rat(-1), Rat(0)};
    std::vector<Vec> eps = {e1, e2, e3};
    for (const Vec& e : eps) push_pair(rs.roots, e, Parity::Even);
    push_pair(rs.roots, sub(e1, e2), Parity::Even);
    push_pair(rs.roots, sub(e1, e3), Parity::Even);
    push_pair(rs.roots, sub(e2, e3), Parity::Even);
    push_pair(rs.roots, unit(3, 2, Rat(2)), Parity::Even);
    push_pair(rs.roots, unit(3, 2), Parity::Odd);
    for (const Vec& e : eps) {
        push_pair(rs.roots, add(e, unit(3, 2)), Parity::Odd);
        push_pair(rs.roots, sub(e, unit(3, 2)), Parity::Odd);
    }
    return rs;
}

}  // namespace

RootSystem build_root_system(const AlgebraSpec& spec) {
    spec.validate();
    switch (spec.family) {
        case Family::A: return build_type_a(spec);
        case Family::B: return build_osp(spec, /*short_eps_roots=*/true, /*long_2delta=*/true);
        case Family::C: return build_osp(spec, /*short_eps_roots=*/false, /*long_2delta=*/true);
        case Family::D: return build_osp(spec, /*short_eps_roots=*/false, /*long_2delta=*/true);
        case Family::D21: return build_d21(spec);
        case Family::F4: return build_f4(spec);
        case Family::G3: return build_g3(spec);
    }
    throw Error("unreachable");
}

Rat pairing(const RootSystem& rs, const Vec& lam, const Vec& alpha) {
    if (static_cast<int>(lam.size()) != rs.ambient_dim ||
        static_cast<int>(alpha.size()) != rs.ambient_dim)
        throw DimensionMismatchError("pairing: vectors must live in the ambient space of " +
                                     rs.spec.name());
    Rat s = 0;
    for (int i = 0; i < rs.ambient_dim; ++i) {
        if (lam[i] == 0) continue;
        for (int j = 0; j < rs.ambient_dim; ++j) {
            if (rs.gram[i][j] == 0 || alpha[j] == 0) continue;
            s += lam[i] * rs.gram[i][j] * alpha[j];
        }
    }
    return s;
}

std::string root_to_string(const RootSystem& rs, const Vec& coords) {
    BigInt lcm = 1;
    for (const Rat& c : coords) {
        BigInt den = denominator(c);
        lcm = lcm / gcd(lcm, den) * den;
    }
    std::string body;
    bool first = true;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        BigInt k = numerator(coords[i]) * (lcm / denominator(coords[i]));
        if (k == 0) continue;
        std::string name = (static_cast<int>(i) < rs.eps_count)
                               ? "e" + std::to_string(i + 1)
                               : "d" + std::to_string(i + 1 - rs.eps_count);
        if (k > 0 && !first) body += "+";
        if (k == -1)
            body += "-";
        else if (k != 1)
            body += k.str();
        body += name;
        first = false;
    }
    if (body.empty()) return "0";
    if (lcm != 1) return "(" + body + ")/" + lcm.str();
    return body;
}

}  // namespace superq
