#include "superq/realform.hpp"

#include <algorithm>

namespace superq {

namespace {

std::string sp_tag(int n) { return "sp(" + std::to_string(n) + ",R)"; }

}  // namespace

std::string RealForm::tag() const {
    switch (kind) {
        case RealFormKind::SuPQ:
            return "su(" + std::to_string(p) + "," + std::to_string(algebra.m + 1 - p) + "|" +
                   std::to_string(algebra.n + 1) + ")";
        case RealFormKind::SoOddSp:
            return "so(" + std::to_string(2 * algebra.m + 1) + ")+" + sp_tag(algebra.n);
        case RealFormKind::SpSo2: return sp_tag(algebra.n - 1) + "+so(2)";
        case RealFormKind::SoEvenSp:
            return "so(" + std::to_string(2 * algebra.m) + ")+" + sp_tag(algebra.n);
        case RealFormKind::SoTwoSp:
            return "so(" + std::to_string(2 * algebra.m - 2) + ",2)+" + sp_tag(algebra.n);
        case RealFormKind::SoStarSp:
            return "so*(" + std::to_string(2 * algebra.m) + ")+" + sp_tag(algebra.n);
        case RealFormKind::F4Form: return "so(2,5)+su(2)";
        case RealFormKind::G3Form: return "g2c+sl(2,R)";
        case RealFormKind::D21SuSuSl: return "su(2)^2+sl(2,R)";
        case RealFormKind::D21SlSlSl: return "sl(2,R)^3";
    }
    return "?";
}

std::vector<RealForm> list_supported(const AlgebraSpec& spec) {
    spec.validate();
    std::vector<RealForm> out;
    switch (spec.family) {
        case Family::A:
            for (int p = 0; p <= spec.m + 1; ++p) out.push_back({spec, RealFormKind::SuPQ, p});
            break;
        case Family::B:
            out.push_back({spec, RealFormKind::SoOddSp, 0});
            break;
        case Family::C:
            out.push_back({spec, RealFormKind::SpSo2, 0});
            break;
        case Family::D:
            out.push_back({spec, RealFormKind::SoEvenSp, 0});
            out.push_back({spec, RealFormKind::SoTwoSp, 0});
            out.push_back({spec, RealFormKind::SoStarSp, 0});
            break;
        case Family::F4:
            out.push_back({spec, RealFormKind::F4Form, 0});
            break;
        case Family::G3:
            out.push_back({spec, RealFormKind::G3Form, 0});
            break;
        case Family::D21:
            out.push_back({spec, RealFormKind::D21SuSuSl, 0});
            out.push_back({spec, RealFormKind::D21SlSlSl, 0});
            break;
    }
    return out;
}

RealForm real_form_from_tag(const AlgebraSpec& spec, std::string_view tag) {
    for (const RealForm& rf : list_supported(spec))
        if (rf.tag() == tag) return rf;
    std::string known;
    for (const RealForm& rf : list_supported(spec)) {
        if (!known.empty()) known += ", ";
        known += rf.tag();
    }
    throw InconsistentRealFormError("real form '" + std::string(tag) + "' is not in the stored list for " +
                                    spec.name() + " (known: " + known + ")");
}

namespace {

// first (resp. last) index with nonzero coordinate, or -1
int support_lo(const Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) return static_cast<int>(i);
    return -1;
}

int support_hi(const Vec& v) {
    for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
        if (v[i] != 0) return i;
    return -1;
}

bool delta_difference(const Vec& v, int eps) {
    // d_i - d_j shaped roots: two nonzero delta coordinates of opposite sign
    Rat sum = 0;
    for (std::size_t i = eps; i < v.size(); ++i) sum += v[i];
    return support_lo(v) >= eps && sum == 0;
}

}  // namespace

bool is_compact(const RealForm& rf, const RootSystem& rs, const Root& root) {
    if (!root.is_even())
        throw InconsistentRealFormError("compactness is defined for even roots only");
    if (!rs.contains(root.coords))
        throw InconsistentRealFormError("root does not belong to " + rs.spec.name());
    const Vec& v = root.coords;
    const int eps = rs.eps_count;
    const bool eps_side = support_hi(v) < eps;

    switch (rf.kind) {
        case RealFormKind::SuPQ: {
            if (!eps_side) return true;  // the delta block u(n+1) is compact
            int i = support_lo(v), j = support_hi(v);
            return (i < rf.p) == (j < rf.p);
        }
        case RealFormKind::SoOddSp:
        case RealFormKind::SoEvenSp:
            if (eps_side) return true;
            return delta_difference(v, eps);
        case RealFormKind::SpSo2:
            // so(2) has no roots; all even roots live on the sp side
            return delta_difference(v, eps);
        case RealFormKind::SoTwoSp: {
            if (!eps_side) return delta_difference(v, eps);
            // so(2m-2,2): the last epsilon direction is the noncompact one
            return v[eps - 1] == 0;
        }
        case RealFormKind::SoStarSp: {
            if (!eps_side) return delta_difference(v, eps);
            Rat sum = 0;
            for (int i = 0; i < eps; ++i) sum += v[i];
            return sum == 0;  // u(m): e_i - e_j compact, e_i + e_j not
        }
        case RealFormKind::F4Form: {
            if (!eps_side) return true;  // +-d: compact su(2)
            // so(2,5): roots touching e1 are noncompact
            return v[0] == 0;
        }
        case RealFormKind::G3Form:
            // compact g2: every pure-epsilon root; +-2d noncompact
            return eps_side;
        case RealFormKind::D21SuSuSl:
            // +-2e1 is the sl(2,R) factor
            return v[0] == 0;
        case RealFormKind::D21SlSlSl:
            return false;
    }
    throw InconsistentRealFormError("unreachable");
}

EvenPartition classify_even_roots(const RealForm& rf, const RootSystem& rs) {
    if (rf.algebra.name() != rs.spec.name())
        throw InconsistentRealFormError("real form " + rf.tag() + " does not match " + rs.spec.name());
    EvenPartition part;
    for (const Root& r : rs.roots) {
        if (!r.is_even()) continue;
        (is_compact(rf, rs, r) ? part.compact : part.noncompact).push_back(r);
    }
    return part;
}

}  // namespace superq
