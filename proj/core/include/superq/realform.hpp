#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "superq/rootdata.hpp"

namespace superq {

/// The stored table of real forms with compact Cartan subalgebras and
/// unitarizable highest weight supermodules. Entries are data, not derived.
enum class RealFormKind {
    SuPQ,      // A(m,n):   su(p, m+1-p | n+1)
    SoOddSp,   // B(m,n):   so(2m+1) + sp(n,R)
    SpSo2,     // C(n):     sp(n-1,R) + so(2)
    SoEvenSp,  // D(m,n):   so(2m) + sp(n,R)
    SoTwoSp,   // D(m,n):   so(2m-2,2) + sp(n,R)
    SoStarSp,  // D(m,n):   so*(2m) + sp(n,R)
    F4Form,    // F(4):     so(2,5) + su(2)
    G3Form,    // G(3):     g2c + sl(2,R)
    D21SuSuSl, // D(2,1;a): su(2)^2 + sl(2,R)
    D21SlSlSl, // D(2,1;a): sl(2,R)^3
};

struct RealForm {
    AlgebraSpec algebra;
    RealFormKind kind = RealFormKind::SuPQ;
    int p = 0;  // epsilon block split for SuPQ

    std::string tag() const;
};

/// All stored real-form entries for the family of `spec`.
std::vector<RealForm> list_supported(const AlgebraSpec& spec);

/// Resolves a tag string such as "su(2,1|1)" or "so(3)+sp(1,R)".
RealForm real_form_from_tag(const AlgebraSpec& spec, std::string_view tag);

/// Compactness of an even root; throws InconsistentRealFormError on odd input
/// or when the root does not belong to the system.
bool is_compact(const RealForm& rf, const RootSystem& rs, const Root& root);

struct EvenPartition {
    std::vector<Root> compact;
    std::vector<Root> noncompact;
};

EvenPartition classify_even_roots(const RealForm& rf, const RootSystem& rs);

}  // namespace superq
