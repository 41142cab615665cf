#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superq/possys.hpp"

namespace superq {

/// Highest weight data for so(2m+1)+sp(n,R) in the classical coordinates:
/// Lambda = (mu_1..mu_m | lambda, lambda-a_2, ..., lambda-a_n).
struct JakobsenParamsOsp {
    int m = 1;
    int n = 1;
    std::vector<Rat> mu;  // size m, mu_1 >= ... >= mu_m >= 0
    Rat lambda;
    std::vector<Rat> a;   // size n-1 holding a_2..a_n with a_n >= ... >= a_2 >= 0

    void validate() const;
    Vec highest_weight() const;
};

/// Context for B(m,n) with the stored real form and the admissible-convention
/// positive system (delta block dominant).
Context osp_context(int m, int n);

/// Lambda + rho with rho computed from the positive system; raises
/// RhoMismatchError unless the result matches the closed shift pattern
/// (mu_1+m-1/2, ..., mu_m+1/2 | lambda+n-m-1/2, ..., lambda-a_n+1-m-1/2).
Vec lambda_plus_rho_osp(const JakobsenParamsOsp& p, const Context& ctx);

/// Rational affine form in the parameter list (mu_1..mu_m, lambda, a_2..a_n).
struct AffineForm {
    std::vector<Rat> coeff;
    Rat constant;

    bool operator==(const AffineForm&) const = default;
    std::string to_string(int m, int n) const;
};

struct OspVerdict {
    bool in_c = false;
    Root binding_root;        // inequality closest to failing
    Rat binding_value;
    AffineForm eps1_delta1;   // symbolic value of (Lambda+rho)(h_{e1-d1})
};

/// Evaluates the strict boundedness inequalities of the parameter set on the
/// classical coordinates. The sp-side entries of Lambda decrease, which is the
/// chamber obtained from the cone conventions here by negating the delta
/// block, so the inequalities are evaluated at the negatives of the positive
/// noncompact and odd roots; at e1-d1 the condition reduces to the closed form
/// lambda < 1 - mu_1 - n, which is asserted symbolically.
OspVerdict osp_unitarizable(const JakobsenParamsOsp& p);

/// Symbolic (Lambda+rho)(h_{e1-d1}) as an affine form in the parameters.
AffineForm osp_eps1_delta1_form(int m, int n);

enum class ExceptionFamily { F4, G3 };

/// Stored threshold inequalities for the exceptional families. The G(3)
/// numbers are data with provenance in the tests; no coordinate dictionary to
/// the classical classification is implemented. F(4) ships without data.
struct ExceptionFlags {
    bool has_data = false;
    std::optional<bool> c_condition;
    std::optional<bool> unitarizable_condition;
    std::optional<bool> agree;
    std::string c_inequality;
    std::string unitarizable_inequality;
};

ExceptionFlags exception_flags(ExceptionFamily family, const Rat& a, const Rat& b, const Rat& mu);

}  // namespace superq
