#include "superq/unitarity.hpp"

#include <algorithm>

namespace superq {

void JakobsenParamsOsp::validate() const {
    if (m < 1 || n < 1) throw UnsupportedRankError("osp parameters need m >= 1 and n >= 1");
    if (static_cast<int>(mu.size()) != m) throw DimensionMismatchError("mu must have m entries");
    if (static_cast<int>(a.size()) != n - 1)
        throw DimensionMismatchError("a must have n-1 entries (a_2..a_n)");
    for (int i = 0; i + 1 < m; ++i)
        if (mu[i] < mu[i + 1]) throw Error("mu must be nonincreasing");
    if (m >= 1 && mu[m - 1] < 0) throw Error("mu must be nonnegative");
    for (int j = 0; j + 1 < n - 1; ++j)
        if (a[j] > a[j + 1]) throw Error("a_2..a_n must be nondecreasing");
    if (!a.empty() && a[0] < 0) throw Error("a must be nonnegative");
}

Vec JakobsenParamsOsp::highest_weight() const {
    validate();
    Vec v;
    v.reserve(m + n);
    for (const Rat& x : mu) v.push_back(x);
    v.push_back(lambda);
    for (const Rat& x : a) v.push_back(lambda - x);
    return v;
}

Context osp_context(int m, int n) {
    AlgebraSpec spec{Family::B, m, n, Rat(0)};
    RealForm rf{spec, RealFormKind::SoOddSp, 0};
    return make_context(spec, rf);
}

namespace {

Vec expected_shift_pattern(int m, int n) {
    Vec rho;
    rho.reserve(m + n);
    for (int i = 0; i < m; ++i) rho.push_back(Rat(2 * (m - i) - 1, 2));            // m-1/2 .. 1/2
    for (int j = 0; j < n; ++j) rho.push_back(Rat(2 * (n - j - m) - 1, 2));        // n-m-1/2 ..
    return rho;
}

}  // namespace

Vec lambda_plus_rho_osp(const JakobsenParamsOsp& p, const Context& ctx) {
    if (ctx.rs.spec.family != Family::B || ctx.rs.spec.m != p.m || ctx.rs.spec.n != p.n)
        throw DimensionMismatchError("context does not match the osp parameters");
    Vec pattern = expected_shift_pattern(p.m, p.n);
    if (ctx.ps.rho != pattern)
        throw RhoMismatchError("computed rho " + vec_to_string(ctx.ps.rho) +
                               " differs from the expected shift pattern " + vec_to_string(pattern));
    return add(p.highest_weight(), ctx.ps.rho);
}

std::string AffineForm::to_string(int m, int n) const {
    std::string out;
    auto append = [&](const Rat& c, const std::string& name) {
        if (c == 0) return;
        if (!out.empty() && c > 0) out += "+";
        if (c == -1)
            out += "-";
        else if (c != 1)
            out += rat_to_string(c) + "*";
        out += name;
    };
    for (int i = 0; i < m; ++i) append(coeff[i], "mu" + std::to_string(i + 1));
    append(coeff[m], "lambda");
    for (int j = 0; j < n - 1; ++j) append(coeff[m + 1 + j], "a" + std::to_string(j + 2));
    if (constant != 0 || out.empty()) {
        if (!out.empty() && constant > 0) out += "+";
        out += rat_to_string(constant);
    }
    return out;
}

namespace {

// Coordinates of Lambda+rho as affine forms in (mu_1..mu_m, lambda, a_2..a_n).
std::vector<AffineForm> symbolic_lambda_plus_rho(int m, int n, const Vec& rho) {
    const int params = m + n;
    std::vector<AffineForm> coords(m + n);
    for (int i = 0; i < m + n; ++i) {
        coords[i].coeff.assign(params, Rat(0));
        coords[i].constant = rho[i];
    }
    for (int i = 0; i < m; ++i) coords[i].coeff[i] = 1;  // mu_i
    coords[m].coeff[m] = 1;                              // lambda
    for (int j = 1; j < n; ++j) {
        coords[m + j].coeff[m] = 1;          // lambda
        coords[m + j].coeff[m + j] = -1;     // -a_{j+1}
    }
    return coords;
}

// B(u, alpha) with symbolic u, expanded through the Gram matrix.
AffineForm symbolic_pairing(const RootSystem& rs, const std::vector<AffineForm>& u,
                            const Vec& alpha) {
    AffineForm out;
    out.coeff.assign(u.empty() ? 0 : u[0].coeff.size(), Rat(0));
    out.constant = 0;
    for (int i = 0; i < rs.ambient_dim; ++i)
        for (int k = 0; k < rs.ambient_dim; ++k) {
            Rat w = rs.gram[i][k] * alpha[k];
            if (w == 0) continue;
            for (std::size_t c = 0; c < out.coeff.size(); ++c) out.coeff[c] += w * u[i].coeff[c];
            out.constant += w * u[i].constant;
        }
    return out;
}

}  // namespace

AffineForm osp_eps1_delta1_form(int m, int n) {
    Context ctx = osp_context(m, n);
    Vec pattern = expected_shift_pattern(m, n);
    if (ctx.ps.rho != pattern)
        throw RhoMismatchError("computed rho differs from the expected shift pattern");
    Vec alpha(m + n, Rat(0));
    alpha[0] = 1;       // e1
    alpha[m] = -1;      // -d1
    return symbolic_pairing(ctx.rs, symbolic_lambda_plus_rho(m, n, ctx.ps.rho), alpha);
}

OspVerdict osp_unitarizable(const JakobsenParamsOsp& p) {
    p.validate();
    Context ctx = osp_context(p.m, p.n);
    Vec u = lambda_plus_rho_osp(p, ctx);

    OspVerdict verdict;
    verdict.eps1_delta1 = osp_eps1_delta1_form(p.m, p.n);
    {
        AffineForm closed;  // lambda - (1 - mu_1 - n)
        closed.coeff.assign(p.m + p.n, Rat(0));
        closed.coeff[0] = 1;
        closed.coeff[p.m] = 1;
        closed.constant = Rat(p.n - 1);
        if (!(verdict.eps1_delta1 == closed))
            throw RhoMismatchError("(Lambda+rho)(h_{e1-d1}) does not reduce to lambda < 1-mu1-n: " +
                                   verdict.eps1_delta1.to_string(p.m, p.n));
    }

    bool first = true;
    bool in_c = true;
    for (const Root& beta : ctx.ps.positives) {
        if (beta.is_even() && is_compact(ctx.rf, ctx.rs, beta)) continue;
        // classical coordinates flip the delta block relative to the cone
        // conventions, so the strict conditions sit at the mirrored roots
        Vec mirrored = neg(beta.coords);
        Rat value = pairing(ctx.rs, u, mirrored);
        if (!(value < 0)) in_c = false;
        if (first || value > verdict.binding_value) {
            verdict.binding_value = value;
            verdict.binding_root = Root{mirrored, beta.parity};
            first = false;
        }
    }
    verdict.in_c = in_c;
    return verdict;
}

ExceptionFlags exception_flags(ExceptionFamily family, const Rat& a, const Rat& b, const Rat& mu) {
    ExceptionFlags flags;
    if (family == ExceptionFamily::F4) {
        // no stored thresholds for this family; surfaced as a documented gap
        flags.has_data = false;
        return flags;
    }
    if (!(a > 0) || !(b - a > 0)) throw Error("G3 exception parameters need a > 0 and b - a > 0");
    flags.has_data = true;
    flags.c_inequality = "mu < a+b-10";
    flags.unitarizable_inequality = "mu < -3a-3b-9";
    flags.c_condition = mu < a + b - 10;
    flags.unitarizable_condition = mu < -3 * a - 3 * b - 9;
    flags.agree = *flags.c_condition == *flags.unitarizable_condition;
    return flags;
}

}  // namespace superq
