#include "superq/kahler.hpp"

#include <algorithm>
#include <cmath>

#include "superq/errors.hpp"
#include "superq/halfspaces.hpp"

namespace superq {

Potential::Potential(std::vector<std::pair<Rat, Vec>> terms, std::optional<Mat> quad,
                     std::size_t dim)
    : terms_(std::move(terms)), quad_(std::move(quad)), dim_(dim) {
    if (terms_.empty() && !quad_)
        throw Error("potential needs at least one exponential term or a quadratic part");
    for (const auto& [c, w] : terms_) {
        if (c <= 0) throw Error("potential coefficients must be positive");
        if (w.size() != dim_) throw DimensionMismatchError("potential term dimension mismatch");
    }
    if (quad_) {
        if (quad_->size() != dim_) throw DimensionMismatchError("quadratic part dimension mismatch");
        if (!is_positive_semidefinite(*quad_))
            throw Error("quadratic part must be symmetric positive semidefinite");
    }

    wmat_.resize(static_cast<long>(terms_.size()), static_cast<long>(dim_));
    coeff_.resize(static_cast<long>(terms_.size()));
    for (std::size_t j = 0; j < terms_.size(); ++j) {
        coeff_[static_cast<long>(j)] = to_double(terms_[j].first);
        for (std::size_t i = 0; i < dim_; ++i)
            wmat_(static_cast<long>(j), static_cast<long>(i)) = to_double(terms_[j].second[i]);
    }
    qmat_ = Eigen::MatrixXd::Zero(static_cast<long>(dim_), static_cast<long>(dim_));
    if (quad_)
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                qmat_(static_cast<long>(i), static_cast<long>(j)) = to_double((*quad_)[i][j]);

    if (!quad_ && terms_.size() == dim_) {
        Mat rows;
        for (const auto& [c, w] : terms_) rows.push_back(w);
        model_ = rank(rows) == dim_;
    }
}

Potential Potential::model(const std::vector<Vec>& weights) {
    std::vector<std::pair<Rat, Vec>> terms;
    for (const Vec& w : weights) terms.emplace_back(Rat(1), w);
    if (weights.empty()) throw Error("model potential needs at least one weight");
    return Potential(std::move(terms), std::nullopt, weights[0].size());
}

Eigen::VectorXd Potential::exponents(const Eigen::VectorXd& x, bool guarded) const {
    if (x.size() != static_cast<long>(dim_))
        throw DimensionMismatchError("potential evaluated at a point of wrong dimension");
    Eigen::VectorXd e = wmat_ * x;
    if (guarded)
        for (long j = 0; j < e.size(); ++j)
            if (std::abs(e[j]) > kExponentGuard)
                throw ExponentOverflowError("exponent " + std::to_string(e[j]) +
                                            " outside the guarded range +-700");
    return e;
}

double Potential::value(const Eigen::VectorXd& x) const {
    Eigen::VectorXd e = exponents(x, false);
    double v = 0;
    for (long j = 0; j < e.size(); ++j) v += coeff_[j] * std::exp(e[j]);
    v += 0.5 * x.dot(qmat_ * x);
    return v;  // +inf signals overflow to callers doing line searches
}

Eigen::VectorXd Potential::grad(const Eigen::VectorXd& x) const {
    Eigen::VectorXd e = exponents(x, true);
    Eigen::VectorXd g = qmat_ * x;
    for (long j = 0; j < e.size(); ++j) g += coeff_[j] * std::exp(e[j]) * wmat_.row(j).transpose();
    return g;
}

Eigen::MatrixXd Potential::hess(const Eigen::VectorXd& x) const {
    Eigen::VectorXd e = exponents(x, true);
    Eigen::MatrixXd h = qmat_;
    for (long j = 0; j < e.size(); ++j)
        h += coeff_[j] * std::exp(e[j]) * wmat_.row(j).transpose() * wmat_.row(j);
    return h;
}

Eigen::VectorXd Potential::moment(const Eigen::VectorXd& x) const { return 0.5 * grad(x); }

namespace {

std::vector<Eigen::VectorXd> grid_points(std::size_t dim, const SamplingGrid& grid) {
    int ppd = std::max(grid.points_per_dim, 2);
    double total = std::pow(static_cast<double>(ppd), static_cast<double>(dim));
    while (total > 2e5 && ppd > 2) {
        --ppd;
        total = std::pow(static_cast<double>(ppd), static_cast<double>(dim));
    }
    std::vector<Eigen::VectorXd> pts;
    std::vector<int> idx(dim, 0);
    while (true) {
        Eigen::VectorXd x(static_cast<long>(dim));
        for (std::size_t i = 0; i < dim; ++i)
            x[static_cast<long>(i)] =
                -grid.radius + 2.0 * grid.radius * idx[i] / static_cast<double>(ppd - 1);
        pts.push_back(x);
        std::size_t pos = 0;
        while (pos < dim) {
            if (++idx[pos] < ppd) break;
            idx[pos] = 0;
            ++pos;
        }
        if (pos == dim) break;
    }
    return pts;
}

// sign bookkeeping for the sampled wall test
struct SignTrack {
    bool pos = false, negv = false, zero = false;
};

}  // namespace

FormClassification classify_form(const Potential& p, const std::vector<Vec>& regular_rows,
                                 const SamplingGrid& grid) {
    FormClassification out;

    if (p.is_model()) {
        // Hessian = sum exp(w_j.x) w_j w_j' over a basis: positive definite
        // everywhere; image of the half-gradient is the open cone over the
        // weights. Both facts are exact, so certify analytically.
        out.analytic = true;
        out.nondegenerate = true;
        out.strictly_convex = true;
        out.image_in_regular = true;
        for (const Vec& row : regular_rows) {
            bool has_pos = false, has_neg = false;
            for (const auto& [c, w] : p.terms()) {
                Rat v = dot(row, w);
                has_pos = has_pos || v > 0;
                has_neg = has_neg || v < 0;
            }
            // the open cone over the weights meets the wall row=0 unless the
            // row is one-signed across the generators (and not identically 0)
            if ((has_pos && has_neg) || (!has_pos && !has_neg)) {
                out.image_in_regular = false;
                out.notes.push_back("image touches a wall of the regular set");
                break;
            }
        }
        out.pseudo_kahler = out.nondegenerate && out.image_in_regular;
        return out;
    }

    out.analytic = false;
    out.notes.push_back("sampled, not proven");
    out.nondegenerate = true;
    out.strictly_convex = true;
    out.image_in_regular = true;
    std::vector<SignTrack> tracks(regular_rows.size());
    const double wall_tol = 1e-9;
    for (const Eigen::VectorXd& x : grid_points(p.dim(), grid)) {
        Eigen::MatrixXd h = p.hess(x);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
        double lo = es.eigenvalues().minCoeff();
        double hi = es.eigenvalues().cwiseAbs().maxCoeff();
        if (std::abs(es.eigenvalues().cwiseAbs().minCoeff()) <= wall_tol * std::max(1.0, hi))
            out.nondegenerate = false;
        if (lo <= 0) out.strictly_convex = false;
        Eigen::VectorXd mu = p.moment(x);
        for (std::size_t r = 0; r < regular_rows.size(); ++r) {
            double v = 0;
            for (std::size_t i = 0; i < p.dim(); ++i)
                v += to_double(regular_rows[r][i]) * mu[static_cast<long>(i)];
            if (std::abs(v) <= wall_tol)
                tracks[r].zero = true;
            else
                (v > 0 ? tracks[r].pos : tracks[r].negv) = true;
        }
    }
    for (std::size_t r = 0; r < regular_rows.size(); ++r) {
        if (tracks[r].zero || (tracks[r].pos && tracks[r].negv)) {
            out.image_in_regular = false;
            out.notes.push_back("sampled moment image crosses a wall");
            break;
        }
    }
    out.pseudo_kahler = out.nondegenerate && out.image_in_regular;
    return out;
}

std::optional<std::vector<Rat>> model_coefficients(const Potential& p, const Vec& target) {
    if (!p.is_model()) return std::nullopt;
    if (target.size() != p.dim()) throw DimensionMismatchError("model_coefficients: bad target");
    // target = sum_j t_j w_j ; columns of the system are the weights
    Mat cols(p.dim(), Vec(p.terms().size()));
    for (std::size_t j = 0; j < p.terms().size(); ++j)
        for (std::size_t i = 0; i < p.dim(); ++i) cols[i][j] = p.terms()[j].second[i];
    auto t = solve(cols, target);
    if (!t) return std::nullopt;
    return *t;
}

namespace {

MomentMembership newton_solve(const Potential& p, const Eigen::VectorXd& target,
                              const NewtonParams& params, const Eigen::VectorXd& start);

// exact recession test: is there d != 0 with w_j.d <= 0 for all j, Qd = 0,
// target.d >= 0, and (target.d > 0 or some w_j.d < 0)?
bool unattained_by_recession(const Potential& p, const Vec& target) {
    const std::size_t dim = p.dim();
    std::vector<HalfSpace> base;
    for (const auto& [c, w] : p.terms()) base.push_back({neg(w), Rel::Ge});  // w.d <= 0
    if (p.quad())
        for (const Vec& row : *p.quad()) base.push_back({row, Rel::Eq});  // Qd = 0

    {
        std::vector<HalfSpace> q = base;
        q.push_back({target, Rel::Gt});  // objective decreases without bound
        if (feasible(q, dim).feasible) return true;
    }
    for (std::size_t j0 = 0; j0 < p.terms().size(); ++j0) {
        std::vector<HalfSpace> q = base;
        q.push_back({target, Rel::Ge});
        q.push_back({neg(p.terms()[j0].second), Rel::Gt});  // w_j0.d < 0: strict descent direction
        if (feasible(q, dim).feasible) return true;
    }
    return false;
}

MomentMembership newton_solve(const Potential& p, const Eigen::VectorXd& target,
                              const NewtonParams& params, const Eigen::VectorXd& start) {
    const long n = static_cast<long>(p.dim());
    Eigen::VectorXd x = start;
    auto objective = [&](const Eigen::VectorXd& y) { return p.value(y) - 2.0 * target.dot(y); };
    Vec target_exact(p.dim());
    for (long i = 0; i < n; ++i) target_exact[static_cast<std::size_t>(i)] = rat_from_double(target[i]);

    bool recession_checked = false;
    for (int iter = 0; iter < params.max_iter; ++iter) {
        Eigen::VectorXd g;
        Eigen::MatrixXd h;
        try {
            g = p.grad(x) - 2.0 * target;
            h = p.hess(x);
        } catch (const ExponentOverflowError&) {
            return {MembershipStatus::Undecided, x, std::numeric_limits<double>::quiet_NaN(),
                    "exponent overflow during solve"};
        }
        double residual = 0.5 * g.lpNorm<Eigen::Infinity>();  // == |moment(x) - target|_inf
        if (residual <= params.tol)
            return {MembershipStatus::Member, x, residual, ""};

        if (x.lpNorm<Eigen::Infinity>() > params.divergence_radius && !recession_checked) {
            recession_checked = true;
            if (unattained_by_recession(p, target_exact))
                return {MembershipStatus::NotAttained, x, residual,
                        "objective decreases along a recession direction"};
        }

        Eigen::LDLT<Eigen::MatrixXd> ldlt(h);
        Eigen::VectorXd d = (ldlt.info() == Eigen::Success) ? Eigen::VectorXd(-ldlt.solve(g))
                                                            : Eigen::VectorXd(-g);
        if (!d.allFinite() || g.dot(d) >= 0) d = -g;

        double f0 = objective(x);
        double slope = g.dot(d);
        double t = 1.0;
        bool stepped = false;
        for (int ls = 0; ls < 60; ++ls) {
            Eigen::VectorXd cand = x + t * d;
            double f1 = objective(cand);
            if (std::isfinite(f1) && f1 <= f0 + 0.25 * t * slope) {
                x = cand;
                stepped = true;
                break;
            }
            t *= 0.5;
        }
        if (!stepped) {
            if (unattained_by_recession(p, target_exact))
                return {MembershipStatus::NotAttained, x, residual,
                        "objective decreases along a recession direction"};
            return {MembershipStatus::Undecided, x, residual, "line search stalled"};
        }
    }
    double residual = std::numeric_limits<double>::quiet_NaN();
    try {
        residual = (p.moment(x) - target).lpNorm<Eigen::Infinity>();
    } catch (const ExponentOverflowError&) {
    }
    if (unattained_by_recession(p, target_exact))
        return {MembershipStatus::NotAttained, x, residual,
                "objective decreases along a recession direction"};
    return {MembershipStatus::Undecided, x, residual, "max iterations reached"};
}

}  // namespace

MomentMembership in_moment_image(const Potential& p, const Vec& target, const NewtonParams& params) {
    if (target.size() != p.dim()) throw DimensionMismatchError("in_moment_image: bad target");
    if (p.is_model()) {
        auto t = model_coefficients(p, target);
        if (!t) return {MembershipStatus::NotAttained, {}, 0.0, "target outside the weight span"};
        bool interior = true;
        for (const Rat& c : *t) interior = interior && c > 0;
        if (!interior)
            return {MembershipStatus::NotAttained, {}, 0.0,
                    "cone coefficients not all positive (exact)"};
        // closed form start: w_j.x = log(2 t_j / c_j), then a Newton polish
        const long n = static_cast<long>(p.dim());
        Eigen::VectorXd rhs(n);
        for (long j = 0; j < n; ++j)
            rhs[j] = std::log(2.0 * to_double((*t)[static_cast<std::size_t>(j)]) /
                              to_double(p.terms()[static_cast<std::size_t>(j)].first));
        Eigen::VectorXd start = p.weight_matrix().colPivHouseholderQr().solve(rhs);
        Eigen::VectorXd tgt(n);
        for (long i = 0; i < n; ++i) tgt[i] = to_double(target[static_cast<std::size_t>(i)]);
        MomentMembership mm = newton_solve(p, tgt, params, start);
        if (mm.status != MembershipStatus::Member)
            mm.note = "exact cone membership holds; polish " +
                      (mm.note.empty() ? std::string("failed") : mm.note);
        return mm;
    }
    Eigen::VectorXd tgt(static_cast<long>(p.dim()));
    for (std::size_t i = 0; i < p.dim(); ++i) tgt[static_cast<long>(i)] = to_double(target[i]);
    return newton_solve(p, tgt, params, Eigen::VectorXd::Zero(static_cast<long>(p.dim())));
}

MomentMembership in_moment_image(const Potential& p, const Eigen::VectorXd& target,
                                 const NewtonParams& params) {
    if (target.size() != static_cast<long>(p.dim()))
        throw DimensionMismatchError("in_moment_image: bad target");
    return newton_solve(p, target, params, Eigen::VectorXd::Zero(static_cast<long>(p.dim())));
}

}  // namespace superq
