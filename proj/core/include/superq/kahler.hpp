#pragma once

#include <Eigen/Dense>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superq/linalg.hpp"

namespace superq {

/// Exponential-affine potential F(x) = sum_j c_j exp(w_j . x) + x'Qx/2 with
/// c_j > 0 and Q symmetric positive semidefinite. Terms are kept exactly so
/// model potentials admit exact image membership; evaluation is double based.
class Potential {
public:
    Potential(std::vector<std::pair<Rat, Vec>> terms, std::optional<Mat> quad, std::size_t dim);

    /// Unit-coefficient sum of exponentials over the given covectors.
    static Potential model(const std::vector<Vec>& weights);

    std::size_t dim() const { return dim_; }
    const std::vector<std::pair<Rat, Vec>>& terms() const { return terms_; }
    const std::optional<Mat>& quad() const { return quad_; }

    /// Pure exponential sum whose weights form a basis of the domain dual.
    bool is_model() const { return model_; }

    double value(const Eigen::VectorXd& x) const;
    Eigen::VectorXd grad(const Eigen::VectorXd& x) const;
    Eigen::MatrixXd hess(const Eigen::VectorXd& x) const;
    /// Moment map of the right torus action: half the gradient.
    Eigen::VectorXd moment(const Eigen::VectorXd& x) const;

    /// Largest |exponent| tolerated before grad/hess raise ExponentOverflowError.
    static constexpr double kExponentGuard = 700.0;

    const Eigen::MatrixXd& weight_matrix() const { return wmat_; }

private:
    std::vector<std::pair<Rat, Vec>> terms_;
    std::optional<Mat> quad_;
    std::size_t dim_ = 0;
    bool model_ = false;

    Eigen::MatrixXd wmat_;   // rows = weights
    Eigen::VectorXd coeff_;  // c_j
    Eigen::MatrixXd qmat_;   // zero when quad_ is absent

    Eigen::VectorXd exponents(const Eigen::VectorXd& x, bool guarded) const;
};

struct SamplingGrid {
    double radius = 2.0;
    int points_per_dim = 5;
};

struct FormClassification {
    bool nondegenerate = false;
    bool strictly_convex = false;
    bool image_in_regular = false;
    bool pseudo_kahler = false;
    bool analytic = false;  // false means "sampled, not proven"
    std::vector<std::string> notes;
};

/// Pseudo-Kahler test: nondegenerate Hessian and gradient image inside the
/// regular set. Model potentials over a cell basis are certified analytically;
/// everything else is sampled on the grid.
/// `regular_rows` act on moment covectors; a row evaluating to zero (or
/// changing sign across samples) means the image touches a wall.
FormClassification classify_form(const Potential& p, const std::vector<Vec>& regular_rows,
                                 const SamplingGrid& grid);

struct NewtonParams {
    double tol = 1e-8;
    int max_iter = 200;
    double divergence_radius = 1e3;
};

enum class MembershipStatus { Member, NotAttained, Undecided };

struct MomentMembership {
    MembershipStatus status = MembershipStatus::Undecided;
    Eigen::VectorXd point;  // preimage when status == Member
    double residual = std::numeric_limits<double>::quiet_NaN();
    std::string note;
};

/// Decides whether target lies in the image of the moment map by minimizing
/// F(x) - 2 target.x: damped Newton, exact rational recession certificates on
/// divergence, and an exact cone test on the model fast path.
MomentMembership in_moment_image(const Potential& p, const Vec& target,
                                 const NewtonParams& params = {});
MomentMembership in_moment_image(const Potential& p, const Eigen::VectorXd& target,
                                 const NewtonParams& params = {});

/// Exact solve of target = sum t_j w_j for model potentials (nullopt when the
/// potential is not a model).
std::optional<std::vector<Rat>> model_coefficients(const Potential& p, const Vec& target);

}  // namespace superq
