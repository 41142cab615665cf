#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "superq/cones.hpp"
#include "superq/kahler.hpp"

namespace superq {

/// A potential expressed in the coordinate frame of one cell.
struct CellPotential {
    CellFrame frame;
    Potential potential;
    std::vector<Vec> rays;  // ambient ray representatives when model built
};

/// Exponential model potential of the cell, unit coefficients unless given.
CellPotential model_potential(const Context& ctx, const Cell& cell,
                              const std::vector<Rat>& coeffs = {});

/// User potential with ambient weight covectors, restricted to the cell frame.
CellPotential attach_potential(const Context& ctx, const Cell& cell,
                               const std::vector<std::pair<Rat, Vec>>& ambient_terms,
                               std::optional<Mat> quad);

struct SpectrumEntry {
    Vec lam;             // integral weight in the cell region
    Vec highest_weight;  // lam + rho
    int multiplicity = 1;
};

struct SpectrumReport {
    std::size_t cell_index = 0;
    std::vector<SpectrumEntry> entries;
    std::vector<Vec> undecided;  // solver could not decide membership
    std::vector<std::string> warnings;
};

/// Integral weights of the box lying in the cell region whose restriction is
/// attained by the moment map. Deterministic entry order.
SpectrumReport spectrum(const Context& ctx, const Cell& cell, const CellPotential& cp, int box,
                        const NewtonParams& params = {}, int lattice_den = 1);

struct GelfandModel {
    std::vector<SpectrumReport> reports;      // one per cell, skipped cells empty
    std::vector<std::size_t> skipped_cells;   // non-simplicial cells
    std::vector<std::string> warnings;
};

/// Model potential spectrum for every cell of the parameter set.
GelfandModel gelfand_model(const Context& ctx, int box, const NewtonParams& params = {},
                           int lattice_den = 1);

struct ExactlyOnce {
    bool ok = false;
    std::vector<Vec> misses;   // weights of C in no report
    std::vector<Vec> doubles;  // weights appearing in more than one report
};

/// Scans the integral weights of the parameter set inside the box and checks
/// each appears in exactly one report. Weights belonging to skipped cells are
/// excluded from the miss count.
ExactlyOnce verify_exactly_once(const Context& ctx, const std::vector<Cell>& cs,
                                const GelfandModel& model, int box, int lattice_den = 1);

enum class ReduceStatus { Ok, NotInImage, Undecided };

struct ReductionReport {
    ReduceStatus status = ReduceStatus::Undecided;
    Vec lam_hat;
    std::vector<Eigen::VectorXd> gamma;          // solved points, cell frame coordinates
    std::vector<std::vector<double>> gamma_ambient;
    std::vector<double> residuals;
    Vec reduced_form_label;          // the weight itself, standing for -i d(lam_hat)
    Vec reduced_quantization_label;  // lam_hat + rho
    std::string note;
};

/// Solves the moment fiber over lam_hat; strict convexity makes it a single
/// point. NotInImage when membership fails.
ReductionReport reduce(const Context& ctx, const Cell& cell, const CellPotential& cp,
                       const Vec& lam_hat, const NewtonParams& params = {});

enum class QrStatus { Decided, Undecided };

struct QrCheck {
    QrStatus status = QrStatus::Decided;
    int lhs = 0;  // 1 iff reduction succeeds and lam_hat lies in the parameter set
    int rhs = 0;  // multiplicity of lam_hat in the spectrum
    bool equal = false;
};

QrCheck check_qr(const Context& ctx, const Cell& cell, const CellPotential& cp, const Vec& lam_hat,
                 int box, const NewtonParams& params = {}, int lattice_den = 1);

}  // namespace superq
