#include "superq/quantize.hpp"

#include <algorithm>
#include <map>

namespace superq {

CellPotential model_potential(const Context& ctx, const Cell& cell, const std::vector<Rat>& coeffs) {
    CellFrame frame = cell_frame(ctx, cell);
    std::vector<Vec> rays = extreme_rays(ctx, cell);
    std::vector<std::pair<Rat, Vec>> terms;
    for (std::size_t j = 0; j < rays.size(); ++j) {
        Rat c = coeffs.empty() ? Rat(1) : coeffs.at(j);
        terms.emplace_back(c, frame.covector(rays[j]));
    }
    std::size_t dim = frame.dim();
    return {std::move(frame), Potential(std::move(terms), std::nullopt, dim), std::move(rays)};
}

CellPotential attach_potential(const Context& ctx, const Cell& cell,
                               const std::vector<std::pair<Rat, Vec>>& ambient_terms,
                               std::optional<Mat> quad) {
    CellFrame frame = cell_frame(ctx, cell);
    std::vector<std::pair<Rat, Vec>> terms;
    for (const auto& [c, w] : ambient_terms) terms.emplace_back(c, frame.covector(w));
    std::size_t dim = frame.dim();
    return {std::move(frame), Potential(std::move(terms), std::move(quad), dim), {}};
}

namespace {

// Sampled check that the moment image stays inside the Harish-Chandra cone;
// exact one-signedness test on the generators for model potentials.
std::vector<std::string> image_cone_warnings(const CellPotential& cp) {
    std::vector<std::string> warnings;
    const CellFrame& f = cp.frame;
    if (cp.potential.is_model()) {
        // image = positive combinations of the weights, so a weak row needs
        // every generator nonnegative and a strict row needs one positive too
        for (std::size_t r = 0; r < f.hc_rows.size(); ++r) {
            bool all_nonneg = true, some_pos = false;
            for (const auto& [c, w] : cp.potential.terms()) {
                Rat v = dot(f.hc_rows[r], w);
                all_nonneg = all_nonneg && v >= 0;
                some_pos = some_pos || v > 0;
            }
            if (!all_nonneg || (f.hc_strict[r] && !some_pos)) {
                warnings.push_back("moment image leaves the Harish-Chandra cone");
                break;
            }
        }
        return warnings;
    }
    SamplingGrid grid;
    std::vector<Eigen::VectorXd> pts;
    {
        // reuse the classify grid through a tiny local sweep
        const std::size_t dim = cp.potential.dim();
        int ppd = 5;
        std::vector<int> idx(dim, 0);
        while (true) {
            Eigen::VectorXd x(static_cast<long>(dim));
            for (std::size_t i = 0; i < dim; ++i)
                x[static_cast<long>(i)] = -grid.radius + 2.0 * grid.radius * idx[i] / (ppd - 1);
            pts.push_back(x);
            std::size_t pos = 0;
            while (pos < dim) {
                if (++idx[pos] < ppd) break;
                idx[pos] = 0;
                ++pos;
            }
            if (pos == dim) break;
        }
    }
    const double tol = 1e-9;
    for (const Eigen::VectorXd& x : pts) {
        Eigen::VectorXd mu = cp.potential.moment(x);
        for (std::size_t r = 0; r < f.hc_rows.size(); ++r) {
            double v = 0;
            for (std::size_t i = 0; i < cp.potential.dim(); ++i)
                v += to_double(f.hc_rows[r][i]) * mu[static_cast<long>(i)];
            bool bad = f.hc_strict[r] ? (v <= tol) : (v < -tol);
            if (bad) {
                warnings.push_back("sampled moment image leaves the Harish-Chandra cone");
                return warnings;
            }
        }
    }
    return warnings;
}

}  // namespace

SpectrumReport spectrum(const Context& ctx, const Cell& cell, const CellPotential& cp, int box,
                        const NewtonParams& params, int lattice_den) {
    SpectrumReport report;
    report.cell_index = cell.index;
    report.warnings = image_cone_warnings(cp);
    for (const Vec& lam : enumerate_integral(ctx, cell.region, box, lattice_den)) {
        MomentMembership mm = in_moment_image(cp.potential, cp.frame.covector(lam), params);
        switch (mm.status) {
            case MembershipStatus::Member:
                report.entries.push_back({lam, add(lam, ctx.ps.rho), 1});
                break;
            case MembershipStatus::NotAttained:
                break;
            case MembershipStatus::Undecided:
                report.undecided.push_back(lam);
                break;
        }
    }
    return report;
}

GelfandModel gelfand_model(const Context& ctx, int box, const NewtonParams& params,
                           int lattice_den) {
    GelfandModel model;
    for (const Cell& cell : cells(ctx)) {
        SpectrumReport report;
        report.cell_index = cell.index;
        try {
            CellPotential cp = model_potential(ctx, cell);
            report = spectrum(ctx, cell, cp, box, params, lattice_den);
        } catch (const NotSimplicialError& e) {
            model.skipped_cells.push_back(cell.index);
            model.warnings.push_back("cell " + std::to_string(cell.index) +
                                     " skipped (not simplicial): " + e.what());
        }
        model.reports.push_back(std::move(report));
    }
    return model;
}

ExactlyOnce verify_exactly_once(const Context& ctx, const std::vector<Cell>& cs,
                                const GelfandModel& model, int box, int lattice_den) {
    ExactlyOnce out;
    std::vector<std::map<Vec, int>> entry_sets(model.reports.size());
    for (std::size_t i = 0; i < model.reports.size(); ++i)
        for (const SpectrumEntry& e : model.reports[i].entries) entry_sets[i][e.lam] += e.multiplicity;

    auto skipped = [&](std::size_t cell_index) {
        return std::find(model.skipped_cells.begin(), model.skipped_cells.end(), cell_index) !=
               model.skipped_cells.end();
    };

    for (const Vec& lam : enumerate_integral(ctx, parameter_set_C(ctx), box, lattice_den)) {
        int count = 0;
        for (const auto& s : entry_sets) {
            auto it = s.find(lam);
            if (it != s.end()) count += it->second;
        }
        if (count == 0) {
            auto home = cell_of(ctx, cs, lam);
            if (home && skipped(*home)) continue;  // verification restricted
            out.misses.push_back(lam);
        } else if (count > 1) {
            out.doubles.push_back(lam);
        }
    }
    out.ok = out.misses.empty() && out.doubles.empty();
    return out;
}

ReductionReport reduce(const Context& ctx, const Cell& cell, const CellPotential& cp,
                       const Vec& lam_hat, const NewtonParams& params) {
    ReductionReport report;
    report.lam_hat = lam_hat;
    report.reduced_form_label = lam_hat;
    report.reduced_quantization_label = add(lam_hat, ctx.ps.rho);

    MomentMembership mm = in_moment_image(cp.potential, cp.frame.covector(lam_hat), params);
    switch (mm.status) {
        case MembershipStatus::Member: {
            report.status = ReduceStatus::Ok;
            report.gamma.push_back(mm.point);
            report.residuals.push_back(mm.residual);
            const std::size_t d = cp.frame.basis.empty() ? 0 : cp.frame.basis[0].size();
            std::vector<double> point(d, 0.0);
            for (std::size_t j = 0; j < cp.frame.basis.size(); ++j)
                for (std::size_t i = 0; i < d; ++i)
                    point[i] += to_double(cp.frame.basis[j][i]) * mm.point[static_cast<long>(j)];
            report.gamma_ambient.push_back(std::move(point));
            break;
        }
        case MembershipStatus::NotAttained:
            report.status = ReduceStatus::NotInImage;
            report.note = mm.note.empty() ? "weight not in the moment image" : mm.note;
            break;
        case MembershipStatus::Undecided:
            report.status = ReduceStatus::Undecided;
            report.note = mm.note;
            break;
    }
    return report;
}

QrCheck check_qr(const Context& ctx, const Cell& cell, const CellPotential& cp, const Vec& lam_hat,
                 int box, const NewtonParams& params, int lattice_den) {
    QrCheck out;
    for (const Rat& c : lam_hat) {
        Rat scaled = c * lattice_den;
        if (denominator(scaled) != 1) throw Error("check_qr: weight not in the integral lattice");
    }
    for (const Rat& c : lam_hat)
        if (abs(c) > box) throw Error("check_qr: weight outside the box");

    ReductionReport red = reduce(ctx, cell, cp, lam_hat, params);
    if (red.status == ReduceStatus::Undecided) {
        out.status = QrStatus::Undecided;
        return out;
    }
    bool in_c = region_contains(ctx, parameter_set_C(ctx), lam_hat);
    out.lhs = (red.status == ReduceStatus::Ok && in_c) ? 1 : 0;

    // multiplicity of lam_hat in the spectrum: cell region membership plus
    // moment image membership, the same predicate spectrum() scans with
    bool in_cell = region_contains(ctx, cell.region, lam_hat);
    if (!in_cell) {
        out.rhs = 0;
    } else {
        MomentMembership mm = in_moment_image(cp.potential, cp.frame.covector(lam_hat), params);
        if (mm.status == MembershipStatus::Undecided) {
            out.status = QrStatus::Undecided;
            return out;
        }
        out.rhs = mm.status == MembershipStatus::Member ? 1 : 0;
    }
    out.equal = out.lhs == out.rhs;
    return out;
}

}  // namespace superq
