#include "superq/cli.hpp"

#include <filesystem>
#include <set>

#include "superq/config.hpp"
#include "superq/quantize.hpp"
#include "superq/report.hpp"
#include "superq/svg.hpp"

namespace superq {

namespace {

namespace fs = std::filesystem;

std::string parity_name(Parity p) { return p == Parity::Even ? "even" : "odd"; }

std::string weight_str(const Vec& v) { return vec_to_string(v); }

struct Job {
    JobConfig cfg;
    std::string out_dir;
};

void write_report(const Job& job, const std::string& name, const std::string& content) {
    fs::create_directories(job.out_dir);
    write_text_file((fs::path(job.out_dir) / name).string(), content);
}

Context build_context(const Job& job) {
    if (job.cfg.realform_tag.empty())
        throw ConfigError("missing [realform] tag (see list in the docs)");
    RealForm rf = real_form_from_tag(job.cfg.algebra, job.cfg.realform_tag);
    return make_context(job.cfg.algebra, rf, job.cfg.functional);
}

const Cell& select_cell(const Job& job, const Context& ctx, const std::vector<Cell>& cs) {
    std::set<std::size_t> mask_bits;
    for (int idx : job.cfg.cell_R) {
        if (idx < 0 || idx >= static_cast<int>(ctx.ps.simples.size()))
            throw ConfigError("cell R index " + std::to_string(idx) +
                              " outside the simple root table");
        const Root& simple = ctx.ps.simples[static_cast<std::size_t>(idx)];
        bool found = false;
        for (std::size_t i = 0; i < ctx.ps.pi_c.size(); ++i)
            if (ctx.ps.pi_c[i].coords == simple.coords) {
                mask_bits.insert(i);
                found = true;
            }
        if (!found)
            throw ConfigError("cell R index " + std::to_string(idx) +
                              " is not a compact simple root");
    }
    std::size_t mask = 0;
    for (std::size_t b : mask_bits) mask |= std::size_t{1} << b;
    return cs.at(mask);
}

CellPotential build_potential(const Job& job, const Context& ctx, const Cell& cell) {
    if (job.cfg.potential)
        return attach_potential(ctx, cell, job.cfg.potential->terms, job.cfg.potential->quad);
    return model_potential(ctx, cell);
}

void require_lattice_weight(const Job& job, const Vec& w, const Context& ctx) {
    if (static_cast<int>(w.size()) != ctx.rs.ambient_dim)
        throw ConfigError("[query] weight has dimension " + std::to_string(w.size()) +
                          ", expected " + std::to_string(ctx.rs.ambient_dim));
    for (const Rat& c : w) {
        Rat scaled = c * job.cfg.lattice_den;
        if (denominator(scaled) != 1) throw ConfigError("lambda-hat not in the integral lattice");
    }
}

std::string region_table(const Context& ctx, const std::string& name, const ConeRegion& region) {
    Table t({"region", "root", "parity", "relation", "shift"});
    for (const Constraint& c : region.constraints)
        t.add_row({name, root_to_string(ctx.rs, c.root.coords), parity_name(c.root.parity),
                   relation_name(c.rel), c.rho_shift ? "rho" : "none"});
    return t.to_tsv();
}

int cmd_roots(const Job& job, std::ostream& out) {
    RootSystem rs = build_root_system(job.cfg.algebra);
    Table t({"root", "parity", "coords", "length2"});
    for (const Root& r : rs.roots)
        t.add_row({root_to_string(rs, r.coords), parity_name(r.parity), weight_str(r.coords),
                   rat_to_string(pairing(rs, r.coords, r.coords))});
    write_report(job, "roots.tsv", t.to_tsv());
    out << rs.spec.name() << ": " << rs.roots.size() << " roots (" << rs.even_roots().size()
        << " even, " << rs.odd_roots().size() << " odd), ambient dim " << rs.ambient_dim << "\n";
    return 0;
}

int cmd_rho(const Job& job, std::ostream& out) {
    Context ctx = build_context(job);
    Table t({"root", "parity", "compact", "simple", "pi_c"});
    auto is_simple = [&](const Root& r) {
        for (const Root& s : ctx.ps.simples)
            if (s.coords == r.coords) return true;
        return false;
    };
    auto in_pi_c = [&](const Root& r) {
        for (const Root& s : ctx.ps.pi_c)
            if (s.coords == r.coords) return true;
        return false;
    };
    for (const Root& r : ctx.ps.positives) {
        bool cpt = r.is_even() && is_compact(ctx.rf, ctx.rs, r);
        t.add_row({root_to_string(ctx.rs, r.coords), parity_name(r.parity), cpt ? "yes" : "no",
                   is_simple(r) ? "yes" : "no", in_pi_c(r) ? "yes" : "no"});
    }
    write_report(job, "possys.tsv", t.to_tsv());

    LiteralAdmissibility lit = admissible_literal(ctx.ps, ctx.rs, ctx.rf);
    ConeFeasibility feas = admissible_feasible(ctx.ps, ctx.rs, ctx.rf);
    Table adm({"item", "value"});
    adm.add_row({"k_stable", lit.k_stable ? "true" : "false"});
    adm.add_row({"q_abelian", lit.q_abelian ? "true" : "false"});
    for (const auto& [a, b] : lit.k_witnesses)
        adm.add_row({"k_witness",
                     root_to_string(ctx.rs, a.coords) + " , " + root_to_string(ctx.rs, b.coords)});
    for (const auto& [a, b] : lit.q_witnesses)
        adm.add_row({"q_witness",
                     root_to_string(ctx.rs, a.coords) + " , " + root_to_string(ctx.rs, b.coords)});
    adm.add_row({"cone_feasible", feas.feasible ? "true" : "false"});
    if (feas.witness) adm.add_row({"witness", weight_str(*feas.witness)});
    write_report(job, "admissibility.tsv", adm.to_tsv());

    out << "rho = " << weight_str(ctx.ps.rho) << "\n";
    out << "simples:";
    for (const Root& s : ctx.ps.simples) out << " " << root_to_string(ctx.rs, s.coords);
    out << "\ncone feasible: " << (feas.feasible ? "yes" : "no") << "\n";
    return 0;
}

int cmd_cone(const Job& job, std::ostream& out) {
    Context ctx = build_context(job);
    std::string body = region_table(ctx, "hc_cone", hc_cone(ctx));
    std::string c_body = region_table(ctx, "C", parameter_set_C(ctx));
    // one file; skip the duplicated header of the second table
    auto second = c_body.find('\n');
    write_report(job, "cone.tsv", body + c_body.substr(second + 1));
    if (job.cfg.query_weight) {
        const Vec& w = *job.cfg.query_weight;
        if (static_cast<int>(w.size()) != ctx.rs.ambient_dim)
            throw ConfigError("[query] weight has wrong dimension");
        out << "weight " << weight_str(w) << ": in hc_cone "
            << (region_contains(ctx, hc_cone(ctx), w) ? "yes" : "no") << ", in C "
            << (region_contains(ctx, parameter_set_C(ctx), w) ? "yes" : "no") << "\n";
    } else {
        out << "cone tables written\n";
    }
    return 0;
}

int cmd_cells(const Job& job, std::ostream& out) {
    Context ctx = build_context(job);
    std::vector<Cell> cs = cells(ctx);
    Table t({"cell", "R", "closure", "dim", "rays", "subspace"});
    for (const Cell& cell : cs) {
        std::string rstr, cstr, raystr, sub;
        for (const Root& r : cell.R) rstr += (rstr.empty() ? "" : " ") + root_to_string(ctx.rs, r.coords);
        for (const Root& r : cell.closure)
            cstr += (cstr.empty() ? "" : " ") + root_to_string(ctx.rs, r.coords);
        try {
            for (const Vec& ray : extreme_rays(ctx, cell))
                raystr += (raystr.empty() ? "" : "; ") + weight_str(ray);
        } catch (const NotSimplicialError&) {
            raystr = "NOT_SIMPLICIAL";
        }
        for (const Vec& b : cell.subspace_basis) sub += (sub.empty() ? "" : "; ") + weight_str(b);
        t.add_row({std::to_string(cell.index), rstr.empty() ? "-" : rstr,
                   cstr.empty() ? "-" : cstr, std::to_string(cell.subspace_basis.size()),
                   raystr.empty() ? "-" : raystr, sub});
    }
    write_report(job, "cells.tsv", t.to_tsv());
    out << cs.size() << " cells\n";
    return 0;
}

int cmd_classify(const Job& job, std::ostream& out) {
    Context ctx = build_context(job);
    std::vector<Cell> cs = cells(ctx);
    const Cell& cell = select_cell(job, ctx, cs);
    CellPotential cp = build_potential(job, ctx, cell);
    FormClassification fc = classify_form(cp.potential, cp.frame.regular_rows, SamplingGrid{});
    Table t({"property", "value"});
    t.add_row({"nondegenerate", fc.nondegenerate ? "true" : "false"});
    t.add_row({"strictly_convex", fc.strictly_convex ? "true" : "false"});
    t.add_row({"image_in_regular", fc.image_in_regular ? "true" : "false"});
    t.add_row({"pseudo_kahler", fc.pseudo_kahler ? "true" : "false"});
    t.add_row({"certificate", fc.analytic ? "analytic" : "sampled"});
    for (const std::string& n : fc.notes) t.add_row({"note", n});
    write_report(job, "classify.tsv", t.to_tsv());
    out << "pseudo_kahler: " << (fc.pseudo_kahler ? "yes" : "no")
        << (fc.analytic ? " (analytic)" : " (sampled)") << "\n";
    return 0;
}

int cmd_spectrum(const Job& job, std::ostream& out) {
    Context ctx = build_context(job);
    std::vector<Cell> cs = cells(ctx);
    const Cell& cell = select_cell(job, ctx, cs);
    CellPotential cp = build_potential(job, ctx, cell);
    SpectrumReport rep = spectrum(ctx, cell, cp, job.cfg.box, job.cfg.solver, job.cfg.lattice_den);
    Table t({"cell", "lambda", "highest_weight", "multiplicity", "status"});
    for (const SpectrumEntry& e : rep.entries)
        t.add_row({std::to_string(rep.cell_index), weight_str(e.lam), weight_str(e.highest_weight),
                   std::to_string(e.multiplicity), "ok"});
    for (const Vec& lam : rep.undecided)
        t.add_row({std::to_string(rep.cell_index), weight_str(lam), "-", "0", "undecided"});
    write_report(job, "spectrum.tsv", t.to_tsv());
    out << rep.entries.size() << " entries, " << rep.undecided.size() << " undecided\n";
    for (const std::string& w : rep.warnings) out << "warning: " << w << "\n";
    return 0;
}

int cmd_model(const Job& job, std::ostream& out) {
    Context ctx = build_context(job);
    std::vector<Cell> cs = cells(ctx);
    GelfandModel model = gelfand_model(ctx, job.cfg.box, job.cfg.solver, job.cfg.lattice_den);
    Table t({"cell", "lambda", "highest_weight", "multiplicity"});
    for (const SpectrumReport& rep : model.reports)
        for (const SpectrumEntry& e : rep.entries)
            t.add_row({std::to_string(rep.cell_index), weight_str(e.lam),
                       weight_str(e.highest_weight), std::to_string(e.multiplicity)});
    write_report(job, "model.tsv", t.to_tsv());

    ExactlyOnce once = verify_exactly_once(ctx, cs, model, job.cfg.box, job.cfg.lattice_den);
    Table v({"item", "value"});
    v.add_row({"exactly_once", once.ok ? "true" : "false"});
    v.add_row({"misses", std::to_string(once.misses.size())});
    v.add_row({"doubles", std::to_string(once.doubles.size())});
    for (const Vec& m : once.misses) v.add_row({"miss", weight_str(m)});
    for (const Vec& d : once.doubles) v.add_row({"double", weight_str(d)});
    write_report(job, "verify.tsv", v.to_tsv());

    out << "cells: " << model.reports.size() << ", exactly_once: " << (once.ok ? "yes" : "no")
        << "\n";
    for (const std::string& w : model.warnings) out << "warning: " << w << "\n";
    return once.ok ? 0 : 1;
}

int cmd_reduce(const Job& job, std::ostream& out) {
    Context ctx = build_context(job);
    if (!job.cfg.query_weight) throw ConfigError("reduce needs a [query] weight");
    require_lattice_weight(job, *job.cfg.query_weight, ctx);
    std::vector<Cell> cs = cells(ctx);
    const Cell& cell = select_cell(job, ctx, cs);
    CellPotential cp = build_potential(job, ctx, cell);
    ReductionReport rep = reduce(ctx, cell, cp, *job.cfg.query_weight, job.cfg.solver);

    Table t({"lam_hat", "status", "gamma_frame", "gamma_ambient", "residual", "reduced_form",
             "reduced_quantization"});
    std::string status = rep.status == ReduceStatus::Ok
                             ? "ok"
                             : (rep.status == ReduceStatus::NotInImage ? "not_in_image" : "undecided");
    std::string gframe, gamb, res;
    for (std::size_t k = 0; k < rep.gamma.size(); ++k) {
        std::string one;
        for (long i = 0; i < rep.gamma[k].size(); ++i)
            one += (i ? "," : "") + format_double(rep.gamma[k][i]);
        gframe += (k ? "; " : "") + one;
        std::string amb;
        for (std::size_t i = 0; i < rep.gamma_ambient[k].size(); ++i)
            amb += (i ? "," : std::string()) + format_double(rep.gamma_ambient[k][i]);
        gamb += (k ? "; " : "") + amb;
        res += (k ? "; " : "") + format_double(rep.residuals[k]);
    }
    t.add_row({weight_str(rep.lam_hat), status, gframe.empty() ? "-" : gframe,
               gamb.empty() ? "-" : gamb, res.empty() ? "-" : res,
               weight_str(rep.reduced_form_label), weight_str(rep.reduced_quantization_label)});
    write_report(job, "reduce.tsv", t.to_tsv());
    out << "reduce " << weight_str(rep.lam_hat) << ": " << status;
    if (rep.status == ReduceStatus::Ok) out << ", |Gamma| = " << rep.gamma.size();
    if (!rep.note.empty()) out << " (" << rep.note << ")";
    out << "\n";
    return rep.status == ReduceStatus::NotInImage ? 1 : 0;
}

int cmd_qr(const Job& job, std::ostream& out) {
    Context ctx = build_context(job);
    if (!job.cfg.query_weight) throw ConfigError("qr needs a [query] weight");
    require_lattice_weight(job, *job.cfg.query_weight, ctx);
    for (const Rat& c : *job.cfg.query_weight)
        if (abs(c) > job.cfg.box)
            throw ConfigError("[query] weight lies outside the box; raise [box] n");
    std::vector<Cell> cs = cells(ctx);
    const Cell& cell = select_cell(job, ctx, cs);
    CellPotential cp = build_potential(job, ctx, cell);
    QrCheck qr = check_qr(ctx, cell, cp, *job.cfg.query_weight, job.cfg.box, job.cfg.solver,
                          job.cfg.lattice_den);
    Table t({"lam_hat", "lhs", "rhs", "equal", "status"});
    t.add_row({weight_str(*job.cfg.query_weight), std::to_string(qr.lhs), std::to_string(qr.rhs),
               qr.equal ? "true" : "false", qr.status == QrStatus::Decided ? "decided" : "undecided"});
    write_report(job, "qr.tsv", t.to_tsv());
    out << "lhs = " << qr.lhs << ", rhs = " << qr.rhs << ", equal = "
        << (qr.equal ? "true" : "false") << "\n";
    return 0;
}

int cmd_unitary(const Job& job, std::ostream& out) {
    if (!job.cfg.unitarity) throw ConfigError("unitary needs a [unitarity] section");
    const UnitaritySpec& u = *job.cfg.unitarity;
    Table t({"item", "value"});
    if (!u.is_exception) {
        Context ctx = osp_context(u.osp.m, u.osp.n);
        Vec lpr = lambda_plus_rho_osp(u.osp, ctx);
        OspVerdict v = osp_unitarizable(u.osp);
        t.add_row({"lambda_plus_rho", weight_str(lpr)});
        t.add_row({"in_C", v.in_c ? "true" : "false"});
        t.add_row({"binding_root", root_to_string(ctx.rs, v.binding_root.coords)});
        t.add_row({"binding_value", rat_to_string(v.binding_value)});
        t.add_row({"eps1_delta1", v.eps1_delta1.to_string(u.osp.m, u.osp.n) + " < 0"});
        out << "in_C: " << (v.in_c ? "yes" : "no") << ", binding "
            << root_to_string(ctx.rs, v.binding_root.coords) << " = "
            << rat_to_string(v.binding_value) << "\n";
    } else {
        ExceptionFlags f = exception_flags(u.exception_family, u.a, u.b, u.mu);
        t.add_row({"has_data", f.has_data ? "true" : "false"});
        if (f.has_data) {
            t.add_row({"c_condition", *f.c_condition ? "true" : "false"});
            t.add_row({"c_inequality", f.c_inequality});
            t.add_row({"unitarizable_condition", *f.unitarizable_condition ? "true" : "false"});
            t.add_row({"unitarizable_inequality", f.unitarizable_inequality});
            t.add_row({"agree", *f.agree ? "true" : "false"});
            out << "c_condition: " << (*f.c_condition ? "true" : "false")
                << ", unitarizable: " << (*f.unitarizable_condition ? "true" : "false")
                << ", agree: " << (*f.agree ? "true" : "false") << "\n";
        } else {
            t.add_row({"note", "no stored thresholds for this family"});
            out << "no stored thresholds for this family\n";
        }
    }
    write_report(job, "unitary.tsv", t.to_tsv());
    return 0;
}

int cmd_atlas(const Job& job, std::ostream& out) {
    Context ctx = build_context(job);
    std::vector<Cell> cs = cells(ctx);
    SliceSpec slice;
    if (job.cfg.slice) {
        slice = *job.cfg.slice;
        if (static_cast<int>(slice.v1.size()) != ctx.rs.ambient_dim ||
            static_cast<int>(slice.v2.size()) != ctx.rs.ambient_dim ||
            static_cast<int>(slice.origin.size()) != ctx.rs.ambient_dim)
            throw ConfigError("atlas slice vectors must have the ambient dimension");
    } else {
        const std::size_t d = static_cast<std::size_t>(ctx.rs.ambient_dim);
        slice.v1.assign(d, Rat(0));
        slice.v2.assign(d, Rat(0));
        slice.origin.assign(d, Rat(0));
        slice.v1[0] = 1;
        slice.v2[1] = 1;
    }
    std::optional<std::size_t> selected;
    if (!job.cfg.cell_R.empty() || job.cfg.potential) {
        selected = select_cell(job, ctx, cs).index;
    } else {
        selected = std::size_t{0};
    }
    std::string svg = render_atlas(ctx, cs, selected, slice, job.cfg.box, job.cfg.lattice_den,
                                   job.cfg.atlas_scale);
    write_report(job, "atlas.svg", svg);
    out << "atlas.svg written\n";
    return 0;
}

}  // namespace

int run_job(const CliOptions& options, std::ostream& out, std::ostream& err) {
    try {
        Job job;
        if (options.config_path.empty()) throw ConfigError("missing --config PATH");
        job.cfg = load_job_config(options.config_path);
        if (options.box) {
            if (*options.box < 0) throw ConfigError("--box must be nonnegative");
            job.cfg.box = *options.box;
        }
        if (options.tol) {
            if (!(*options.tol > 0)) throw ConfigError("--tol must be positive");
            job.cfg.solver.tol = *options.tol;
        }
        if (options.slice) {
            std::vector<std::string> parts;
            std::string v = *options.slice;
            std::size_t start = 0;
            while (true) {
                auto semi = v.find(';', start);
                parts.push_back(v.substr(start, semi == std::string::npos ? semi : semi - start));
                if (semi == std::string::npos) break;
                start = semi + 1;
            }
            if (parts.size() != 3) throw ConfigError("--slice must be 'v1 ; v2 ; origin'");
            SliceSpec slice;
            slice.v1 = vec_from_string(parts[0]);
            slice.v2 = vec_from_string(parts[1]);
            slice.origin = vec_from_string(parts[2]);
            job.cfg.slice = std::move(slice);
        }
        job.out_dir = options.out_dir;

        const std::string& cmd = options.command;
        if (cmd == "roots") return cmd_roots(job, out);
        if (cmd == "rho") return cmd_rho(job, out);
        if (cmd == "cone") return cmd_cone(job, out);
        if (cmd == "cells") return cmd_cells(job, out);
        if (cmd == "classify") return cmd_classify(job, out);
        if (cmd == "spectrum") return cmd_spectrum(job, out);
        if (cmd == "model") return cmd_model(job, out);
        if (cmd == "reduce") return cmd_reduce(job, out);
        if (cmd == "qr") return cmd_qr(job, out);
        if (cmd == "unitary") return cmd_unitary(job, out);
        if (cmd == "atlas") return cmd_atlas(job, out);
        throw ConfigError("unknown command '" + cmd + "'");
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace superq
