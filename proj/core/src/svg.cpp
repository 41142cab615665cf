#include "superq/svg.hpp"

#include <cmath>
#include <cstdio>

namespace superq {

namespace {

struct Pt {
    double x, y;
};

using Poly = std::vector<Pt>;

// affine form a*s + b*t + c of one constraint on the slice plane
struct SliceLine {
    double a, b, c;
    bool equality = false;
};

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", v + 0.0);  // normalize -0
    return buf;
}

// Sutherland-Hodgman against a*s + b*t + c >= 0
Poly clip(const Poly& poly, double a, double b, double c) {
    Poly out;
    const std::size_t n = poly.size();
    if (n == 0) return out;
    auto side = [&](const Pt& p) { return a * p.x + b * p.y + c; };
    for (std::size_t i = 0; i < n; ++i) {
        const Pt& cur = poly[i];
        const Pt& nxt = poly[(i + 1) % n];
        double sc = side(cur), sn = side(nxt);
        if (sc >= 0) out.push_back(cur);
        if ((sc >= 0) != (sn >= 0)) {
            double t = sc / (sc - sn);
            out.push_back({cur.x + t * (nxt.x - cur.x), cur.y + t * (nxt.y - cur.y)});
        }
    }
    return out;
}

Poly clip_region(const std::vector<SliceLine>& lines, double extent) {
    Poly poly = {{-extent, -extent}, {extent, -extent}, {extent, extent}, {-extent, extent}};
    for (const SliceLine& l : lines) {
        poly = clip(poly, l.a, l.b, l.c);
        if (l.equality) poly = clip(poly, -l.a, -l.b, -l.c);
        if (poly.empty()) break;
    }
    return poly;
}

std::vector<SliceLine> region_lines(const Context& ctx, const ConeRegion& region,
                                    const SliceSpec& slice, bool homogeneous_closure) {
    std::vector<SliceLine> lines;
    for (const Constraint& cst : region.constraints) {
        if (homogeneous_closure && cst.rho_shift) continue;
        Rat as = pairing(ctx.rs, slice.v1, cst.root.coords);
        Rat at = pairing(ctx.rs, slice.v2, cst.root.coords);
        Vec base = cst.rho_shift ? add(slice.origin, ctx.ps.rho) : slice.origin;
        Rat c0 = pairing(ctx.rs, base, cst.root.coords);
        SliceLine l{to_double(as), to_double(at), to_double(c0), false};
        switch (cst.rel) {
            case Relation::Ge0:
            case Relation::Gt0:
                break;
            case Relation::Lt0:
                l.a = -l.a;
                l.b = -l.b;
                l.c = -l.c;
                break;
            case Relation::Eq0:
                l.equality = true;
                break;
            case Relation::Ne0:
                continue;  // measure-zero wall; not drawn as a fill bound
        }
        lines.push_back(l);
    }
    return lines;
}

std::string polygon_tag(const Poly& poly, const std::string& style, double scale, double extent) {
    if (poly.size() < 3) return "";
    std::string pts;
    for (const Pt& p : poly) {
        if (!pts.empty()) pts += " ";
        pts += fmt((p.x + extent) * scale) + "," + fmt((extent - p.y) * scale);
    }
    return "  <polygon points=\"" + pts + "\" " + style + "/>\n";
}

}  // namespace

std::string render_atlas(const Context& ctx, const std::vector<Cell>& cs,
                         std::optional<std::size_t> selected_cell, const SliceSpec& slice, int box,
                         int lattice_den, double px) {
    const double extent = box + 0.5;
    const double size = 2 * extent * px;
    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(size) + "\" height=\"" +
           fmt(size) + "\" viewBox=\"0 0 " + fmt(size) + " " + fmt(size) + "\">\n";
    svg += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    ConeRegion ctilde = hc_cone(ctx);
    ConeRegion c_region = parameter_set_C(ctx);
    svg += polygon_tag(clip_region(region_lines(ctx, ctilde, slice, false), extent),
                       "fill=\"#d8e8f5\" stroke=\"#6a9fcb\" stroke-width=\"1\"", px, extent);
    svg += polygon_tag(clip_region(region_lines(ctx, c_region, slice, false), extent),
                       "fill=\"#aecde8\" stroke=\"none\"", px, extent);
    if (selected_cell && *selected_cell < cs.size()) {
        // homogeneous closure of the cell cone: the moment image of its model
        svg += polygon_tag(
            clip_region(region_lines(ctx, cs[*selected_cell].region, slice, true), extent),
            "fill=\"#f2c972\" fill-opacity=\"0.55\" stroke=\"#b58a2a\" stroke-width=\"1\"", px,
            extent);
    }

    // axes of the slice plane
    svg += "  <line x1=\"0\" y1=\"" + fmt(extent * px) + "\" x2=\"" + fmt(size) + "\" y2=\"" +
           fmt(extent * px) + "\" stroke=\"#999999\" stroke-width=\"0.5\"/>\n";
    svg += "  <line x1=\"" + fmt(extent * px) + "\" y1=\"0\" x2=\"" + fmt(extent * px) +
           "\" y2=\"" + fmt(size) + "\" stroke=\"#999999\" stroke-width=\"0.5\"/>\n";

    for (long i = -static_cast<long>(box) * lattice_den; i <= static_cast<long>(box) * lattice_den;
         ++i) {
        for (long j = -static_cast<long>(box) * lattice_den;
             j <= static_cast<long>(box) * lattice_den; ++j) {
            Rat s(i, lattice_den), t(j, lattice_den);
            Vec lam = add(slice.origin, add(scale(s, slice.v1), scale(t, slice.v2)));
            double cx = (to_double(s) + extent) * px;
            double cy = (extent - to_double(t)) * px;
            bool in_c = region_contains(ctx, c_region, lam);
            bool in_ct = in_c || region_contains(ctx, ctilde, lam);
            if (in_c) {
                svg += "  <circle cx=\"" + fmt(cx) + "\" cy=\"" + fmt(cy) +
                       "\" r=\"3\" fill=\"#1f4e79\"/>\n";
            } else if (in_ct) {
                svg += "  <circle cx=\"" + fmt(cx) + "\" cy=\"" + fmt(cy) +
                       "\" r=\"2.5\" fill=\"none\" stroke=\"#1f4e79\" stroke-width=\"1\"/>\n";
            } else {
                svg += "  <circle cx=\"" + fmt(cx) + "\" cy=\"" + fmt(cy) +
                       "\" r=\"1\" fill=\"#c8c8c8\"/>\n";
            }
        }
    }
    svg += "  <text x=\"4\" y=\"14\" font-family=\"monospace\" font-size=\"12\">" +
           ctx.rs.spec.name() + " / " + ctx.rf.tag() + "</text>\n";
    svg += "</svg>\n";
    return svg;
}

}  // namespace superq
