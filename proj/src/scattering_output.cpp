#include <cstdio>
#include <sstream>

#include "tropmirror/errors.hpp"
#include "tropmirror/scattering.hpp"

namespace tropmirror {

namespace {

Rational as_rational(std::int64_t v) { return Rational(static_cast<long>(v)); }

// Liang-Barsky in exact arithmetic; s_max empty means unbounded.
std::optional<std::pair<RPoint, RPoint>> clip(const RPoint& base, const Vec2& d,
                                              std::optional<Rational> s_max, const Window& w) {
    Rational lo = 0;
    std::optional<Rational> hi = s_max;
    auto edge = [&](const Rational& p, const Rational& q) {
        // need p * s <= q
        if (p == 0) return q >= 0;
        const Rational r = q / p;
        if (p < 0) {
            if (r > lo) lo = r;
        } else if (!hi || r < *hi) {
            hi = r;
        }
        return true;
    };
    const Rational dx = as_rational(d.x), dy = as_rational(d.y);
    if (!edge(-dx, base.x - w.x_min) || !edge(dx, w.x_max - base.x) ||
        !edge(-dy, base.y - w.y_min) || !edge(dy, w.y_max - base.y))
        return std::nullopt;
    if (!hi || lo > *hi) return std::nullopt;
    return std::make_pair(base.offset(d, lo), base.offset(d, *hi));
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s = buf;
    if (s == "-0.000") s = "0.000";
    return s;
}

std::string function_text(const Poly& f) {
    std::ostringstream out;
    out << "1";
    for (const auto& [m, c] : f)
        out << " + " << to_string(c) << "*N^(" << m.x << "," << m.y << ")";
    return out.str();
}

}  // namespace

std::string render_diagram(const WallStructure& s, const Window& window) {
    if (window.x_min >= window.x_max || window.y_min >= window.y_max)
        throw PreconditionError("render_diagram: empty window");
    const double scale = 40.0;
    const double x0 = window.x_min.get_d(), y1 = window.y_max.get_d();
    const double width = Rational(window.x_max - window.x_min).get_d() * scale;
    const double height = Rational(window.y_max - window.y_min).get_d() * scale;
    auto px = [&](const Rational& x) { return fmt((x.get_d() - x0) * scale); };
    auto py = [&](const Rational& y) { return fmt((y1 - y.get_d()) * scale); };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
        << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
    out << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" "
           "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" "
           "fill=\"#b0306a\"/></marker></defs>\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<!-- order " << s.order << " -->\n";

    // zigzag through all vertices in the vertical range
    const std::int64_t jlo = floor_of(window.y_min).get_si() - 1;
    const std::int64_t jhi = floor_of(window.y_max).get_si() + 1;
    out << "<g class=\"zigzag\" stroke=\"#999\" stroke-width=\"1\" fill=\"none\">\n";
    for (std::int64_t j = jlo; j < jhi; ++j) {
        const Vec2 v = s.chart.vertex(j), e = s.chart.edge(j);
        if (auto seg = clip(to_point(v), e, Rational(1), window))
            out << "<line x1=\"" << px(seg->first.x) << "\" y1=\"" << py(seg->first.y) << "\" x2=\""
                << px(seg->second.x) << "\" y2=\"" << py(seg->second.y) << "\"/>\n";
    }
    out << "</g>\n";

    const auto placed = s.placed_walls(window.y_min, window.y_max);
    for (const auto& w : placed) {
        if (w.kind == WallKind::Wall && w.function.empty()) continue;
        auto seg = clip(w.base, w.direction, w.extent, window);
        if (!seg || seg->first == seg->second) continue;
        std::string style;
        switch (w.kind) {
            case WallKind::Slab: style = "class=\"slab\" stroke=\"#333\" stroke-width=\"3\""; break;
            case WallKind::KinkRay:
                style = "class=\"kink-ray\" stroke=\"#2a6fb0\" stroke-width=\"1.5\" stroke-dasharray=\"6 3\"";
                break;
            case WallKind::Wall:
                style = "class=\"wall\" stroke=\"#b0306a\" stroke-width=\"1\" marker-end=\"url(#arrow)\"";
                break;
        }
        out << "<line " << style << " x1=\"" << px(seg->first.x) << "\" y1=\"" << py(seg->first.y)
            << "\" x2=\"" << px(seg->second.x) << "\" y2=\"" << py(seg->second.y) << "\"><title>"
            << to_string(w.kind) << ": " << function_text(w.function) << "</title></line>\n";
    }
    out << "</svg>\n";
    return out.str();
}

nlohmann::json to_json(const WallStructure& s) {
    nlohmann::json walls = nlohmann::json::array();
    for (const auto& w : s.walls) {
        const auto pieces = s.pieces(w);
        nlohmann::json function = nlohmann::json::array();
        if (!pieces.empty())
            for (const auto& [mono, c] : pieces.front().terms)
                function.push_back({{"m", {mono.m.x, mono.m.y}}, {"a", mono.a}, {"c", to_string(c)}});
        nlohmann::json jp = nlohmann::json::array();
        for (const auto& p : pieces) {
            nlohmann::json terms = nlohmann::json::array();
            for (const auto& [mono, c] : p.terms)
                terms.push_back({{"m", {mono.m.x, mono.m.y}}, {"a", mono.a}, {"c", to_string(c)}});
            jp.push_back({{"strip", p.strip},
                          {"start", {to_string(p.start.x), to_string(p.start.y)}},
                          {"end", p.end ? nlohmann::json{to_string(p.end->x), to_string(p.end->y)}
                                        : nlohmann::json(nullptr)},
                          {"function", terms}});
        }
        walls.push_back({{"kind", to_string(w.kind)},
                         {"base", {to_string(w.base.x), to_string(w.base.y)}},
                         {"direction", {w.direction.x, w.direction.y}},
                         {"extent", w.extent ? nlohmann::json(to_string(*w.extent)) : nlohmann::json(nullptr)},
                         {"kink", w.kink},
                         {"function", function},
                         {"pieces", jp}});
    }
    nlohmann::json stats = nlohmann::json::array();
    for (const auto& st : s.stats)
        stats.push_back({{"order", st.order}, {"joints", st.joints_examined}, {"walls_added", st.walls_added}});
    return {{"chart", to_json(s.chart)}, {"order", s.order}, {"cut", s.cut}, {"walls", walls},
            {"stats", stats}};
}

StructureAudit audit_structure(const WallStructure& s) {
    StructureAudit audit;
    for (const auto& w : s.walls) {
        for (const auto& piece : s.pieces(w)) {
            // a reference point strictly inside the piece
            const RPoint mid = piece.end ? RPoint{(piece.start.x + piece.end->x) / 2,
                                                  (piece.start.y + piece.end->y) / 2}
                                         : piece.start.offset(w.direction, Rational(1));
            for (const auto& [mono, c] : piece.terms) {
                ++audit.monomials;
                // -d/dm of the height, from height values rather than the gradient table
                const Rational step(1, 1000000);
                const Rational a = (s.chart.height(mid) - s.chart.height(mid.offset(mono.m, step))) / step;
                if (a != as_rational(mono.a)) ++audit.homogeneity_violations;
                if (mono.a != -mono.m.x) ++audit.literal_mx_mismatches;
                if (w.kind != WallKind::Slab && mono.a <= 0) ++audit.outgoing_violations;
            }
        }
    }
    for (const auto& j : find_joints(s)) {
        ++audit.joints;
        if (!loop_product(j.point, s, s.order).identity) ++audit.inconsistent_joints;
    }
    try {
        const BiSeries L = bi_log(f_out(s));
        for (const auto& [key, c] : L.terms())
            if (key.first != -key.second || key.first % 3 != 0) audit.fout_support_ok = false;
    } catch (const InvariantError&) {
        audit.fout_support_ok = false;
    }
    return audit;
}

}  // namespace tropmirror
