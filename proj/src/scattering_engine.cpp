#include <algorithm>
#include <cmath>
#include <set>

#include "scattering_detail.hpp"
#include "tropmirror/errors.hpp"

namespace tropmirror {

namespace {

Rational as_rational(std::int64_t v) { return Rational(static_cast<long>(v)); }

Wall wall_image(const AffineChart& chart, const Wall& w, std::int64_t q) {
    if (q == 0) return w;
    Wall r = w;
    r.base = chart.glue(w.base, q);
    r.direction = chart.glue_linear(w.direction, q);
    r.function.clear();
    for (const auto& [m, c] : w.function) r.function[chart.glue_linear(m, q)] = c;
    return r;
}

RPoint wall_end(const Wall& w) { return w.base.offset(w.direction, *w.extent); }

std::pair<Rational, Rational> y_span(const Wall& w) {
    if (w.direction.y == 0) return {w.base.y, w.base.y};
    if (!w.extent) throw InvariantError("scattering: unbounded non-horizontal wall");
    const Rational y2 = wall_end(w).y;
    return {std::min(w.base.y, y2), std::max(w.base.y, y2)};
}

// strip entered when leaving p in direction d (d.y != 0)
std::int64_t strip_leaving(const RPoint& p, const Vec2& d) {
    const std::int64_t f = floor_of(p.y).get_si();
    if (d.y > 0 || !is_integer(p.y)) return f;
    return f - 1;
}

std::int64_t min_order(const AffineChart& chart, const Poly& f, std::int64_t strip) {
    std::int64_t best = INT64_MAX;
    for (const auto& [m, c] : f) best = std::min(best, chart.t_order(strip, m));
    return best;
}

// Length of the part of a wall on which it is nontrivial modulo t^{k+1}.
// Returns false if the wall is trivial from the start.
bool assign_extent(const AffineChart& chart, Wall& w, int k) {
    if (w.kind == WallKind::Slab) return true;
    if (w.function.empty()) return w.kind == WallKind::KinkRay;
    if (w.direction.y == 0) {
        w.extent.reset();
        return min_order(chart, w.function, floor_of(w.base.y).get_si()) <= k;
    }
    Rational s = 0;
    RPoint p = w.base;
    for (int guard = 0; guard < 100000; ++guard) {
        const std::int64_t strip = strip_leaving(p, w.direction);
        if (min_order(chart, w.function, strip) > k) {
            w.extent = s;
            return s > 0;
        }
        const std::int64_t next_y = w.direction.y > 0 ? strip + 1 : strip;
        s = (as_rational(next_y) - w.base.y) / as_rational(w.direction.y);
        p = w.base.offset(w.direction, s);
    }
    throw InvariantError("scattering: non-horizontal wall does not become trivial");
}

Poly filter_within(const Poly& f, const Grading& g, std::int64_t bound) {
    Poly r;
    for (const auto& [m, c] : f)
        if (c != 0 && g.within(m, bound)) r[m] = c;
    return r;
}

// Parameter s with p = base + s d, if p lies on the (possibly unbounded) ray.
std::optional<Rational> parameter_on(const Wall& w, const RPoint& p) {
    const Rational wx = p.x - w.base.x, wy = p.y - w.base.y;
    if (wx * as_rational(w.direction.y) != wy * as_rational(w.direction.x)) return std::nullopt;
    const Rational s = (wx * as_rational(w.direction.x) + wy * as_rational(w.direction.y)) /
                       as_rational(dot(w.direction, w.direction));
    if (s < 0) return std::nullopt;
    if (w.extent && s > *w.extent) return std::nullopt;
    return s;
}

struct Approx {
    double bx, by, dx, dy, ext;
};

Approx approx(const Wall& w) {
    return {w.base.x.get_d(), w.base.y.get_d(), static_cast<double>(w.direction.x),
            static_cast<double>(w.direction.y), w.extent ? w.extent->get_d() : INFINITY};
}

std::optional<RPoint> intersect(const Wall& a, const Wall& b, const Approx& fa, const Approx& fb) {
    const std::int64_t den = cross(a.direction, b.direction);
    if (den == 0) return std::nullopt;
    const double wx = fb.bx - fa.bx, wy = fb.by - fa.by;
    const double s_approx = (wx * fb.dy - wy * fb.dx) / den;
    const double u_approx = (wx * fa.dy - wy * fa.dx) / den;
    const double eps = 1e-7;
    if (s_approx < -eps || u_approx < -eps || s_approx > fa.ext + eps || u_approx > fb.ext + eps)
        return std::nullopt;
    const Rational ex = b.base.x - a.base.x, ey = b.base.y - a.base.y;
    const Rational d = as_rational(den);
    const Rational s = (ex * as_rational(b.direction.y) - ey * as_rational(b.direction.x)) / d;
    const Rational u = (ex * as_rational(a.direction.y) - ey * as_rational(a.direction.x)) / d;
    if (s < 0 || u < 0) return std::nullopt;
    if (a.extent && s > *a.extent) return std::nullopt;
    if (b.extent && u > *b.extent) return std::nullopt;
    return a.base.offset(a.direction, s);
}

Wall* find_rep(WallStructure& s, const RPoint& base, const Vec2& dir) {
    for (auto& w : s.walls)
        if (w.kind != WallKind::Slab && w.direction == dir && w.base == base) return &w;
    return nullptr;
}

}  // namespace

std::vector<Wall> WallStructure::placed_walls(const Rational& y_lo, const Rational& y_hi) const {
    std::vector<Wall> out;
    const Rational l = as_rational(chart.circumference);
    for (const auto& w : walls) {
        const auto [lo, hi] = y_span(w);
        // images shift y by q * circumference
        Rational qmin_r = (y_lo - hi) / l, qmax_r = (y_hi - lo) / l;
        Integer qmin = -floor_of(-qmin_r), qmax = floor_of(qmax_r);
        for (std::int64_t q = qmin.get_si(); q <= qmax.get_si(); ++q) out.push_back(wall_image(chart, w, q));
    }
    return out;
}

std::size_t WallStructure::count(WallKind kind) const {
    return static_cast<std::size_t>(
        std::count_if(walls.begin(), walls.end(), [&](const Wall& w) { return w.kind == kind; }));
}

std::vector<WallPiece> WallStructure::pieces(const Wall& w) const {
    std::vector<WallPiece> out;
    auto make_terms = [&](std::int64_t strip) {
        std::vector<std::pair<Monomial, Rational>> terms;
        for (const auto& [m, c] : w.function) {
            const Monomial mono{m, chart.t_order(strip, m)};
            if (mono.a <= order || w.kind == WallKind::Slab) terms.emplace_back(mono, c);
        }
        return terms;
    };
    if (w.direction.y == 0) {
        const std::int64_t strip = floor_of(w.base.y).get_si();
        out.push_back({strip, w.base, w.extent ? std::optional<RPoint>(wall_end(w)) : std::nullopt,
                       make_terms(strip)});
        return out;
    }
    if (!w.extent) throw InvariantError("scattering: unbounded non-horizontal wall");
    Rational s = 0;
    while (s < *w.extent) {
        const RPoint p = w.base.offset(w.direction, s);
        const std::int64_t strip = strip_leaving(p, w.direction);
        const std::int64_t next_y = w.direction.y > 0 ? strip + 1 : strip;
        Rational s_next = (as_rational(next_y) - w.base.y) / as_rational(w.direction.y);
        if (s_next > *w.extent) s_next = *w.extent;
        out.push_back({strip, p, w.base.offset(w.direction, s_next), make_terms(strip)});
        s = s_next;
    }
    return out;
}

WallStructure initial_structure(const AffineChart& chart, std::int64_t cut) {
    chart.validate();
    WallStructure s;
    s.chart = chart;
    s.order = 0;
    s.cut = cut;
    for (std::int64_t j = cut; j < cut + chart.circumference; ++j) {
        const Vec2 v = chart.vertex(j), e = chart.edge(j);
        const RPoint mid{as_rational(v.x) + make_rational(e.x, 2), as_rational(v.y) + make_rational(e.y, 2)};
        s.walls.push_back({WallKind::Slab, mid, -e, Rational(1, 2), 0, {{e, Rational(1)}}});
        s.walls.push_back({WallKind::Slab, mid, e, Rational(1, 2), 0, {{-e, Rational(1)}}});
    }
    for (std::int64_t j = cut; j < cut + chart.circumference; ++j)
        s.walls.push_back({WallKind::KinkRay, to_point(chart.vertex(j)), chart.outgoing_direction,
                           std::nullopt, chart.per_ray_kink, {}});
    return s;
}

std::vector<LocalRay> incident_rays(const WallStructure& s, const RPoint& p) {
    std::vector<LocalRay> rays;
    for (const auto& w : s.placed_walls(p.y, p.y)) {
        if (w.function.empty()) continue;
        const auto t = parameter_on(w, p);
        if (!t) continue;
        if (*t == 0) {
            rays.push_back({w.direction, w.function});
        } else if (w.extent && *t == *w.extent) {
            rays.push_back({-w.direction, w.function});
        } else {
            rays.push_back({w.direction, w.function});
            rays.push_back({-w.direction, w.function});
        }
    }
    return rays;
}

LoopRecord loop_product(const RPoint& joint, const WallStructure& structure, int n) {
    const Rational top = as_rational(structure.cut + structure.chart.circumference);
    if (joint.y < as_rational(structure.cut) || joint.y >= top)
        throw PreconditionError("loop_product: joint outside the fundamental domain; transport it first");
    return local_loop(incident_rays(structure, joint), joint_grading(structure.chart, joint), n);
}

std::vector<Joint> find_joints(const WallStructure& s) {
    const Rational lo = as_rational(s.cut), hi = as_rational(s.cut + s.chart.circumference);
    std::vector<Wall> placed;
    for (auto& w : s.placed_walls(lo, hi))
        if (w.kind != WallKind::Slab && !w.function.empty()) placed.push_back(std::move(w));
    std::vector<Approx> fast;
    for (const auto& w : placed) fast.push_back(approx(w));

    std::set<RPoint> points;
    for (std::size_t i = 0; i < placed.size(); ++i)
        for (std::size_t j = i + 1; j < placed.size(); ++j) {
            auto p = intersect(placed[i], placed[j], fast[i], fast[j]);
            if (!p || p->y < lo || p->y >= hi) continue;
            if (s.chart.vertex_index(*p)) continue;
            if (s.chart.height(*p) < 0)
                throw InvariantError("scattering: wall enters the interior of the central cell");
            points.insert(*p);
        }
    std::vector<Joint> out;
    for (std::int64_t j = s.cut; j < s.cut + s.chart.circumference; ++j) {
        const RPoint v = to_point(s.chart.vertex(j));
        out.push_back({v, true, incident_rays(s, v).size()});
    }
    for (const auto& p : points) out.push_back({p, false, incident_rays(s, p).size()});
    return out;
}

WallStructure ks_complete(const WallStructure& initial, int k) {
    if (k < 0) throw PreconditionError("ks_complete: negative order");
    initial.chart.validate();
    WallStructure s = initial;
    s.order = k;
    s.stats.clear();
    if (k == 0) return s;
    const AffineChart& chart = s.chart;

    // vertices: two focus-focus lines meet at each corner of the zigzag
    for (std::int64_t j = s.cut; j < s.cut + chart.circumference; ++j) {
        const RPoint v = to_point(chart.vertex(j));
        std::vector<LocalRay> rays = incident_rays(s, v);
        if (rays.size() != 2) throw InvariantError("scattering: vertex must meet exactly two slabs");
        const Vec2 m1 = rays[0].function.begin()->first, m2 = rays[1].function.begin()->first;
        const std::size_t slab_rays = rays.size();
        for (std::size_t i = 0; i < slab_rays; ++i) rays.push_back({-rays[i].direction, rays[i].function});

        // grade a + b on a m1 + b m2
        std::int64_t det = cross(m1, m2);
        const Vec2 u = m2 - m1;
        Grading graded{{Vec2{u.y, -u.x}}, det};
        if (det < 0) graded = Grading{{Vec2{-u.y, u.x}}, -det};
        const Grading ord = joint_grading(chart, v);
        auto both = [&](const Vec2& m) {
            std::int64_t total = 0;
            for (const auto& f : ord.forms) total += dot(f, m);
            return total;
        };
        const std::int64_t cmin = std::min(both(m1), both(m2));
        if (cmin <= 0) throw InvariantError("scattering: degenerate vertex grading");
        const std::int64_t max_grade = (2 * static_cast<std::int64_t>(k)) / cmin;
        const auto outputs = local_complete(rays, graded, max_grade);

        for (std::size_t i = 0; i < slab_rays; ++i) {
            Wall w{WallKind::Wall, v, -rays[i].direction, std::nullopt, 0,
                   filter_within(rays[i].function, ord, k)};
            if (!w.function.empty() && assign_extent(chart, w, k)) s.walls.push_back(std::move(w));
        }
        for (const auto& r : outputs) {
            Poly f = filter_within(r.function, ord, k);
            if (f.empty()) continue;
            if (Wall* existing = find_rep(s, v, r.direction)) {
                existing->function = detail::multiply_functions(existing->function, f, ord, k);
                assign_extent(chart, *existing, k);
                continue;
            }
            Wall w{WallKind::Wall, v, r.direction, std::nullopt, 0, std::move(f)};
            if (assign_extent(chart, w, k)) s.walls.push_back(std::move(w));
        }
    }

    for (int n = 1; n <= k; ++n) {
        const auto joints = find_joints(s);
        std::map<std::pair<RPoint, Vec2>, Poly> pending;
        int examined = 0;
        for (const auto& jt : joints) {
            if (jt.is_vertex || jt.degree < 2) continue;
            ++examined;
            const Grading g = joint_grading(chart, jt.point);
            for (const auto& [eta, c] : detail::order_corrections(incident_rays(s, jt.point), g, n)) {
                auto& f = pending[{jt.point, -primitive(eta)}];
                f = detail::multiply_functions(f, Poly{{eta, c}}, g, k);
            }
        }
        std::set<RPoint> touched;
        for (auto& [key, f] : pending) {
            const auto& [p, d] = key;
            const Grading g = joint_grading(chart, p);
            if (Wall* existing = find_rep(s, p, d)) {
                existing->function = detail::multiply_functions(existing->function, f, g, k);
                if (!assign_extent(chart, *existing, k))
                    throw InvariantError("scattering: merged wall became trivial");
            } else {
                Wall w{WallKind::Wall, p, d, std::nullopt, 0, f};
                if (!assign_extent(chart, w, k)) throw InvariantError("scattering: inserted wall is trivial");
                s.walls.push_back(std::move(w));
            }
            touched.insert(p);
        }
        for (const auto& p : touched)
            if (!loop_product(p, s, n).identity)
                throw InvariantError("scattering: joint still inconsistent after correction");
        s.stats.push_back({n, examined, static_cast<int>(pending.size())});
    }
    return s;
}

BiSeries f_out(const WallStructure& s) {
    BiSeries result = BiSeries::one(s.order);
    for (const auto& w : s.walls) {
        if (w.kind == WallKind::Slab || w.function.empty()) continue;
        if (w.direction.y != 0) {
            if (!w.extent) throw InvariantError("f_out: non-horizontal unbounded wall");
            continue;
        }
        if (w.direction != s.chart.outgoing_direction)
            throw InvariantError("f_out: unbounded wall not parallel to the outgoing direction");
        BiSeries factor = BiSeries::one(s.order);
        for (const auto& [m, c] : w.function) {
            const std::int64_t a = s.chart.t_order(floor_of(w.base.y).get_si(), m);
            if (a != -m.x) throw InvariantError("f_out: asymptotic monomial is not homogeneous");
            factor.add_term(static_cast<int>(a), static_cast<int>(m.x), c);
        }
        result = result * factor;
    }
    return result;
}

NdTable extract_nd_scattering(const BiSeries& fout, int D) {
    if (D < 0) throw PreconditionError("extract_nd_scattering: negative degree");
    if (fout.order() < 3 * D) throw PreconditionError("extract_nd_scattering: order below 3D");
    const BiSeries L = bi_log(fout);
    for (const auto& [key, c] : L.terms())
        if (key.first != -key.second || key.first % 3 != 0)
            throw InvariantError("extract_nd_scattering: log f_out has a term at t^" +
                                 std::to_string(key.first) + " w^" + std::to_string(key.second));
    NdTable t{kScatteringPipeline, {}};
    for (int d = 1; d <= D; ++d) t.values.push_back(L.coefficient(3 * d, -3 * d) / (3 * d));
    return t;
}

}  // namespace tropmirror
