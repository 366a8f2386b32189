#include <algorithm>
#include <cstdlib>

#include "tropmirror/errors.hpp"
#include "tropmirror/scattering.hpp"

namespace tropmirror {

Vec2 mat_apply(const Matrix2& A, const Vec2& v) {
    return {A[0][0] * v.x + A[0][1] * v.y, A[1][0] * v.x + A[1][1] * v.y};
}

Matrix2 matrix_power(const Matrix2& A, std::int64_t k) {
    Matrix2 base = A;
    if (k < 0) {
        const std::int64_t det = A[0][0] * A[1][1] - A[0][1] * A[1][0];
        if (det != 1 && det != -1) throw PreconditionError("matrix_power: matrix not unimodular");
        base = {{{A[1][1] * det, -A[0][1] * det}, {-A[1][0] * det, A[0][0] * det}}};
        k = -k;
    }
    Matrix2 r{{{1, 0}, {0, 1}}};
    for (std::int64_t i = 0; i < k; ++i) {
        Matrix2 n{};
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) n[a][b] = r[a][0] * base[0][b] + r[a][1] * base[1][b];
        r = n;
    }
    return r;
}

void AffineChart::validate() const {
    const auto& A = monodromy_linear;
    const Matrix2 N{{{A[0][0] - 1, A[0][1]}, {A[1][0], A[1][1] - 1}}};
    if (A[0][0] * A[1][1] - A[0][1] * A[1][0] != 1 || A[0][0] + A[1][1] != 2)
        throw PreconditionError("chart: monodromy is not unipotent");
    if (N[0][0] * N[1][1] - N[0][1] * N[1][0] != 0 || (N[0][0] == 0 && N[0][1] == 0 &&
                                                       N[1][0] == 0 && N[1][1] == 0))
        throw PreconditionError("chart: A - Id must have rank 1");
    if (!mat_apply(N, outgoing_direction).is_zero())
        throw PreconditionError("chart: A - Id must annihilate the outgoing direction");
    if (monodromy_exponent != -A[0][1])
        throw PreconditionError("chart: monodromy exponent must equal -A[0][1]");
    if (total_kink != per_ray_kink * circumference)
        throw PreconditionError("chart: total kink must be circumference times the per-ray kink");
    if (circumference < 1 || static_cast<int>(boundary_vertices.size()) != circumference + 1)
        throw PreconditionError("chart: need circumference + 1 boundary vertices");
    if (monodromy_translation.y != circumference || A[1][0] != 0 || A[1][1] != 1)
        throw PreconditionError("chart: gluing must shift the strip by the circumference");
    if (glue(to_point(boundary_vertices.front()), 1) != to_point(boundary_vertices.back()))
        throw PreconditionError("chart: boundary zigzag does not close up under gluing");
    for (int j = 0; j < circumference; ++j) {
        if (edge(j).y != 1) throw PreconditionError("chart: zigzag edges must have unit height");
        const Vec2 jump = height_gradient(j) - height_gradient(j - 1);
        if (jump.x != 0 || jump.y != per_ray_kink)
            throw PreconditionError("chart: kink of the height function differs from per-ray kink");
    }
}

Vec2 AffineChart::vertex(std::int64_t j) const {
    const std::int64_t l = circumference;
    std::int64_t q = j >= 0 ? j / l : -((-j + l - 1) / l);
    std::int64_t r = j - q * l;
    const Vec2 v = boundary_vertices[static_cast<std::size_t>(r + 1)];
    const RPoint p = glue(to_point(v), q);
    return {p.x.get_num().get_si(), p.y.get_num().get_si()};
}

Vec2 AffineChart::edge(std::int64_t j) const { return vertex(j + 1) - vertex(j); }

Vec2 AffineChart::height_gradient(std::int64_t strip) const {
    const Vec2 e = edge(strip);
    return {1, -e.x};
}

std::int64_t AffineChart::t_order(std::int64_t strip, const Vec2& m) const {
    return -dot(m, height_gradient(strip));
}

std::vector<std::int64_t> AffineChart::strips_at(const RPoint& p) const {
    const std::int64_t j = floor_of(p.y).get_si();
    if (is_integer(p.y)) return {j - 1, j};
    return {j};
}

Rational AffineChart::height(const RPoint& p) const {
    const std::int64_t j = floor_of(p.y).get_si();
    const Vec2 g = height_gradient(j), v = vertex(j);
    return (p.x - Rational(static_cast<long>(v.x))) +
           Rational(static_cast<long>(g.y)) * (p.y - Rational(static_cast<long>(v.y)));
}

std::optional<std::int64_t> AffineChart::vertex_index(const RPoint& p) const {
    if (!is_integer(p.y) || !is_integer(p.x)) return std::nullopt;
    const std::int64_t j = p.y.get_num().get_si();
    if (vertex(j).x == p.x.get_num().get_si()) return j;
    return std::nullopt;
}

RPoint AffineChart::glue(const RPoint& p, std::int64_t times) const {
    const auto& A = monodromy_linear;
    RPoint r = p;
    auto lin = [](const Matrix2& M, const RPoint& q) {
        return RPoint{Rational(static_cast<long>(M[0][0])) * q.x + Rational(static_cast<long>(M[0][1])) * q.y,
                      Rational(static_cast<long>(M[1][0])) * q.x + Rational(static_cast<long>(M[1][1])) * q.y};
    };
    const RPoint b = to_point(monodromy_translation);
    const Matrix2 Ainv = matrix_power(A, -1);
    for (std::int64_t i = 0; i < std::abs(times); ++i) {
        if (times > 0) {
            r = lin(A, r) + b;
        } else {
            r = lin(Ainv, RPoint{r.x - b.x, r.y - b.y});
        }
    }
    return r;
}

Vec2 AffineChart::glue_linear(const Vec2& v, std::int64_t times) const {
    return mat_apply(matrix_power(monodromy_linear, times), v);
}

nlohmann::json to_json(const AffineChart& c) {
    nlohmann::json verts = nlohmann::json::array();
    for (const auto& v : c.boundary_vertices) verts.push_back({v.x, v.y});
    return {{"monodromy_linear", {{c.monodromy_linear[0][0], c.monodromy_linear[0][1]},
                                  {c.monodromy_linear[1][0], c.monodromy_linear[1][1]}}},
            {"monodromy_translation", {c.monodromy_translation.x, c.monodromy_translation.y}},
            {"circumference", c.circumference},
            {"monodromy_exponent", c.monodromy_exponent},
            {"total_kink", c.total_kink},
            {"per_ray_kink", c.per_ray_kink},
            {"boundary_vertices", verts},
            {"outgoing_direction", {c.outgoing_direction.x, c.outgoing_direction.y}}};
}

Monomial monodromy_transport(const Monomial& mono, std::int64_t crossings, const AffineChart& chart) {
    return {chart.glue_linear(mono.m, crossings), mono.a};
}

std::string to_string(WallKind kind) {
    switch (kind) {
        case WallKind::Wall: return "wall";
        case WallKind::Slab: return "slab";
        case WallKind::KinkRay: return "kink-ray";
    }
    return "wall";
}

std::vector<std::pair<Rational, Monomial>> wall_cross(const Monomial& mono, const Wall& wall,
                                                      int orientation, const AffineChart& chart,
                                                      std::optional<int> order,
                                                      std::int64_t strip) {
    if (!order) throw PreconditionError("wall_cross: truncation order unset");
    if (orientation != 1 && orientation != -1)
        throw PreconditionError("wall_cross: orientation must be +1 or -1");
    const Vec2 n{orientation * wall.direction.y, -orientation * wall.direction.x};
    const std::int64_t k = dot(n, mono.m);
    const std::int64_t shift = static_cast<std::int64_t>(wall.kink) * k;

    using Terms = std::map<Monomial, Rational>;
    Terms g;  // f - 1 in the local frame
    for (const auto& [m, c] : wall.function) {
        const Monomial t{m, chart.t_order(strip, m)};
        if (t.a < 0) throw PreconditionError("wall_cross: wall monomial has negative t-order");
        if (t.a <= *order) g[t] += c;
    }
    auto mul = [&](const Terms& a, const Terms& b) {
        Terms r;
        for (const auto& [ma, ca] : a)
            for (const auto& [mb, cb] : b) {
                const Monomial s{ma.m + mb.m, ma.a + mb.a};
                if (s.a <= *order) r[s] += ca * cb;
            }
        std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
        return r;
    };
    Terms power{{Monomial{{0, 0}, 0}, Rational(1)}}, f_k = power;
    if (k != 0) {
        if (k < 0)
            for (const auto& [m, c] : g)
                if (m.a == 0) throw PreconditionError("wall_cross: cannot invert a t-order 0 function");
        f_k.clear();
        for (unsigned long i = 0; !power.empty(); ++i) {
            if (k > 0 && static_cast<std::int64_t>(i) > k) break;
            const Rational b = binomial(Rational(static_cast<long>(k)), i);
            for (const auto& [m, c] : power) f_k[m] += b * c;
            power = mul(power, g);
        }
    }
    std::vector<std::pair<Rational, Monomial>> out;
    for (const auto& [m, c] : f_k) {
        const Monomial r{mono.m + m.m, mono.a + m.a + shift};
        if (c != 0 && r.a <= *order) out.emplace_back(c, r);
    }
    return out;
}

}  // namespace tropmirror
