#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tropmirror/bi_series.hpp"
#include "tropmirror/lattice.hpp"
#include "tropmirror/mirror_map.hpp"

namespace tropmirror {

using Matrix2 = std::array<std::array<std::int64_t, 2>, 2>;

Vec2 mat_apply(const Matrix2& A, const Vec2& v);
Matrix2 matrix_power(const Matrix2& A, std::int64_t k);  // k may be negative (A unimodular)

// Universal-cover chart of the unbounded region. Strip j is the band
// j <= y <= j+1 to the right of the zigzag edge from v_j to v_{j+1}.
struct AffineChart {
    Matrix2 monodromy_linear{{{1, -9}, {0, 1}}};
    Vec2 monodromy_translation{-9, 3};
    int circumference = 3;
    int monodromy_exponent = 9;
    int total_kink = 9;
    int per_ray_kink = 3;
    std::vector<Vec2> boundary_vertices{{-3, -1}, {0, 0}, {0, 1}, {-3, 2}};
    Vec2 outgoing_direction{1, 0};

    static AffineChart p2_cubic() { return {}; }

    // Throws PreconditionError if the data is inconsistent.
    void validate() const;

    Vec2 vertex(std::int64_t j) const;
    Vec2 edge(std::int64_t j) const;  // v_{j+1} - v_j
    // gradient of the height function delta on strip j; delta vanishes on the zigzag
    Vec2 height_gradient(std::int64_t strip) const;
    // t-order of N^m in strip j: -<m, grad delta_j>
    std::int64_t t_order(std::int64_t strip, const Vec2& m) const;
    // strips whose closure contains p (one, or two on a kink line)
    std::vector<std::int64_t> strips_at(const RPoint& p) const;
    Rational height(const RPoint& p) const;  // delta at p
    std::optional<std::int64_t> vertex_index(const RPoint& p) const;

    RPoint glue(const RPoint& p, std::int64_t times) const;  // T^times
    Vec2 glue_linear(const Vec2& v, std::int64_t times) const;
};

nlohmann::json to_json(const AffineChart& chart);

// z^m t^a in a local frame.
struct Monomial {
    Vec2 m;
    std::int64_t a = 0;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

Monomial monodromy_transport(const Monomial& mono, std::int64_t crossings,
                             const AffineChart& chart = AffineChart::p2_cubic());

enum class WallKind { Wall, Slab, KinkRay };
std::string to_string(WallKind kind);

// Sum c_m N^m with N^m the degree-zero monomial t^{ord(m)} z^m; constant 1 implicit
// in wall functions.
using Poly = std::map<Vec2, Rational>;

struct Wall {
    WallKind kind = WallKind::Wall;
    RPoint base;
    Vec2 direction;                  // primitive
    std::optional<Rational> extent;  // parameter range [0, extent] along direction
    int kink = 0;
    Poly function;                   // exponents antiparallel to direction (slabs excepted)
};

// Per-cell piece of a wall with explicit local t-powers.
struct WallPiece {
    std::int64_t strip;
    RPoint start;
    std::optional<RPoint> end;
    std::vector<std::pair<Monomial, Rational>> terms;
};

struct OrderStats {
    int order;
    int joints_examined;
    int walls_added;
};

struct WallStructure {
    AffineChart chart;
    int order = 0;
    std::int64_t cut = 0;     // fundamental domain is cut <= y < cut + circumference
    std::vector<Wall> walls;  // representatives in the fundamental domain
    std::vector<OrderStats> stats;

    std::vector<WallPiece> pieces(const Wall& wall) const;
    std::vector<Wall> placed_walls(const Rational& y_lo, const Rational& y_hi) const;
    std::size_t count(WallKind kind) const;
};

WallStructure initial_structure(const AffineChart& chart, std::int64_t cut = 0);

// Crossing a wall transversally. orientation = +1 means moving in the direction
// obtained by turning the wall direction counterclockwise. Terms of local
// t-order above `order` are dropped.
std::vector<std::pair<Rational, Monomial>> wall_cross(const Monomial& mono, const Wall& wall,
                                                      int orientation, const AffineChart& chart,
                                                      std::optional<int> order,
                                                      std::int64_t strip);

// Truncation filter: value(m) = max_i <forms_i, m> / den, keep value <= bound.
struct Grading {
    std::vector<Vec2> forms;
    std::int64_t den = 1;
    std::int64_t numerator(const Vec2& m) const;
    bool within(const Vec2& m, std::int64_t bound) const { return numerator(m) <= bound * den; }
};

Grading joint_grading(const AffineChart& chart, const RPoint& p);

struct LocalRay {
    Vec2 direction;  // from the joint
    Poly function;
};

struct LoopRecord {
    Poly image_x;  // image of N^{(1,0)} divided by N^{(1,0)}
    Poly image_y;
    bool identity;
};

// Path-ordered product counterclockwise around the joint, modulo grade > bound.
LoopRecord local_loop(const std::vector<LocalRay>& rays, const Grading& grading,
                      std::int64_t bound);

// Adds outgoing rays until the loop is trivial modulo grade > max_bound;
// bounds are stepped from 1. Returns only the new rays.
std::vector<LocalRay> local_complete(const std::vector<LocalRay>& rays, const Grading& grading,
                                     std::int64_t max_bound);

std::vector<LocalRay> incident_rays(const WallStructure& s, const RPoint& p);

LoopRecord loop_product(const RPoint& joint, const WallStructure& structure, int n);

struct Joint {
    RPoint point;
    bool is_vertex;
    std::size_t degree;  // number of incident rays
};

// All joints of the structure in its fundamental domain.
std::vector<Joint> find_joints(const WallStructure& s);

WallStructure ks_complete(const WallStructure& initial, int k);

BiSeries f_out(const WallStructure& s);
NdTable extract_nd_scattering(const BiSeries& fout, int D);

struct Window {
    Rational x_min, x_max, y_min, y_max;
};

std::string render_diagram(const WallStructure& s, const Window& window);

nlohmann::json to_json(const WallStructure& s);

struct StructureAudit {
    std::size_t monomials = 0;
    std::size_t homogeneity_violations = 0;  // a != -<m, grad delta> in the cell
    std::size_t literal_mx_mismatches = 0;   // a != -m_x (only expected off strip 0)
    std::size_t outgoing_violations = 0;     // local order <= 0
    std::size_t joints = 0;
    std::size_t inconsistent_joints = 0;
    bool fout_support_ok = true;
};

StructureAudit audit_structure(const WallStructure& s);

}  // namespace tropmirror
