#include <algorithm>

#include "tropmirror/errors.hpp"
#include "scattering_detail.hpp"

namespace tropmirror {

std::int64_t Grading::numerator(const Vec2& m) const {
    if (forms.empty()) throw PreconditionError("Grading: no linear forms");
    std::int64_t best = dot(forms[0], m);
    for (std::size_t i = 1; i < forms.size(); ++i) best = std::max(best, dot(forms[i], m));
    return best;
}

Grading joint_grading(const AffineChart& chart, const RPoint& p) {
    Grading g;
    for (auto j : chart.strips_at(p)) g.forms.push_back(-chart.height_gradient(j));
    return g;
}

namespace {

Poly truncated_mul(const Poly& a, const Poly& b, const Grading& grading, std::int64_t bound) {
    Poly r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            const Vec2 m = ma + mb;
            if (grading.within(m, bound)) r[m] += ca * cb;
        }
    std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
    return r;
}

// f^k for the wall functions met on one loop, cached by exponent.
class PowerTable {
public:
    PowerTable(const Poly& function, const Grading& grading, std::int64_t bound)
        : grading_(grading), bound_(bound) {
        for (const auto& [m, c] : function) {
            if (c == 0 || !grading.within(m, bound)) continue;
            if (grading.numerator(m) <= 0)
                throw InvariantError("loop product: wall monomial has non-positive order at joint");
            g_[m] = c;
        }
        powers_.push_back(Poly{{Vec2{0, 0}, Rational(1)}});
    }

    bool trivial() const { return g_.empty(); }

    const Poly& power(std::int64_t k) {
        auto it = cache_.find(k);
        if (it != cache_.end()) return it->second;
        Poly r;
        for (std::size_t i = 0;; ++i) {
            if (k >= 0 && static_cast<std::int64_t>(i) > k) break;
            const Poly& gi = g_power(i);
            if (gi.empty()) break;
            const Rational b = binomial(Rational(static_cast<long>(k)), i);
            for (const auto& [m, c] : gi) r[m] += b * c;
        }
        std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
        return cache_.emplace(k, std::move(r)).first->second;
    }

private:
    const Poly& g_power(std::size_t i) {
        while (powers_.size() <= i) {
            if (powers_.back().empty()) return powers_.back();
            powers_.push_back(truncated_mul(powers_.back(), g_, grading_, bound_));
        }
        return powers_[i];
    }

    const Grading& grading_;
    std::int64_t bound_;
    Poly g_;
    std::vector<Poly> powers_;
    std::map<std::int64_t, Poly> cache_;
};

// F -> theta(N^xi F) / N^xi for one counterclockwise crossing
Poly cross_ray(const Vec2& dir, PowerTable& table, const Vec2& xi, const Poly& F,
               const Grading& grading, std::int64_t bound) {
    const Vec2 n{dir.y, -dir.x};
    Poly r;
    for (const auto& [eta, c] : F) {
        const Poly& fk = table.power(dot(n, xi + eta));
        for (const auto& [m, d] : fk) {
            const Vec2 s = eta + m;
            if (grading.within(s, bound)) r[s] += c * d;
        }
    }
    std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
    return r;
}

struct Correction {
    Vec2 exponent;
    Rational coefficient;
};

// Terms of the loop discrepancy at exactly `bound`, factored into single rays.
std::vector<Correction> factor_discrepancy(const LoopRecord& rec, const Grading& grading,
                                           std::int64_t bound) {
    std::map<Vec2, std::pair<Rational, Rational>> v;
    for (const auto& [m, c] : rec.image_x)
        if (!m.is_zero()) v[m].first = c;
    for (const auto& [m, c] : rec.image_y)
        if (!m.is_zero()) v[m].second = c;
    std::vector<Correction> out;
    for (const auto& [eta, vc] : v) {
        const auto num = grading.numerator(eta);
        if (num < bound * grading.den)
            throw InvariantError("scattering: loop discrepancy below the current order");
        if (num > bound * grading.den) continue;
        const Vec2 d = -primitive(eta);
        const Vec2 n{d.y, -d.x};
        const Rational nn = Rational(static_cast<long>(dot(n, n)));
        const Rational c = -(vc.first * static_cast<long>(n.x) + vc.second * static_cast<long>(n.y)) / nn;
        if (vc.first + c * static_cast<long>(n.x) != 0 || vc.second + c * static_cast<long>(n.y) != 0)
            throw InvariantError("scattering: non-factorizable discrepancy");
        out.push_back({eta, c});
    }
    return out;
}

}  // namespace

LoopRecord local_loop(const std::vector<LocalRay>& rays, const Grading& grading,
                      std::int64_t bound) {
    std::vector<std::size_t> order(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return angle_less(rays[a].direction, rays[b].direction);
    });
    std::vector<PowerTable> tables;
    tables.reserve(rays.size());
    for (const auto& r : rays) tables.emplace_back(r.function, grading, bound);

    LoopRecord rec;
    const Poly one{{Vec2{0, 0}, Rational(1)}};
    for (int which = 0; which < 2; ++which) {
        const Vec2 xi = which == 0 ? Vec2{1, 0} : Vec2{0, 1};
        Poly F = one;
        for (auto i : order) {
            if (tables[i].trivial()) continue;
            F = cross_ray(rays[i].direction, tables[i], xi, F, grading, bound);
        }
        (which == 0 ? rec.image_x : rec.image_y) = std::move(F);
    }
    rec.identity = rec.image_x == one && rec.image_y == one;
    return rec;
}

namespace detail {

std::vector<std::pair<Vec2, Rational>> order_corrections(const std::vector<LocalRay>& rays,
                                                         const Grading& grading,
                                                         std::int64_t bound) {
    const LoopRecord rec = local_loop(rays, grading, bound);
    std::vector<std::pair<Vec2, Rational>> out;
    if (rec.identity) return out;
    for (const auto& c : factor_discrepancy(rec, grading, bound))
        out.emplace_back(c.exponent, c.coefficient);
    return out;
}

Poly multiply_functions(const Poly& a, const Poly& b, const Grading& grading, std::int64_t bound) {
    // (1 + a)(1 + b) - 1
    Poly r = a;
    for (const auto& [m, c] : b) r[m] += c;
    for (const auto& [m, c] : truncated_mul(a, b, grading, bound)) r[m] += c;
    std::erase_if(r, [&](const auto& kv) { return kv.second == 0 || !grading.within(kv.first, bound); });
    return r;
}

}  // namespace detail

std::vector<LocalRay> local_complete(const std::vector<LocalRay>& rays, const Grading& grading,
                                     std::int64_t max_bound) {
    std::vector<LocalRay> current = rays;
    std::map<Vec2, std::size_t> added_index;  // direction -> index in current
    for (std::int64_t bound = 1; bound <= max_bound; ++bound) {
        const auto corr = detail::order_corrections(current, grading, bound);
        if (corr.empty()) continue;
        for (const auto& [eta, c] : corr) {
            const Vec2 d = -primitive(eta);
            const Poly term{{eta, c}};
            auto it = added_index.find(d);
            if (it == added_index.end()) {
                added_index[d] = current.size();
                current.push_back({d, term});
            } else {
                auto& f = current[it->second].function;
                f = detail::multiply_functions(f, term, grading, max_bound);
            }
        }
        if (!local_loop(current, grading, bound).identity)
            throw InvariantError("scattering: loop not trivial after inserting corrections");
    }
    std::vector<LocalRay> out;
    for (const auto& [d, idx] : added_index) out.push_back(current[idx]);
    return out;
}

}  // namespace tropmirror
