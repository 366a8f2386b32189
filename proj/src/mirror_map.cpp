#include "tropmirror/mirror_map.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "tropmirror/errors.hpp"

namespace tropmirror {

namespace {

std::string render_rational(const Rational& r) {
    return r.get_den() == 1 ? r.get_num().get_str() : r.get_num().get_str() + "/" + r.get_den().get_str();
}

// "c·term" with sign pulled into the joiner
void append_term(std::ostringstream& out, const Rational& c, const std::string& term, bool first) {
    if (c == 0) return;
    Rational a = abs(c);
    if (first) {
        out << (c < 0 ? "-" : "");
    } else {
        out << (c < 0 ? " - " : " + ");
    }
    out << render_rational(a) << "·" << term;
}

std::string t_power(int n) { return n == 3 ? "t³" : "t^" + std::to_string(n); }

}  // namespace

CanonicalMap canonical_map(const FrobeniusBasis& basis) {
    const PowerSeries h1 = basis.I1hol();
    if (h1.coefficient(0) != 0) throw PreconditionError("canonical_map: I1hol(0) must vanish");
    const PowerSeries qt = ps_shift(ps_exp(h1));
    const PowerSeries Q = ps_revert(qt, "qtilde");
    return CanonicalMap{qt, Q, qt.order()};
}

PowerSeries log_cancelled_remainder(const FrobeniusBasis& basis) {
    const int N = basis.order;
    const LogSeries L(PowerSeries("Q", N), PowerSeries::constant("Q", N, 1), PowerSeries("Q", N));
    const LogSeries I1 = L + LogSeries::holomorphic(basis.I1hol());
    const LogSeries rem = basis.I2 - logseries_mul(I1, I1) * Rational(1, 2);
    if (!rem.c1().is_zero() || !rem.c2().is_zero())
        throw InvariantError("extract_nd_period: log terms survive in I2 - 1/2 log^2(qtilde)");
    return rem.c0();
}

NdTable extract_nd_period(const FrobeniusBasis& basis, const CanonicalMap& map, int D) {
    if (D < 0) throw PreconditionError("extract_nd_period: negative degree");
    if (map.order < D || basis.order < D)
        throw PreconditionError("extract_nd_period: truncation order below max degree");
    const PowerSeries rem = log_cancelled_remainder(basis);
    const PowerSeries in_q = ps_compose(rem, map.Q_of_qtilde);
    NdTable table{kPeriodPipeline, {}};
    for (int d = 1; d <= D; ++d) table.values.push_back(in_q.coefficient(d));
    return table;
}

void require_first_invariant(const NdTable& table) {
    if (table.max_degree() >= 1 && table.N(1) != 9)
        throw InvariantError("NdTable from " + table.source + ": N_1 = " + to_string(table.N(1)) +
                             ", expected 9");
}

nlohmann::json to_json(const NdTable& table) {
    nlohmann::json N = nlohmann::json::object();
    for (int d = 1; d <= table.max_degree(); ++d) N[std::to_string(d)] = to_string(table.N(d));
    return {{"source", table.source}, {"N", N}};
}

NdTable nd_table_from_json(const nlohmann::json& j) {
    try {
        NdTable t{j.at("source").get<std::string>(), {}};
        const auto& N = j.at("N");
        for (int d = 1; N.contains(std::to_string(d)); ++d)
            t.values.push_back(parse_rational(N.at(std::to_string(d)).get<std::string>()));
        if (static_cast<std::size_t>(t.max_degree()) != N.size())
            throw PreconditionError("NdTable json: degrees are not 1..D");
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionError(std::string("NdTable json: ") + e.what());
    }
}

double potential_constant_numeric() { return -std::numbers::pi * std::numbers::pi / 2; }

BModelPotential b_model_potential(const NdTable& nd, int D) {
    if (D < 0 || D > nd.max_degree())
        throw PreconditionError("b_model_potential: degree outside the table");
    BModelPotential p{Rational(1, 2), {}, nd.source};
    for (int d = 1; d <= D; ++d) p.instanton.push_back(nd.N(d));
    return p;
}

PotentialDerivative potential_derivative(const BModelPotential& potential) {
    // t d/dt of a log^2(t^3) = 9a log^2 t is 18a log t
    PotentialDerivative r{potential.log_square_coeff * 18, {}};
    for (std::size_t i = 0; i < potential.instanton.size(); ++i)
        r.coeffs.push_back(potential.instanton[i] * Rational(3 * static_cast<long>(i + 1)));
    return r;
}

std::string BModelPotential::render(bool numeric_constant) const {
    std::ostringstream out;
    out << render_rational(log_square_coeff) << "·log²(t³) + ";
    if (numeric_constant) {
        out << "(-3ζ(2) = " << std::setprecision(12) << potential_constant_numeric() << ")";
    } else {
        out << "c";
    }
    for (std::size_t i = 0; i < instanton.size(); ++i)
        append_term(out, instanton[i], t_power(3 * static_cast<int>(i + 1)), false);
    return out.str();
}

std::string PotentialDerivative::render() const {
    std::ostringstream out;
    out << render_rational(log_coeff) << "·log t";
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        append_term(out, coeffs[i], t_power(3 * static_cast<int>(i + 1)), false);
    return out.str();
}

std::complex<double> pi1_period(std::complex<double> s, std::complex<double> t) {
    using namespace std::complex_literals;
    return std::numbers::pi * 1i + 3.0 * (std::log(t) - std::log(s));
}

QtRelationVerdict q_t_relation_check() {
    QtRelationVerdict v{true, 0.0, 0};
    for (double t : {0.05, 0.1, 0.25, 1.0 / 3, 0.5, 1.0, 2.0, 7.5}) {
        const std::complex<double> q = -std::exp(pi1_period(1.0, t));  // qtilde = -q
        const double expected = t * t * t;
        const double err = std::abs(q - expected) / expected;
        v.max_relative_error = std::max(v.max_relative_error, err);
        ++v.samples;
    }
    v.holds = v.max_relative_error < 1e-12;
    return v;
}

}  // namespace tropmirror
