#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tropmirror/picard_fuchs.hpp"

namespace tropmirror {

// qtilde = -q = Q exp(I1hol) and its reversion.
struct CanonicalMap {
    PowerSeries qtilde_of_Q;
    PowerSeries Q_of_qtilde;
    int order;
};

inline const char* kPeriodPipeline = "period-pipeline";
inline const char* kScatteringPipeline = "scattering-pipeline";

struct NdTable {
    std::string source;
    std::vector<Rational> values;  // values[d-1] = N_d

    int max_degree() const { return static_cast<int>(values.size()); }
    const Rational& N(int d) const { return values.at(d - 1); }
};

CanonicalMap canonical_map(const FrobeniusBasis& basis);

// I2 - 1/2 (L + I1hol)^2 computed in the log-series algebra; throws
// InvariantError if an L or L^2 part survives.
PowerSeries log_cancelled_remainder(const FrobeniusBasis& basis);

NdTable extract_nd_period(const FrobeniusBasis& basis, const CanonicalMap& map, int D);

// Hard check applied to any table that is accepted downstream.
void require_first_invariant(const NdTable& table);

nlohmann::json to_json(const NdTable& table);
NdTable nd_table_from_json(const nlohmann::json& j);

// 1/2 log^2(t^3) + c + sum N_d t^{3d}
struct BModelPotential {
    Rational log_square_coeff;      // coefficient of log^2(t^3)
    std::vector<Rational> instanton;  // instanton[d-1] multiplies t^{3d}
    std::string source;

    std::string render(bool numeric_constant) const;
};

// t d/dt of the potential: log_coeff * log t + sum coeffs[d-1] t^{3d}
struct PotentialDerivative {
    Rational log_coeff;
    std::vector<Rational> coeffs;

    std::string render() const;
};

// -3 zeta(2) = -pi^2 / 2
double potential_constant_numeric();

BModelPotential b_model_potential(const NdTable& nd, int D);
PotentialDerivative potential_derivative(const BModelPotential& potential);

// Pi_1 = pi i + 3 (log t - log s)
std::complex<double> pi1_period(std::complex<double> s, std::complex<double> t);

struct QtRelationVerdict {
    bool holds;
    double max_relative_error;
    int samples;
};

// exp(Pi_1) at s = 1 equals -t^3, i.e. qtilde = t^3.
QtRelationVerdict q_t_relation_check();

}  // namespace tropmirror
