#include "tropmirror/verify.hpp"

#include <chrono>
#include <sstream>

#include "tropmirror/errors.hpp"

namespace tropmirror {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

VerifyReport run_verify(int D) {
    if (D < 0) throw PreconditionError("verify: max degree must be nonnegative");
    VerifyReport r;
    r.max_degree = D;
    r.scattering_order = 3 * D;

    auto t0 = std::chrono::steady_clock::now();
    const FrobeniusBasis basis = frobenius_basis(std::max(D, 3));
    try {
        log_cancelled_remainder(basis);
    } catch (const InvariantError&) {
        r.log_cancellation = false;
    }
    r.period = extract_nd_period(basis, canonical_map(basis), D);
    r.seconds_period = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    const WallStructure s = ks_complete(initial_structure(AffineChart::p2_cubic()), r.scattering_order);
    r.scattering = extract_nd_scattering(f_out(s), D);
    r.stats = s.stats;
    r.wall_count = s.walls.size();
    r.seconds_scattering = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    r.audit = audit_structure(s);
    r.seconds_audit = seconds_since(t0);

    for (int d = 1; d <= D; ++d)
        if (r.period.N(d) != r.scattering.N(d)) {
            r.tables_agree = false;
            r.first_mismatch = d;
            break;
        }
    r.first_invariant = D < 1 || (r.period.N(1) == 9 && r.scattering.N(1) == 9);
    return r;
}

bool VerifyReport::passed() const {
    return tables_agree && first_invariant && log_cancellation && audit.homogeneity_violations == 0 &&
           audit.outgoing_violations == 0 && audit.inconsistent_joints == 0 && audit.fout_support_ok;
}

nlohmann::json VerifyReport::to_json() const {
    nlohmann::json per_order = nlohmann::json::array();
    for (const auto& st : stats)
        per_order.push_back({{"order", st.order}, {"joints", st.joints_examined}, {"walls_added", st.walls_added}});
    nlohmann::json j = {
        {"max_degree", max_degree},
        {"scattering_order", scattering_order},
        {"period", tropmirror::to_json(period)},
        {"scattering", tropmirror::to_json(scattering)},
        {"tables_agree", tables_agree},
        {"first_mismatch", first_mismatch ? nlohmann::json(*first_mismatch) : nlohmann::json(nullptr)},
        {"N1_is_9", first_invariant},
        {"log_cancellation", log_cancellation},
        {"audit",
         {{"monomials", audit.monomials},
          {"homogeneity_violations", audit.homogeneity_violations},
          {"a_ne_minus_mx", audit.literal_mx_mismatches},
          {"outgoing_violations", audit.outgoing_violations},
          {"joints", audit.joints},
          {"inconsistent_joints", audit.inconsistent_joints},
          {"fout_support_ok", audit.fout_support_ok}}},
        {"walls", wall_count},
        {"walls_per_order", per_order},
        {"passed", passed()}};
    return j;
}

std::string VerifyReport::render_text() const {
    std::ostringstream out;
    out << "verify D = " << max_degree << " (scattering order k = " << scattering_order << ")\n";
    if (max_degree == 0) out << "warning: empty degree range, nothing to compare\n";
    for (int d = 1; d <= max_degree; ++d)
        out << "  N_" << d << "  period " << to_string(period.N(d)) << "  scattering "
            << to_string(scattering.N(d)) << (period.N(d) == scattering.N(d) ? "" : "  MISMATCH") << "\n";
    if (first_mismatch)
        out << "first mismatch at d = " << *first_mismatch << ": " << to_string(period.N(*first_mismatch))
            << " vs " << to_string(scattering.N(*first_mismatch)) << "\n";
    out << "  N_1 = 9: " << (first_invariant ? "yes" : "NO") << "\n";
    out << "  log cancellation: " << (log_cancellation ? "ok" : "FAILED") << "\n";
    out << "  walls: " << wall_count << ", joints: " << audit.joints << ", inconsistent: "
        << audit.inconsistent_joints << "\n";
    out << "  monomials: " << audit.monomials << ", homogeneity violations: " << audit.homogeneity_violations
        << ", outgoing violations: " << audit.outgoing_violations << "\n";
    out << "  f_out support on (3d, -3d): " << (audit.fout_support_ok ? "ok" : "FAILED") << "\n";
    out << "  walls added per order:";
    for (const auto& st : stats)
        if (st.walls_added) out << " t^" << st.order << ":" << st.walls_added;
    out << "\n";
    out << "  time: period " << seconds_period << " s, scattering " << seconds_scattering << " s, checks "
        << seconds_audit << " s\n";
    out << (passed() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

}  // namespace tropmirror
