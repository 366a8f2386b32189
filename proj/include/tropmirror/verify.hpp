#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tropmirror/mirror_map.hpp"
#include "tropmirror/scattering.hpp"

namespace tropmirror {

struct VerifyReport {
    int max_degree = 0;
    int scattering_order = 0;
    NdTable period;
    NdTable scattering;
    bool tables_agree = true;
    std::optional<int> first_mismatch;
    bool first_invariant = true;  // N_1 = 9
    bool log_cancellation = true;
    StructureAudit audit;
    std::vector<OrderStats> stats;
    std::size_t wall_count = 0;
    double seconds_period = 0;
    double seconds_scattering = 0;
    double seconds_audit = 0;

    bool passed() const;
    nlohmann::json to_json() const;  // timings left out so output is reproducible
    std::string render_text() const;
};

// Runs both pipelines up to degree D (scattering at k = 3D) and every structural check.
VerifyReport run_verify(int D);

}  // namespace tropmirror
