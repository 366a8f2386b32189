#pragma once

#include "tropmirror/scattering.hpp"

namespace tropmirror::detail {

std::vector<std::pair<Vec2, Rational>> order_corrections(const std::vector<LocalRay>& rays,
                                                         const Grading& grading,
                                                         std::int64_t bound);

Poly multiply_functions(const Poly& a, const Poly& b, const Grading& grading, std::int64_t bound);

}  // namespace tropmirror::detail
