#include "tropmirror/series_json.hpp"

#include "tropmirror/errors.hpp"

namespace tropmirror {

nlohmann::json to_json(const PowerSeries& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : s.coefficients()) coeffs.push_back(to_string(c));
    return {{"variable", s.variable()}, {"order", s.order()}, {"coefficients", coeffs}};
}

nlohmann::json to_json(const LogSeries& s) {
    return {{"L0", to_json(s.c0())}, {"L1", to_json(s.c1())}, {"L2", to_json(s.c2())}};
}

nlohmann::json to_json(const BiSeries& s) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [k, c] : s.terms())
        terms.push_back({{"t", k.first}, {"w", k.second}, {"c", to_string(c)}});
    return {{"order", s.order()}, {"terms", terms}};
}

PowerSeries power_series_from_json(const nlohmann::json& j) {
    try {
        std::vector<Rational> coeffs;
        for (const auto& c : j.at("coefficients")) coeffs.push_back(parse_rational(c.get<std::string>()));
        PowerSeries s(j.at("variable").get<std::string>(), std::move(coeffs));
        if (s.order() != j.at("order").get<int>())
            throw PreconditionError("power series json: order does not match coefficient count");
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionError(std::string("power series json: ") + e.what());
    }
}

LogSeries log_series_from_json(const nlohmann::json& j) {
    try {
        return LogSeries(power_series_from_json(j.at("L0")), power_series_from_json(j.at("L1")),
                         power_series_from_json(j.at("L2")));
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionError(std::string("log series json: ") + e.what());
    }
}

}  // namespace tropmirror
