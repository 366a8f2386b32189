#pragma once

#include <json.hpp>

#include "tropmirror/bi_series.hpp"
#include "tropmirror/log_series.hpp"
#include "tropmirror/power_series.hpp"

namespace tropmirror {

nlohmann::json to_json(const PowerSeries& s);
nlohmann::json to_json(const LogSeries& s);
nlohmann::json to_json(const BiSeries& s);

PowerSeries power_series_from_json(const nlohmann::json& j);
LogSeries log_series_from_json(const nlohmann::json& j);

}  // namespace tropmirror
