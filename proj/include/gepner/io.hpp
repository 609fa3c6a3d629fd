#pragma once

#include "gepner/frobenius.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace gepner::io {

using nlohmann::json;

/// Series are stored as polynomial strings in the coordinate names together
/// with a shared truncation order.
json to_json(const TruncSeries& s, const std::vector<std::string>& names);
json to_json(const SeriesMatrix& m, const std::vector<std::string>& names);
json to_json(const Certificate& c);
json to_json(const FrobeniusData& f);
json to_json(const PreSaitoData& p);

TruncSeries series_from_json(const json& j, const std::vector<std::string>& names, int order);
SeriesMatrix matrix_from_json(const json& j, const std::vector<std::string>& names, int order);
/// Throws std::invalid_argument on malformed input.
FrobeniusData frobenius_from_json(const json& j);
PreSaitoData presaito_from_json(const json& j);

json read_json_file(const std::string& path);

} // namespace gepner::io
