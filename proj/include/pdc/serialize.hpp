#pragma once

#include "pdc/series.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace pdc {

using Json = nlohmann::json;

/// {"num": [...], "den": [...], "field": "Q" | "Qi" | "Q_s" | "Q_lambda"}, coefficients ascending.
Json to_json(const FieldFunction& f);
FieldFunction function_from_json(const Json& j);

Json to_json(const SeriesRecord& r);
SeriesRecord record_from_json(const Json& j);

Json to_json(const LaurentSeries<Rational>& s);
Json to_json(const LaurentSeries<GaussianRational>& s);

/// Pretty-printed JSON array of records.
std::string export_records(const std::vector<SeriesRecord>& records);
/// Accepts an array of records or a single record. Throws std::invalid_argument.
std::vector<SeriesRecord> import_records(const std::string& text);

/// Adds every record of a JSON file to db. Throws std::runtime_error if unreadable.
void load_db_file(const std::string& path, SeriesDB& db);

}  // namespace pdc
