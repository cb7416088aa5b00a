#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "tutte/biseries.hpp"

namespace tutte {

// Schema: { "trunc": [Nx, Ny], "terms": [[i, j, "p/q"], ...] }
// Terms sorted lexicographically by (i, j); bit-exact round trip.
nlohmann::json series_to_json(const BiSeries& s);
BiSeries series_from_json(const nlohmann::json& j);

void write_series_file(const std::filesystem::path& p, const BiSeries& s);
BiSeries read_series_file(const std::filesystem::path& p);

// Atomic text write: temp file in the same directory, then rename.
void atomic_write(const std::filesystem::path& p, const std::string& content);

} // namespace tutte
