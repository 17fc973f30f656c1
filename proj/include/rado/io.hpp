#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "rado/bounds.hpp"
#include "rado/counting.hpp"
#include "rado/density.hpp"
#include "rado/greedy.hpp"
#include "rado/search.hpp"

namespace rado {

using json = nlohmann::ordered_json;

/// {"r": 2, "blocks": [{"color": 0, "len": "1"}, ...]} with exact fraction strings.
json pattern_to_json(const BlockPattern& pattern);
/// Throws ParseError on malformed input.
BlockPattern pattern_from_json(const json& j);
BlockPattern parse_pattern(std::string_view text);

/// {"fraction": "p/q", "decimal": "...", "reciprocal": "..."} with
/// 10 significant digits; the reciprocal is omitted for zero.
json density_to_json(const BigRational& d);

json to_json(const TripleCounts& c);
json to_json(const PairCategoryCounts& c);
json to_json(const DensityReport& d);
json to_json(const GreedyTrace& t);
json to_json(const SearchResult& s);
json to_json(const BoundReport& b);
json to_json(const VerifySummary& v);

/// Whole file as text; throws IoError.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

/// `n,min_count,min_over_n2` with a 10-significant-digit ratio.
std::string scan_csv(const std::vector<ScanRow>& rows);

}  // namespace rado
