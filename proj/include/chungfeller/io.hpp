#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "chungfeller/enumerate.hpp"
#include "chungfeller/path.hpp"
#include "chungfeller/series.hpp"
#include "chungfeller/stepset.hpp"
#include "chungfeller/verify.hpp"

namespace cf::io {

// {"class": 1|2|3, "A": [{"i": int, "w": "p/q"}, ...], "B": [...]}.
// Missing "A" or "B" means the empty set. Throws std::invalid_argument.
StepSetSpec parse_spec_json(std::string_view text);
nlohmann::json spec_to_json(const StepSetSpec& spec);

// "1:1,3:1/2" -> {1: 1, 3: 1/2}; a bare index means weight 1; "" is empty.
WeightedIndexSet parse_index_weights(std::string_view text);

// Exact values joined by commas: "1,1,2,5".
std::string join_csv(std::span<const Rational> values);

// One line per row n with the entries m = 0..n.
std::string table_to_csv(const StatTable& table);
nlohmann::json table_to_json(const StatTable& table, std::string_view kind);

// Nonzero terms "c * z^n" / "c * y^m z^n" in ascending (n, m).
std::vector<std::string> series_terms(const SeriesUni& s);
std::vector<std::string> series_terms(const SeriesBi& s);
nlohmann::json series_to_json(const SeriesBi& s, std::string_view name);

// [{"dx": .., "dy": ..}, ...]; a pointed path is {"path": [...], "p": j}.
nlohmann::json path_to_json(const Path& path);
nlohmann::json pointed_to_json(const PointedPath& pointed);

// {"check", "passed", "first_failure": {...} | null, ...}.
nlohmann::json report_to_json(const VerificationReport& report);
// Header line plus one line: check,passed,n,m,expected,actual,source.
std::string report_to_csv(const VerificationReport& report);

}  // namespace cf::io
