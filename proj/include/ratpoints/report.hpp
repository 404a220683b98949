#pragma once

#include <string>

#include <json.hpp>

#include "ratpoints/relative.hpp"

namespace ratpoints {

using Json = nlohmann::json;  // std::map-backed, so keys come out sorted

Json to_json(const std::vector<AffinePoint>& points);  // sorted by height order
Json to_json(const ExcisionRecord& r);
Json to_json(const QueryLog& log);
Json to_json(const SolutionReport& r);

std::string render_text(const ExcisionRecord& r);
std::string render_text(const SolutionReport& r);

/// "full_set", "finiteness", "genus0" or "aborted".
std::string outcome_kind(const Outcome& o);

}  // namespace ratpoints
