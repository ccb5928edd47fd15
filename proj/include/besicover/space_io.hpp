#ifndef BESICOVER_SPACE_IO_HPP
#define BESICOVER_SPACE_IO_HPP

#include <json.hpp>

#include <string>

#include "besicover/errors.hpp"
#include "besicover/metric_space.hpp"

namespace besicover {

using Json = nlohmann::ordered_json;

// Distances travel as "p/q" strings (or plain JSON integers). Floating point
// values are rejected outright.
Rational rational_from_json(const Json& value);
Json rational_to_json(const Rational& value);

// Space file format:
//   { "labels": ["a", "b"], "scale": "plain",
//     "dist": [["0", "1/2"], ["1/2", "0"]] }
// Round-trips bit-exactly through save/load.
FiniteMetricSpace space_from_json(const Json& doc);
Json space_to_json(const FiniteMetricSpace& space);
FiniteMetricSpace load_space(const std::string& path);
void save_space(const FiniteMetricSpace& space, const std::string& path);

// Parses JSON text with line/column diagnostics on failure.
Json parse_json_text(const std::string& text, const std::string& origin);

// Generator specs, either as JSON ({"gen": "paper_ultrametric", "N": 10}) or
// as compact strings ("paper_ultra:10", "lattice:2:9:linf",
// "lattice:1:21:linf:1/10", "grid:8", "zero_one:7", "dendrogram:16:3").
FiniteMetricSpace space_from_generator_spec(const Json& spec);
FiniteMetricSpace space_from_generator_string(const std::string& spec);

// FNV-1a 64 over the canonical space serialization; embedded in reports.
std::string space_content_hash(const FiniteMetricSpace& space);

Json ball_to_json(const Ball& ball);
Ball ball_from_json(const Json& doc);
Json family_to_json(const BallFamily& family);
BallFamily family_from_json(const Json& doc);

}  // namespace besicover

#endif
