#pragma once

#include <string>

#include "json.hpp"
#include "mcc/graph.hpp"
#include "mcc/tree3.hpp"

namespace mcc {

inline constexpr const char* kGraphFormat = "mcc-graph/1";
inline constexpr const char* kColoringFormat = "mcc-coloring/1";
inline constexpr const char* kReportFormat = "mcc-report/1";
inline constexpr const char* kPathFormat = "mcc-path/1";

nlohmann::json graph_to_json(const Graph& g);
/// Throws InvalidInput on a wrong format tag or malformed fields.
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const MccReport& r, bool with_components = true);

nlohmann::json path_to_json(const PathWitness& p);

/// Canonical text: compact JSON with sorted keys and a trailing newline.
std::string dump_json(const nlohmann::json& j);

/// Throws InvalidInput when the text is not JSON.
nlohmann::json parse_json(const std::string& text);

/// Graphviz rendering; vertices are filled from a fixed palette by color id
/// when a coloring is given.
std::string to_dot(const Graph& g, const Coloring* c = nullptr);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace mcc
