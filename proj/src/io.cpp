#include "mcc/io.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include "mcc/errors.hpp"

namespace mcc {

using nlohmann::json;

namespace {

void expect_format(const json& j, const char* tag) {
  if (!j.is_object()) throw InvalidInput(std::string("expected a JSON object with format ") + tag);
  auto it = j.find("format");
  if (it == j.end() || !it->is_string() || it->get<std::string>() != tag)
    throw InvalidInput(std::string("missing or wrong format tag, expected ") + tag);
}

template <typename T>
T field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw InvalidInput(std::string("missing field '") + name + "'");
  try {
    return it->get<T>();
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("field '") + name + "': " + e.what());
  }
}

constexpr std::array<const char*, 8> kPalette = {"#222222", "#f2f2f2", "#d94801", "#2171b5",
                                                 "#238b45", "#6a51a3", "#cb181d", "#fec44f"};

}  // namespace

json graph_to_json(const Graph& g) {
  json j;
  j["format"] = kGraphFormat;
  j["n"] = g.num_vertices();
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  j["outer_cycle"] = g.outer_cycle() ? json(*g.outer_cycle()) : json(nullptr);
  j["levels"] = g.levels() ? json(*g.levels()) : json(nullptr);
  if (g.family())
    j["family"] = {{"name", g.family()->name}, {"params", g.family()->params}};
  else
    j["family"] = nullptr;
  return j;
}

Graph graph_from_json(const json& j) {
  expect_format(j, kGraphFormat);
  const int n = field<int>(j, "n");
  if (n < 0) throw InvalidInput("negative vertex count");
  auto edges = field<std::vector<std::array<int, 2>>>(j, "edges");
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto& e : edges) list.emplace_back(e[0], e[1]);
  Graph g = Graph::from_edges(n, list);
  try {
    if (j.contains("outer_cycle") && !j["outer_cycle"].is_null())
      g.set_outer_cycle(j["outer_cycle"].get<std::vector<Vertex>>());
    if (j.contains("levels") && !j["levels"].is_null()) g.set_levels(j["levels"].get<std::vector<int>>());
    if (j.contains("family") && !j["family"].is_null()) {
      const json& f = j["family"];
      g.set_family({field<std::string>(f, "name"), f.value("params", json::object())});
    }
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed graph metadata: ") + e.what());
  }
  return g;
}

json coloring_to_json(const Coloring& c) {
  return {{"format", kColoringFormat}, {"t", c.t}, {"colors", c.colors}};
}

Coloring coloring_from_json(const json& j) {
  expect_format(j, kColoringFormat);
  return {field<int>(j, "t"), field<std::vector<Color>>(j, "colors")};
}

json report_to_json(const MccReport& r, bool with_components) {
  json j{{"format", kReportFormat}, {"max_component", r.max_component}, {"per_color_max", r.per_color_max}};
  if (with_components) {
    json comps = json::array();
    for (const auto& c : r.components) comps.push_back({{"color", c.color}, {"vertices", c.vertices}});
    j["components"] = std::move(comps);
  }
  return j;
}

json path_to_json(const PathWitness& p) {
  return {{"format", kPathFormat}, {"color", p.color}, {"length", p.length()}, {"vertices", p.vertices}};
}

std::string dump_json(const json& j) { return j.dump() + "\n"; }

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("not valid JSON: ") + e.what());
  }
}

std::string to_dot(const Graph& g, const Coloring* c) {
  if (c && static_cast<int>(c->colors.size()) != g.num_vertices())
    throw InvalidInput("coloring length does not match the graph");
  std::ostringstream out;
  out << "graph G {\n  node [shape=circle, style=filled, fillcolor=\"#ffffff\"];\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    out << "  " << v;
    if (c) {
      const Color col = c->colors[v];
      out << " [fillcolor=\"" << kPalette[static_cast<std::size_t>(col) % kPalette.size()] << "\"";
      if (col % static_cast<int>(kPalette.size()) == 0) out << ", fontcolor=\"#ffffff\"";
      out << "]";
    }
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
  if (!out) throw InvalidInput("failed writing " + path);
}

}  // namespace mcc
