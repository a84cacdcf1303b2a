#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "mcc/errors.hpp"
#include "mcc/generators.hpp"
#include "mcc/io.hpp"

namespace mcc {
namespace {

using nlohmann::json;

TEST(GraphJson, Fields) {
  Graph g = gen_complete_3tree(1).first;
  json j = graph_to_json(g);
  EXPECT_EQ(j["format"], "mcc-graph/1");
  EXPECT_EQ(j["n"], 4);
  EXPECT_EQ(j["edges"].size(), 6u);
  EXPECT_EQ(j["edges"][0], json({0, 1}));
  EXPECT_EQ(j["outer_cycle"], json({0, 1, 2}));
  EXPECT_EQ(j["family"]["name"], "complete-3tree");
  EXPECT_EQ(j["family"]["params"]["k"], 1);

  json bare = graph_to_json(Graph(2));
  EXPECT_TRUE(bare["outer_cycle"].is_null());
  EXPECT_TRUE(bare["levels"].is_null());
  EXPECT_TRUE(bare["family"].is_null());
}

TEST(GraphJson, RoundTripIsByteIdentical) {
  std::vector<Graph> graphs = {gen_wheel(7),
                               gen_double_wheel(8, true),
                               gen_snowflake(3).first,
                               gen_outerpath(std::vector<int>{5, 3, 4}).first,
                               gen_complete_3tree(3).first,
                               gen_random_mop(15, 9),
                               Graph(3)};
  for (const Graph& g : graphs) {
    const std::string text = dump_json(graph_to_json(g));
    Graph back = graph_from_json(parse_json(text));
    EXPECT_EQ(back, g);
    EXPECT_EQ(dump_json(graph_to_json(back)), text);
    EXPECT_EQ(text.back(), '\n');
  }
}

TEST(GraphJson, EdgeOrderIsCanonical) {
  json j = json::parse(R"({"format":"mcc-graph/1","n":3,"edges":[[2,1],[0,2],[1,0]]})");
  Graph g = graph_from_json(j);
  EXPECT_EQ(graph_to_json(g)["edges"], json::parse("[[0,1],[0,2],[1,2]]"));
}

TEST(GraphJson, MalformedInput) {
  EXPECT_THROW(graph_from_json(json::parse(R"({"format":"other","n":3,"edges":[]})")), InvalidInput);
  EXPECT_THROW(graph_from_json(json::parse(R"({"format":"mcc-graph/1","edges":[]})")), InvalidInput);
  EXPECT_THROW(graph_from_json(json::parse(R"({"format":"mcc-graph/1","n":2,"edges":[[0,2]]})")), InvalidInput);
  EXPECT_THROW(graph_from_json(json::parse(R"({"format":"mcc-graph/1","n":2,"edges":"x"})")), InvalidInput);
  EXPECT_THROW(graph_from_json(json::parse(R"({"format":"mcc-graph/1","n":3,"edges":[],"outer_cycle":[0,1,2]})")),
               InvalidInput);
  EXPECT_THROW(graph_from_json(json::array()), InvalidInput);
  EXPECT_THROW(parse_json("{not json"), InvalidInput);
}

TEST(ColoringJson, RoundTrip) {
  Coloring c{3, {0, 2, 1, 1}};
  json j = coloring_to_json(c);
  EXPECT_EQ(j["format"], "mcc-coloring/1");
  EXPECT_EQ(coloring_from_json(j), c);
  EXPECT_THROW(coloring_from_json(json::parse(R"({"format":"mcc-coloring/1","colors":[0]})")), InvalidInput);
}

TEST(ReportJson, ComponentsOptional) {
  Graph g = gen_wheel(5);
  MccReport r = monochromatic_components(g, {2, {0, 0, 1, 1, 1}});
  json full = report_to_json(r);
  EXPECT_EQ(full["format"], "mcc-report/1");
  EXPECT_EQ(full["max_component"], 3);
  EXPECT_EQ(full["per_color_max"], json({2, 3}));
  EXPECT_EQ(full["components"].size(), 2u);
  EXPECT_EQ(full["components"][0]["vertices"], json({0, 1}));
  EXPECT_FALSE(report_to_json(r, false).contains("components"));
}

TEST(PathJson, Fields) {
  json j = path_to_json({{0, 3, 5}, 1});
  EXPECT_EQ(j["length"], 2);
  EXPECT_EQ(j["color"], 1);
}

TEST(Dot, ListsVerticesEdgesAndPalette) {
  Graph g = gen_wheel(4);
  Coloring c{2, {0, 1, 1, 0}};
  const std::string dot = to_dot(g, &c);
  EXPECT_EQ(dot.rfind("graph G {", 0), 0u);
  EXPECT_NE(dot.find("0 -- 1;"), std::string::npos);
  EXPECT_NE(dot.find("2 -- 3;"), std::string::npos);
  EXPECT_NE(dot.find("fillcolor=\"#222222\""), std::string::npos);
  EXPECT_NE(dot.find("fillcolor=\"#f2f2f2\""), std::string::npos);
  EXPECT_EQ(to_dot(g), to_dot(g));
  Coloring bad{2, {0}};
  EXPECT_THROW(to_dot(g, &bad), InvalidInput);
}

TEST(Files, WriteThenRead) {
  const auto path = std::filesystem::temp_directory_path() / "mcc_io_test.json";
  write_file(path.string(), "hello\n");
  EXPECT_EQ(read_file(path.string()), "hello\n");
  std::filesystem::remove(path);
  EXPECT_THROW(read_file(path.string()), InvalidInput);
  EXPECT_THROW(write_file("/nonexistent-dir/x.json", "x"), InvalidInput);
}

}  // namespace
}  // namespace mcc
