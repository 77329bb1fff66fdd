// Copyright 2026 The Netcard Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "netcard/ingest.h"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "netcard/error.h"
#include "netcard/render.h"
#include "test_support.h"

namespace netcard {
namespace {

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <typename Fn>
Error CatchError(Fn fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "expected an Error";
  return Error(ErrorCode::kInvalidCard, "", "none");
}

TEST(EdgeListTest, WhitespacePath) {
  Graph g = ParseEdgeList("1 2\n2 3\n", {});
  EXPECT_EQ(g.node_count(), 3u);
  EXPECT_EQ(g.link_count(), 2u);
  EXPECT_FALSE(g.directed());
}

TEST(EdgeListTest, CommaWeightedDirected) {
  EdgeListOptions opts;
  opts.delimiter = Delimiter::kComma;
  opts.has_weight_column = true;
  opts.directed = true;
  Graph g = ParseEdgeList("a,b,2.5\n", opts);
  ASSERT_EQ(g.link_count(), 1u);
  EXPECT_TRUE(g.directed());
  EXPECT_EQ(g.node(g.links()[0].source), "a");
  EXPECT_EQ(g.node(g.links()[0].target), "b");
  EXPECT_DOUBLE_EQ(*g.links()[0].weight, 2.5);
}

TEST(EdgeListTest, TabDelimiterAndComments) {
  EdgeListOptions opts;
  opts.delimiter = Delimiter::kTab;
  opts.comment_prefix = "%";
  Graph g = ParseEdgeList("% header\nJFK\tLAX\n\n  \nLAX\tSFO\n", opts);
  EXPECT_EQ(g.link_count(), 2u);
  EXPECT_TRUE(g.Find("JFK").has_value());
}

TEST(EdgeListTest, KarateFixture) {
  Graph g = ParseEdgeList(ReadFile(NETCARD_DATA_DIR "/karate.edgelist"), {});
  EXPECT_EQ(g.node_count(), 34u);
  EXPECT_EQ(g.link_count(), 78u);
}

TEST(EdgeListTest, UnexpectedWeightColumnIsDroppedWithWarning) {
  std::vector<std::string> warnings;
  Graph g = ParseEdgeList("a b 4\nb c 1\n", {}, &warnings);
  EXPECT_FALSE(g.weighted());
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("2 line(s)"), std::string::npos);
}

TEST(EdgeListTest, MalformedLinesReportLineNumber) {
  Error e = CatchError([] { ParseEdgeList("a b\n\nc\n", {}); });
  EXPECT_EQ(e.code(), ErrorCode::kLineMalformed);
  EXPECT_EQ(e.detail(), "3");

  EdgeListOptions weighted;
  weighted.has_weight_column = true;
  e = CatchError([&] { ParseEdgeList("a b 1.5\na b heavy\n", weighted); });
  EXPECT_EQ(e.code(), ErrorCode::kLineMalformed);
  EXPECT_EQ(e.detail(), "2");

  e = CatchError([&] { ParseEdgeList("a b\n", weighted); });
  EXPECT_EQ(e.detail(), "1");

  e = CatchError([] { ParseEdgeList("a b c d\n", {}); });
  EXPECT_EQ(e.code(), ErrorCode::kLineMalformed);

  e = CatchError([] { ParseEdgeList("a b\n\xff\xfe x\n", {}); });
  EXPECT_EQ(e.code(), ErrorCode::kLineMalformed);
  EXPECT_EQ(e.detail(), "2");
}

TEST(EdgeListTest, EmptyInput) {
  EXPECT_EQ(CatchError([] { ParseEdgeList("", {}); }).code(), ErrorCode::kEmptyInput);
  EXPECT_EQ(CatchError([] { ParseEdgeList("# only\n\n", {}); }).code(),
            ErrorCode::kEmptyInput);
}

TEST(EdgeListPropertyTest, LineOrderCommentsAndTrailingSpaceDoNotMatter) {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    testing::RandomGraphSpec spec;
    spec.min_nodes = 2;
    spec.max_nodes = 20;
    spec.self_loops = true;
    spec.directed = trial % 2 == 0;
    Graph g = testing::RandomGraph(rng, spec);
    if (g.link_count() == 0) continue;
    std::vector<std::string> lines;
    for (const LinkSpec& l : g.LinkSpecs()) lines.push_back(l.source + " " + l.target);
    EdgeListOptions opts;
    opts.directed = g.directed();

    std::string plain;
    for (const auto& line : lines) plain += line + "\n";
    Graph a = ParseEdgeList(plain, opts);

    std::shuffle(lines.begin(), lines.end(), rng);
    std::string noisy = "# shuffled\n";
    for (const auto& line : lines) noisy += line + "  \t\n\n# c\n";
    Graph b = ParseEdgeList(noisy, opts);
    EXPECT_EQ(a, b);
  }
}

TEST(NodeLinkTest, Basic) {
  Graph g = ParseNodeLink(
      R"({"directed":false,"weighted":false,"nodes":["a","b"],"links":[["a","b"]]})");
  EXPECT_EQ(g.node_count(), 2u);
  EXPECT_EQ(g.link_count(), 1u);
}

TEST(NodeLinkTest, ExplicitIsolatedNode) {
  Graph g = ParseNodeLink(
      R"({"directed":false,"weighted":false,"nodes":["a","b","c"],"links":[["a","b"]]})");
  EXPECT_EQ(g.node_count(), 3u);
}

TEST(NodeLinkTest, IntegerIdsAndBipartite) {
  Graph g = ParseNodeLink(R"({"directed":false,"weighted":true,
      "nodes":[1,2,3],"links":[[1,2,0.5],[3,2,4]],"bipartite":[[1,3],[2]]})");
  EXPECT_TRUE(g.Find("3").has_value());
  ASSERT_TRUE(g.bipartite_sets().has_value());
  EXPECT_EQ(g.bipartite_sets()->second, std::vector<NodeId>{"2"});
}

TEST(NodeLinkTest, ErrorsCarryJsonPointers) {
  struct Case {
    const char* doc;
    ErrorCode code;
    const char* detail;
  };
  const Case cases[] = {
      {R"({"weighted":false,"nodes":[],"links":[]})", ErrorCode::kDocumentMalformed,
       "/directed"},
      {R"({"directed":false,"weighted":false,"nodes":["a"],"links":[["a"]]})",
       ErrorCode::kDocumentMalformed, "/links/0"},
      {R"({"directed":false,"weighted":false,"nodes":["a",1.5],"links":[]})",
       ErrorCode::kDocumentMalformed, "/nodes/1"},
      {R"({"directed":false,"weighted":true,"nodes":["a","b"],"links":[["a","b","x"]]})",
       ErrorCode::kDocumentMalformed, "/links/0/2"},
      {R"({"directed":false,"weighted":false,"nodes":[],"links":[],"extra":1})",
       ErrorCode::kDocumentMalformed, "/extra"},
      {R"([1,2])", ErrorCode::kDocumentMalformed, "/"},
      {R"({"directed":)", ErrorCode::kDocumentMalformed, "/"},
      {R"({"directed":false,"weighted":false,"nodes":["a"],"links":[["a","b"]]})",
       ErrorCode::kEndpointUnknown, "b"},
      {R"({"directed":false,"weighted":true,"nodes":["a","b"],"links":[["a","b"]]})",
       ErrorCode::kWeightMismatch, "a b"},
  };
  for (const Case& c : cases) {
    Error e = CatchError([&] { ParseNodeLink(c.doc); });
    EXPECT_EQ(e.code(), c.code) << c.doc;
    EXPECT_EQ(e.detail(), c.detail) << c.doc;
  }
}

TEST(NodeLinkPropertyTest, WriteThenParseIsIdentity) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    testing::RandomGraphSpec spec;
    spec.max_nodes = 15;
    spec.directed = trial % 2 == 0;
    spec.weighted = trial % 3 != 0;
    spec.self_loops = !spec.weighted || trial % 5 == 0;
    spec.bipartite = trial % 4 == 0;
    Graph g = testing::RandomGraph(rng, spec);
    EXPECT_EQ(ParseNodeLink(WriteNodeLink(g)), g);
  }
}

TEST(SidecarTest, OverallField) {
  MetaSidecar s = ParseMetaSidecar(R"({"overall":{"Name":"Zachary Karate Club"}})");
  EXPECT_EQ(s.overall.size(), 1u);
  EXPECT_EQ(s.overall.at("Name"), "Zachary Karate Club");
  EXPECT_TRUE(s.metainfo.empty());
}

TEST(SidecarTest, MetainfoFields) {
  MetaSidecar s = ParseMetaSidecar(
      R"j({"metainfo":{"Funding":"None","Citation":"Zachary (1977)"}})j");
  EXPECT_EQ(s.metainfo.size(), 2u);
  EXPECT_EQ(s.metainfo.at("Funding"), "None");
  EXPECT_FALSE(s.overall.contains("Ethics"));
}

TEST(SidecarTest, UnknownFieldRejected) {
  Error e = CatchError([] { ParseMetaSidecar(R"({"overall":{"Flavor":"x"}})"); });
  EXPECT_EQ(e.code(), ErrorCode::kUnknownField);
  EXPECT_EQ(e.detail(), "Flavor");
  // A metainfo label is not an overall field.
  e = CatchError([] { ParseMetaSidecar(R"({"overall":{"Ethics":"x"}})"); });
  EXPECT_EQ(e.code(), ErrorCode::kUnknownField);
  e = CatchError([] { ParseMetaSidecar(R"({"extras":{}})"); });
  EXPECT_EQ(e.code(), ErrorCode::kUnknownField);
}

TEST(SidecarTest, BipartiteLabelsAndOmittedRows) {
  MetaSidecar s = ParseMetaSidecar(R"({
    "bipartite_labels": [{"name": "plants", "nodes": ["p1", "p2"]},
                         {"name": "pollinators", "nodes": ["b1"]}],
    "omit_rows": ["Ethics"]})");
  ASSERT_TRUE(s.bipartite_labels.has_value());
  EXPECT_EQ(s.bipartite_labels->first.name, "plants");
  EXPECT_EQ(s.bipartite_labels->second.nodes, std::vector<NodeId>{"b1"});
  EXPECT_EQ(s.omit_rows, std::vector<std::string>{"Ethics"});

  EXPECT_EQ(CatchError([] { ParseMetaSidecar(R"({"omit_rows":["Name"]})"); }).code(),
            ErrorCode::kDocumentMalformed);
  EXPECT_EQ(CatchError([] { ParseMetaSidecar(R"({"overall":{"Name":3}})"); }).detail(),
            "/overall/Name");
}

}  // namespace
}  // namespace netcard
