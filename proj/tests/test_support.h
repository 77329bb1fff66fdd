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

// Random graph generators and direct-definition oracles for tests. The
// oracles work on dense adjacency matrices and share no code with the
// library's statistics.

#ifndef NETCARD_TESTS_TEST_SUPPORT_H_
#define NETCARD_TESTS_TEST_SUPPORT_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "netcard/card.h"
#include "netcard/graph.h"
#include "netcard/ingest.h"
#include "netcard/stats.h"
#include "netcard/vocabulary.h"

namespace netcard::testing {

struct RandomGraphSpec {
  int max_nodes = 7;
  int min_nodes = 1;
  bool directed = false;
  bool weighted = false;
  bool self_loops = false;
  bool bipartite = false;
};

inline std::string NodeName(int i) { return "n" + std::to_string(i); }

// Erdos-Renyi style graph with a random density; every node is listed so
// isolated nodes occur.
inline Graph RandomGraph(std::mt19937_64& rng, const RandomGraphSpec& spec) {
  std::uniform_int_distribution<int> size(spec.min_nodes, spec.max_nodes);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int n = size(rng);
  const double p = unit(rng);
  std::vector<NodeId> nodes;
  std::vector<int> side(n, 0);
  for (int i = 0; i < n; ++i) {
    nodes.push_back(NodeName(i));
    side[i] = unit(rng) < 0.5 ? 0 : 1;
  }
  std::vector<LinkSpec> links;
  for (int u = 0; u < n; ++u) {
    for (int v = spec.directed ? 0 : u; v < n; ++v) {
      if (u == v && !spec.self_loops) continue;
      if (spec.bipartite && u != v && side[u] == side[v]) continue;
      if (unit(rng) >= p) continue;
      LinkSpec l{nodes[u], nodes[v], std::nullopt};
      if (spec.weighted) {
        double w = std::uniform_int_distribution<int>(1, 9)(rng);
        l.weight = unit(rng) < 0.3 ? -w : w;
      }
      links.push_back(l);
    }
  }
  std::optional<BipartiteSets> sets;
  if (spec.bipartite) {
    sets.emplace();
    for (int i = 0; i < n; ++i) {
      (side[i] == 0 ? sets->first : sets->second).push_back(nodes[i]);
    }
  }
  GraphKind kind{spec.directed, spec.weighted};
  return BuildGraph(kind, nodes, links, sets);
}

// Dense view of a graph: count[u][v] = number of links u->v (undirected
// links fill both cells, a self-loop fills its diagonal cell once).
struct Dense {
  int n = 0;
  bool directed = false;
  std::vector<std::vector<int>> count;

  explicit Dense(const Graph& g)
      : n(static_cast<int>(g.node_count())),
        directed(g.directed()),
        count(n, std::vector<int>(n, 0)) {
    for (const auto& l : g.links()) {
      count[l.source][l.target] = 1;
      if (!directed) count[l.target][l.source] = 1;
    }
  }

  bool Adjacent(int u, int v) const {
    return u != v && (count[u][v] > 0 || count[v][u] > 0);
  }
};

// Total degree from the definition: undirected self-loops add two.
inline std::vector<long> OracleDegrees(const Dense& d) {
  std::vector<long> k(d.n, 0);
  for (int u = 0; u < d.n; ++u) {
    for (int v = 0; v < d.n; ++v) {
      if (d.directed) {
        k[u] += d.count[u][v] + d.count[v][u];
      } else {
        k[u] += (u == v ? 2 : 1) * d.count[u][v];
      }
    }
  }
  return k;
}

// Mean over nodes of (closed neighbor pairs) / (all neighbor pairs),
// enumerating every unordered pair of neighbors.
inline double OracleClustering(const Dense& d) {
  double total = 0;
  for (int i = 0; i < d.n; ++i) {
    std::vector<int> nb;
    for (int j = 0; j < d.n; ++j) {
      if (d.Adjacent(i, j)) nb.push_back(j);
    }
    const std::size_t k = nb.size();
    if (k < 2) continue;
    std::size_t closed = 0;
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) closed += d.Adjacent(nb[a], nb[b]);
    }
    total += static_cast<double>(closed) / (static_cast<double>(k * (k - 1)) / 2.0);
  }
  return d.n == 0 ? 0.0 : total / d.n;
}

// Pearson correlation from single-pass raw moments over the ordered stub
// pairs (u, v) with u != v.
inline std::optional<double> OracleAssortativity(const Dense& d) {
  std::vector<long> x(d.n, 0);
  std::vector<long> y(d.n, 0);
  if (d.directed) {
    for (int u = 0; u < d.n; ++u) {
      for (int v = 0; v < d.n; ++v) {
        x[u] += d.count[u][v];
        y[v] += d.count[u][v];
      }
    }
  } else {
    x = OracleDegrees(d);
    y = x;
  }
  long double m = 0, sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (int u = 0; u < d.n; ++u) {
    for (int v = 0; v < d.n; ++v) {
      if (u == v || d.count[u][v] == 0) continue;
      const long double a = x[u];
      const long double b = y[v];
      m += 1;
      sx += a;
      sy += b;
      sxx += a * a;
      syy += b * b;
      sxy += a * b;
    }
  }
  if (m == 0) return std::nullopt;
  const long double vx = m * sxx - sx * sx;
  const long double vy = m * syy - sy * sy;
  if (vx <= 0 || vy <= 0) return std::nullopt;
  return static_cast<double>((m * sxy - sx * sy) / std::sqrt(vx * vy));
}

// Component label per node via repeated union of adjacent pairs.
inline std::vector<int> OracleComponents(const Dense& d) {
  std::vector<int> label(d.n);
  for (int i = 0; i < d.n; ++i) label[i] = i;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u = 0; u < d.n; ++u) {
      for (int v = 0; v < d.n; ++v) {
        if (d.Adjacent(u, v) && label[u] != label[v]) {
          const int lo = std::min(label[u], label[v]);
          label[u] = label[v] = lo;
          changed = true;
        }
      }
    }
  }
  return label;
}

// All-pairs shortest paths (Floyd-Warshall); -1 for unreachable.
inline std::vector<std::vector<int>> OracleDistances(const Dense& d) {
  constexpr int kInf = 1 << 20;
  std::vector<std::vector<int>> dist(d.n, std::vector<int>(d.n, kInf));
  for (int i = 0; i < d.n; ++i) {
    dist[i][i] = 0;
    for (int j = 0; j < d.n; ++j) {
      if (d.Adjacent(i, j)) dist[i][j] = 1;
    }
  }
  for (int k = 0; k < d.n; ++k) {
    for (int i = 0; i < d.n; ++i) {
      for (int j = 0; j < d.n; ++j) {
        dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
      }
    }
  }
  for (auto& row : dist) {
    for (int& v : row) {
      if (v == kInf) v = -1;
    }
  }
  return dist;
}

// Largest finite distance among nodes that carry `label`.
inline int OracleDiameter(const Dense& d, const std::vector<int>& labels, int label) {
  const auto dist = OracleDistances(d);
  int best = 0;
  for (int i = 0; i < d.n; ++i) {
    for (int j = 0; j < d.n; ++j) {
      if (labels[i] == label && labels[j] == label) best = std::max(best, dist[i][j]);
    }
  }
  return best;
}

inline bool OracleHasTriangle(const Dense& d) {
  for (int a = 0; a < d.n; ++a) {
    for (int b = a + 1; b < d.n; ++b) {
      for (int c = b + 1; c < d.n; ++c) {
        if (d.Adjacent(a, b) && d.Adjacent(b, c) && d.Adjacent(a, c)) return true;
      }
    }
  }
  return false;
}

inline std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Card CardFor(const Graph& g, const MetaSidecar& sidecar = {},
                    const StructureConfig& config = {}) {
  return AssembleCard(ComputeStructurePanel(g, config), sidecar, g.kind()).card;
}

inline Card KarateCard(const StructureConfig& config = {}) {
  Graph g = ParseEdgeList(ReadTextFile(NETCARD_DATA_DIR "/karate.edgelist"), {});
  return CardFor(g, ParseMetaSidecar(ReadTextFile(NETCARD_DATA_DIR "/karate.meta.json")),
                 config);
}

// Free text exercising every character the renderers escape, plus
// non-ASCII letters. Never contains a line break.
inline std::string RandomText(std::mt19937_64& rng) {
  static const char* const kPieces[] = {
      "net", "work", " ", "a|b", "*", "_", "\\", "`", "&", "%", "$", "#", "{", "}",
      "~", "^", ",", "\"", "'", "1,000", "0.5", "caf\u00e9", "\u00fcber", "(x)", "[y]", "<z>"};
  std::uniform_int_distribution<int> count(0, 6);
  std::uniform_int_distribution<std::size_t> pick(0, std::size(kPieces) - 1);
  std::string out;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) out += kPieces[pick(rng)];
  return out;
}

// A sidecar that fills a random subset of the authored rows.
inline MetaSidecar RandomSidecar(std::mt19937_64& rng, const Graph& g) {
  std::bernoulli_distribution coin(0.6);
  MetaSidecar s;
  for (std::string_view name : kOverallFields) {
    if (name == "Kind") continue;
    if (name == kLinkWeightsField && !g.weighted()) continue;
    if (coin(rng)) s.overall[std::string(name)] = RandomText(rng);
  }
  if (coin(rng)) s.overall["Name"] = "net " + RandomText(rng);
  for (std::string_view name : kMetainfoFields) {
    if (coin(rng)) s.metainfo[std::string(name)] = RandomText(rng);
  }
  return s;
}

// Card of a random graph with random authored text and settings.
inline Card RandomCard(std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  RandomGraphSpec spec;
  spec.max_nodes = 40;
  spec.directed = coin(rng);
  spec.weighted = coin(rng);
  spec.self_loops = coin(rng);
  spec.bipartite = !spec.self_loops && coin(rng);
  Graph g = RandomGraph(rng, spec);
  StructureConfig config;
  config.summary_style = coin(rng) ? SummaryStyle::kMeanMinMax : SummaryStyle::kMedianP5P95;
  config.per_partition_degree = coin(rng);
  MetaSidecar sidecar = RandomSidecar(rng, g);
  if (spec.bipartite && coin(rng)) {
    const BipartiteSets& sets = *g.bipartite_sets();
    sidecar.bipartite_labels.emplace(BipartiteLabel{"plants", sets.first},
                                     BipartiteLabel{"pollinators", sets.second});
  }
  return CardFor(g, sidecar, config);
}

}  // namespace netcard::testing

#endif  // NETCARD_TESTS_TEST_SUPPORT_H_
