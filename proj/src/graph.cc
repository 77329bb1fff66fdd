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

#include "netcard/graph.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "netcard/error.h"

namespace netcard {
namespace {

void SortUnique(std::vector<NodeId>& ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
}

// Compressed adjacency from (row, column) pairs.
void FillAdjacency(std::size_t n,
                   const std::vector<std::pair<Graph::Index, Graph::Index>>& pairs,
                   std::vector<std::size_t>& start,
                   std::vector<Graph::Index>& adj) {
  start.assign(n + 1, 0);
  for (const auto& [row, col] : pairs) ++start[row + 1];
  for (std::size_t i = 0; i < n; ++i) start[i + 1] += start[i];
  adj.assign(pairs.size(), 0);
  std::vector<std::size_t> cursor(start.begin(), start.end() - 1);
  for (const auto& [row, col] : pairs) adj[cursor[row]++] = col;
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(adj.begin() + start[i], adj.begin() + start[i + 1]);
  }
}

}  // namespace

std::string GraphKind::Label() const {
  std::string label = directed ? "Directed" : "Undirected";
  label += weighted ? ", weighted" : ", unweighted";
  return label;
}

std::optional<Graph::Index> Graph::Find(const NodeId& id) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id);
  if (it == nodes_.end() || *it != id) return std::nullopt;
  return static_cast<Index>(it - nodes_.begin());
}

std::vector<LinkSpec> Graph::LinkSpecs() const {
  std::vector<LinkSpec> out;
  out.reserve(links_.size());
  for (const Link& l : links_) {
    out.push_back({nodes_[l.source], nodes_[l.target], l.weight});
  }
  return out;
}

Graph BuildGraph(GraphKind kind, std::span<const NodeId> node_ids,
                 std::span<const LinkSpec> links,
                 std::optional<BipartiteSets> bipartite, BuildOptions options) {
  Graph g;
  g.kind_ = kind;

  const bool infer_nodes = node_ids.empty();
  if (infer_nodes) {
    for (const LinkSpec& l : links) {
      g.nodes_.push_back(l.source);
      g.nodes_.push_back(l.target);
    }
    if (bipartite) {
      g.nodes_.insert(g.nodes_.end(), bipartite->first.begin(),
                      bipartite->first.end());
      g.nodes_.insert(g.nodes_.end(), bipartite->second.begin(),
                      bipartite->second.end());
    }
  } else {
    g.nodes_.assign(node_ids.begin(), node_ids.end());
  }
  SortUnique(g.nodes_);

  auto index_of = [&](const NodeId& id) -> Graph::Index {
    auto found = g.Find(id);
    if (!found) {
      throw Error(ErrorCode::kEndpointUnknown, id,
                  "link endpoint '" + id + "' is not in the node list");
    }
    return *found;
  };

  std::map<std::pair<Graph::Index, Graph::Index>, std::optional<double>> merged;
  for (const LinkSpec& l : links) {
    if (l.weight.has_value() != kind.weighted) {
      throw Error(ErrorCode::kWeightMismatch, l.source + " " + l.target,
                  kind.weighted ? "weighted graph has a link without a weight"
                                : "unweighted graph has a weighted link");
    }
    if (l.weight && !std::isfinite(*l.weight)) {
      throw Error(ErrorCode::kWeightMismatch, l.source + " " + l.target,
                  "link weight is not finite");
    }
    Graph::Index s = index_of(l.source);
    Graph::Index t = index_of(l.target);
    if (!kind.directed && t < s) std::swap(s, t);
    auto [it, inserted] = merged.try_emplace({s, t}, l.weight);
    if (!inserted) {
      if (options.strict_duplicates) {
        throw Error(ErrorCode::kDuplicateLink, l.source + " " + l.target,
                    "duplicate link " + l.source + " " + l.target);
      }
      if (kind.weighted) *it->second += *l.weight;
    }
  }

  g.links_.reserve(merged.size());
  for (const auto& [key, weight] : merged) {
    g.links_.push_back({key.first, key.second, weight});
  }

  const std::size_t n = g.nodes_.size();
  if (bipartite) {
    SortUnique(bipartite->first);
    SortUnique(bipartite->second);
    g.side_.assign(n, 2);
    auto assign = [&](const std::vector<NodeId>& set, std::uint8_t side) {
      for (const NodeId& id : set) {
        auto found = g.Find(id);
        if (!found) {
          throw Error(ErrorCode::kBipartiteViolation, id,
                      "bipartite set member '" + id + "' is not a node");
        }
        if (g.side_[*found] != 2) {
          throw Error(ErrorCode::kBipartiteViolation, id,
                      "node '" + id + "' is in both bipartite sets");
        }
        g.side_[*found] = side;
      }
    };
    assign(bipartite->first, 0);
    assign(bipartite->second, 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (g.side_[i] == 2) {
        throw Error(ErrorCode::kBipartiteViolation, g.nodes_[i],
                    "node '" + g.nodes_[i] + "' is in neither bipartite set");
      }
    }
    for (const Graph::Link& l : g.links_) {
      if (l.source != l.target && g.side_[l.source] == g.side_[l.target]) {
        const std::string pair = g.nodes_[l.source] + " " + g.nodes_[l.target];
        throw Error(ErrorCode::kBipartiteViolation, pair,
                    "link " + pair + " joins two nodes of the same set");
      }
    }
    g.bipartite_ = std::move(bipartite);
  }

  std::vector<std::pair<Graph::Index, Graph::Index>> out_pairs;
  std::vector<std::pair<Graph::Index, Graph::Index>> in_pairs;
  g.self_loop_flag_.assign(n, 0);
  for (const Graph::Link& l : g.links_) {
    if (l.source == l.target) {
      ++g.self_loops_;
      g.self_loop_flag_[l.source] = 1;
    }
    out_pairs.emplace_back(l.source, l.target);
    if (kind.directed) {
      in_pairs.emplace_back(l.target, l.source);
    } else if (l.source != l.target) {
      out_pairs.emplace_back(l.target, l.source);
    }
  }
  FillAdjacency(n, out_pairs, g.out_start_, g.out_adj_);
  if (kind.directed) FillAdjacency(n, in_pairs, g.in_start_, g.in_adj_);
  return g;
}

Graph WithBipartiteSets(const Graph& g, std::optional<BipartiteSets> sets) {
  std::vector<LinkSpec> specs = g.LinkSpecs();
  return BuildGraph(g.kind(), g.nodes(), specs, std::move(sets));
}

std::vector<std::int64_t> Degrees(const Graph& g, DegreeMode mode) {
  if (mode != DegreeMode::kTotal && !g.directed()) {
    throw Error(ErrorCode::kModeInvalid, "",
                "in/out degree requested on an undirected graph");
  }
  const std::size_t n = g.node_count();
  std::vector<std::int64_t> degree(n, 0);
  for (Graph::Index i = 0; i < n; ++i) {
    if (!g.directed()) {
      degree[i] = static_cast<std::int64_t>(g.out_neighbors(i).size()) +
                  (g.has_self_loop(i) ? 1 : 0);
      continue;
    }
    const auto out = static_cast<std::int64_t>(g.out_neighbors(i).size());
    const auto in = static_cast<std::int64_t>(g.in_neighbors(i).size());
    switch (mode) {
      case DegreeMode::kTotal: degree[i] = in + out; break;
      case DegreeMode::kIn: degree[i] = in; break;
      case DegreeMode::kOut: degree[i] = out; break;
    }
  }
  return degree;
}

std::vector<std::pair<NodeId, std::int64_t>> DegreeSequence(const Graph& g,
                                                            DegreeMode mode) {
  std::vector<std::int64_t> degree = Degrees(g, mode);
  std::vector<std::pair<NodeId, std::int64_t>> out;
  out.reserve(degree.size());
  for (std::size_t i = 0; i < degree.size(); ++i) {
    out.emplace_back(g.nodes()[i], degree[i]);
  }
  return out;
}

}  // namespace netcard
