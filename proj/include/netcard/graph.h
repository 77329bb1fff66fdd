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

#ifndef NETCARD_GRAPH_H_
#define NETCARD_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace netcard {

// Node identifiers are opaque strings. Numeric labels keep their spelling.
using NodeId = std::string;

struct GraphKind {
  bool directed = false;
  bool weighted = false;

  // "Undirected, unweighted", "Directed, weighted", ...
  std::string Label() const;

  friend bool operator==(const GraphKind&, const GraphKind&) = default;
};

// A link as supplied by callers and parsers, by node id.
struct LinkSpec {
  NodeId source;
  NodeId target;
  std::optional<double> weight;

  friend bool operator==(const LinkSpec&, const LinkSpec&) = default;
};

struct BipartiteSets {
  std::vector<NodeId> first;
  std::vector<NodeId> second;

  friend bool operator==(const BipartiteSets&, const BipartiteSets&) = default;
};

struct BuildOptions {
  // Reject repeated links instead of collapsing them.
  bool strict_duplicates = false;
};

// Immutable network value. Nodes are kept in lexicographic order of their
// ids and addressed by position; undirected links are stored with
// source <= target. Links are sorted by (source, target).
class Graph {
 public:
  using Index = std::uint32_t;

  struct Link {
    Index source = 0;
    Index target = 0;
    std::optional<double> weight;

    friend bool operator==(const Link&, const Link&) = default;
  };

  const GraphKind& kind() const { return kind_; }
  bool directed() const { return kind_.directed; }
  bool weighted() const { return kind_.weighted; }

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t link_count() const { return links_.size(); }
  std::size_t self_loop_count() const { return self_loops_; }

  std::span<const NodeId> nodes() const { return nodes_; }
  std::span<const Link> links() const { return links_; }
  const NodeId& node(Index i) const { return nodes_[i]; }

  // Position of `id`, if it is a node of this graph.
  std::optional<Index> Find(const NodeId& id) const;

  // Sorted partition, when the graph is annotated as bipartite.
  const std::optional<BipartiteSets>& bipartite_sets() const {
    return bipartite_;
  }
  // 0 or 1 per node; empty unless bipartite.
  std::span<const std::uint8_t> side() const { return side_; }

  // Undirected graphs: every neighbor (a self-loop lists the node once).
  // Directed graphs: targets of outgoing links.
  std::span<const Index> out_neighbors(Index i) const {
    return {out_adj_.data() + out_start_[i], out_adj_.data() + out_start_[i + 1]};
  }
  // Directed graphs: sources of incoming links. Same as out_neighbors for
  // undirected graphs.
  std::span<const Index> in_neighbors(Index i) const {
    if (!kind_.directed) return out_neighbors(i);
    return {in_adj_.data() + in_start_[i], in_adj_.data() + in_start_[i + 1]};
  }
  bool has_self_loop(Index i) const { return self_loop_flag_[i] != 0; }

  // Links expressed by node id, in storage order.
  std::vector<LinkSpec> LinkSpecs() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.kind_ == b.kind_ && a.nodes_ == b.nodes_ && a.links_ == b.links_ &&
           a.bipartite_ == b.bipartite_;
  }

 private:
  friend Graph BuildGraph(GraphKind, std::span<const NodeId>,
                          std::span<const LinkSpec>,
                          std::optional<BipartiteSets>, BuildOptions);

  GraphKind kind_;
  std::vector<NodeId> nodes_;
  std::vector<Link> links_;
  std::optional<BipartiteSets> bipartite_;
  std::vector<std::uint8_t> side_;
  std::size_t self_loops_ = 0;

  std::vector<std::size_t> out_start_;
  std::vector<Index> out_adj_;
  std::vector<std::size_t> in_start_;
  std::vector<Index> in_adj_;
  std::vector<std::uint8_t> self_loop_flag_;
};

// Canonicalizes and validates a graph. With an empty `node_ids` the node set
// is inferred from link endpoints (plus any bipartite set members).
//
// Throws Error with kEndpointUnknown, kWeightMismatch, kBipartiteViolation or
// (strict mode only) kDuplicateLink. Repeated links are otherwise collapsed
// into one; their weights are summed.
Graph BuildGraph(GraphKind kind, std::span<const NodeId> node_ids,
                 std::span<const LinkSpec> links,
                 std::optional<BipartiteSets> bipartite = std::nullopt,
                 BuildOptions options = {});

// Same graph with a different (or no) bipartite annotation.
Graph WithBipartiteSets(const Graph& g, std::optional<BipartiteSets> sets);

enum class DegreeMode { kTotal, kIn, kOut };

// Degrees by node position. Undirected self-loops count twice toward the
// total degree; directed self-loops count once toward in and once toward out.
// Throws kModeInvalid for in/out on an undirected graph.
std::vector<std::int64_t> Degrees(const Graph& g, DegreeMode mode);

std::vector<std::pair<NodeId, std::int64_t>> DegreeSequence(const Graph& g,
                                                            DegreeMode mode);

}  // namespace netcard

#endif  // NETCARD_GRAPH_H_
