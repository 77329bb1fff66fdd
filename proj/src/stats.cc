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

#include "netcard/stats.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

#include "netcard/error.h"

namespace netcard {
namespace {

using Index = Graph::Index;
using Adjacency = std::vector<std::vector<Index>>;

// Simple undirected skeleton: direction dropped, self-loops and parallel
// pairs removed.
Adjacency Skeleton(const Graph& g) {
  const std::size_t n = g.node_count();
  Adjacency adj(n);
  for (const Graph::Link& l : g.links()) {
    if (l.source == l.target) continue;
    adj[l.source].push_back(l.target);
    adj[l.target].push_back(l.source);
  }
  for (auto& row : adj) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return adj;
}

void RequireNodes(const Graph& g) {
  if (g.node_count() == 0) {
    throw Error(ErrorCode::kEmptyGraph, "", "graph has no nodes");
  }
}

// Largest distance reached from `source`. `dist` must be all -1 on entry
// and is restored before returning.
std::int64_t Eccentricity(const Adjacency& adj, Index source,
                          std::vector<std::int64_t>& dist,
                          std::vector<Index>& queue) {
  queue.clear();
  queue.push_back(source);
  dist[source] = 0;
  std::int64_t far = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Index u = queue[head];
    far = std::max(far, dist[u]);
    for (Index v : adj[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  for (Index u : queue) dist[u] = -1;
  return far;
}

DistributionSummary SummarizeIntegers(std::span<const std::int64_t> values,
                                      SummaryStyle style) {
  std::vector<double> as_double(values.begin(), values.end());
  return SummarizeDistribution(as_double, style);
}

}  // namespace

double Percentile(std::span<const double> sorted, double p) {
  if (sorted.empty()) {
    throw Error(ErrorCode::kEmptyDistribution, "", "no values to summarize");
  }
  const double rank = p * static_cast<double>(sorted.size() - 1);
  const auto below = static_cast<std::size_t>(std::floor(rank));
  const std::size_t above = std::min(below + 1, sorted.size() - 1);
  const double frac = rank - static_cast<double>(below);
  return sorted[below] + frac * (sorted[above] - sorted[below]);
}

DistributionSummary SummarizeDistribution(std::span<const double> values,
                                          SummaryStyle preference) {
  if (values.empty()) {
    throw Error(ErrorCode::kEmptyDistribution, "", "no values to summarize");
  }
  DistributionSummary summary;
  if (values.size() <= kMaxListedValues) {
    summary.style = SummaryStyle::kValueList;
    summary.values.assign(values.begin(), values.end());
    std::sort(summary.values.begin(), summary.values.end(), std::greater<>());
    return summary;
  }
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  summary.style = preference;
  if (preference == SummaryStyle::kMedianP5P95) {
    summary.center = Percentile(sorted, 0.5);
    summary.lo = Percentile(sorted, 0.05);
    summary.hi = Percentile(sorted, 0.95);
  } else {
    summary.style = SummaryStyle::kMeanMinMax;
    // Summing in ascending order keeps integer-valued means exact.
    summary.center = std::accumulate(sorted.begin(), sorted.end(), 0.0) /
                     static_cast<double>(sorted.size());
    summary.lo = sorted.front();
    summary.hi = sorted.back();
  }
  return summary;
}

double AverageLocalClustering(const Graph& g) {
  RequireNodes(g);
  const Adjacency adj = Skeleton(g);
  const std::size_t n = adj.size();
  std::vector<std::uint8_t> mark(n, 0);
  double total = 0;
  for (Index i = 0; i < n; ++i) {
    const auto k = static_cast<double>(adj[i].size());
    if (adj[i].size() < 2) continue;
    for (Index j : adj[i]) mark[j] = 1;
    std::size_t closed = 0;  // each triangle through i is seen twice
    for (Index j : adj[i]) {
      for (Index w : adj[j]) closed += mark[w];
    }
    for (Index j : adj[i]) mark[j] = 0;
    total += static_cast<double>(closed) / (k * (k - 1));
  }
  return total / static_cast<double>(n);
}

std::pair<std::vector<std::uint32_t>, std::size_t> WeakComponents(
    const Graph& g) {
  const Adjacency adj = Skeleton(g);
  const std::size_t n = adj.size();
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> component(n, kUnset);
  std::vector<Index> queue;
  std::uint32_t next = 0;
  for (Index root = 0; root < n; ++root) {
    if (component[root] != kUnset) continue;
    queue.assign(1, root);
    component[root] = next;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Index v : adj[queue[head]]) {
        if (component[v] == kUnset) {
          component[v] = next;
          queue.push_back(v);
        }
      }
    }
    ++next;
  }
  return {std::move(component), next};
}

ConnectivityReport Connectivity(const Graph& g, std::size_t diameter_budget,
                                SummaryStyle size_style) {
  RequireNodes(g);
  const std::size_t n = g.node_count();
  auto [component, count] = WeakComponents(g);

  std::vector<std::int64_t> sizes(count, 0);
  for (std::uint32_t c : component) ++sizes[c];
  const auto largest = static_cast<std::uint32_t>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());

  ConnectivityReport report;
  report.n_components = count;
  report.is_connected = count == 1;
  report.fraction_in_largest =
      static_cast<double>(sizes[largest]) / static_cast<double>(n);
  report.component_sizes = SummarizeIntegers(sizes, size_style);

  if (n > diameter_budget) {
    report.diameter_skipped = true;
    return report;
  }
  const Adjacency adj = Skeleton(g);
  std::vector<std::int64_t> dist(n, -1);
  std::vector<Index> queue;
  queue.reserve(n);
  std::int64_t diameter = 0;
  for (Index s = 0; s < n; ++s) {
    if (component[s] != largest) continue;
    diameter = std::max(diameter, Eccentricity(adj, s, dist, queue));
  }
  if (report.is_connected) {
    report.diameter = diameter;
  } else {
    report.largest_component_diameter = diameter;
  }
  return report;
}

std::optional<double> DegreeAssortativity(const Graph& g) {
  std::vector<std::int64_t> x_degree;
  std::vector<std::int64_t> y_degree;
  if (g.directed()) {
    x_degree = Degrees(g, DegreeMode::kOut);
    y_degree = Degrees(g, DegreeMode::kIn);
  } else {
    x_degree = Degrees(g, DegreeMode::kTotal);
    y_degree = x_degree;
  }

  std::vector<std::pair<double, double>> pairs;
  pairs.reserve(2 * g.link_count());
  for (const Graph::Link& l : g.links()) {
    if (l.source == l.target) continue;
    pairs.emplace_back(x_degree[l.source], y_degree[l.target]);
    if (!g.directed()) pairs.emplace_back(x_degree[l.target], y_degree[l.source]);
  }
  if (pairs.empty()) return std::nullopt;

  double mean_x = 0;
  double mean_y = 0;
  for (const auto& [x, y] : pairs) {
    mean_x += x;
    mean_y += y;
  }
  mean_x /= static_cast<double>(pairs.size());
  mean_y /= static_cast<double>(pairs.size());
  double cov = 0;
  double var_x = 0;
  double var_y = 0;
  for (const auto& [x, y] : pairs) {
    cov += (x - mean_x) * (y - mean_y);
    var_x += (x - mean_x) * (x - mean_x);
    var_y += (y - mean_y) * (y - mean_y);
  }
  if (var_x <= 0 || var_y <= 0) return std::nullopt;
  const double r = cov / std::sqrt(var_x * var_y);
  return std::clamp(r, -1.0, 1.0);
}

double BidirectionalFraction(const Graph& g) {
  if (!g.directed()) {
    throw Error(ErrorCode::kNotDirected, "",
                "bidirectional links are defined for directed graphs only");
  }
  if (g.link_count() == 0) {
    throw Error(ErrorCode::kEmptyGraph, "", "graph has no links");
  }
  std::size_t reciprocated = 0;
  for (const Graph::Link& l : g.links()) {
    auto back = g.out_neighbors(l.target);
    reciprocated += std::binary_search(back.begin(), back.end(), l.source);
  }
  return static_cast<double>(reciprocated) /
         static_cast<double>(g.link_count());
}

double SignedNegativeFraction(std::span<const double> weights) {
  if (weights.empty()) {
    throw Error(ErrorCode::kEmptyDistribution, "", "no weights");
  }
  std::size_t negative = 0;
  for (double w : weights) {
    if (w == 0) {
      throw Error(ErrorCode::kZeroWeight, "", "a zero weight has no sign");
    }
    negative += w < 0;
  }
  return static_cast<double>(negative) / static_cast<double>(weights.size());
}

StructurePanel ComputeStructurePanel(const Graph& g,
                                     const StructureConfig& config) {
  RequireNodes(g);
  const SummaryStyle style = config.summary_style;
  StructurePanel panel;
  panel.kind = g.kind();
  panel.n_nodes = static_cast<std::int64_t>(g.node_count());
  panel.n_links = static_cast<std::int64_t>(g.link_count());
  panel.n_self_loops = static_cast<std::int64_t>(g.self_loop_count());

  const std::vector<std::int64_t> total = Degrees(g, DegreeMode::kTotal);
  panel.degree = SummarizeIntegers(total, style);
  if (g.directed()) {
    panel.degree_in = SummarizeIntegers(Degrees(g, DegreeMode::kIn), style);
    panel.degree_out = SummarizeIntegers(Degrees(g, DegreeMode::kOut), style);
    panel.degree_undirected = panel.degree;
    if (g.link_count() > 0) panel.bidirectional_fraction = BidirectionalFraction(g);
  }

  if (const auto& sets = g.bipartite_sets()) {
    panel.bipartite_counts.emplace(
        static_cast<std::int64_t>(sets->first.size()),
        static_cast<std::int64_t>(sets->second.size()));
    if (config.per_partition_degree && !sets->first.empty() &&
        !sets->second.empty()) {
      std::vector<std::int64_t> by_side[2];
      for (std::size_t i = 0; i < total.size(); ++i) {
        by_side[g.side()[i]].push_back(total[i]);
      }
      panel.partition_degree.emplace(SummarizeIntegers(by_side[0], style),
                                     SummarizeIntegers(by_side[1], style));
    }
  }

  panel.clustering = AverageLocalClustering(g);
  panel.connectivity = Connectivity(g, config.diameter_budget, style);
  panel.assortativity = DegreeAssortativity(g);

  if (g.weighted() && g.link_count() > 0) {
    std::vector<double> weights;
    weights.reserve(g.link_count());
    bool any_negative = false;
    bool any_zero = false;
    for (const Graph::Link& l : g.links()) {
      weights.push_back(*l.weight);
      any_negative |= *l.weight < 0;
      any_zero |= *l.weight == 0;
    }
    // Only a graph with negative links is signed; zeros leave sign undefined.
    if (any_negative && !any_zero) {
      panel.signed_negative_fraction = SignedNegativeFraction(weights);
    }
  }
  return panel;
}

}  // namespace netcard
