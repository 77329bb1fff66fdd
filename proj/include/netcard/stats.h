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

#ifndef NETCARD_STATS_H_
#define NETCARD_STATS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "netcard/graph.h"

namespace netcard {

enum class SummaryStyle { kValueList, kMeanMinMax, kMedianP5P95 };

// Distributions with five or fewer observations are listed outright,
// largest first. Larger ones are reduced to a center and a range.
struct DistributionSummary {
  SummaryStyle style = SummaryStyle::kValueList;
  std::vector<double> values;  // kValueList only
  double center = 0;
  double lo = 0;
  double hi = 0;

  friend bool operator==(const DistributionSummary&,
                         const DistributionSummary&) = default;
};

inline constexpr std::size_t kMaxListedValues = 5;

// `preference` must be kMeanMinMax or kMedianP5P95. Percentiles interpolate
// linearly between closest ranks. Throws kEmptyDistribution.
DistributionSummary SummarizeDistribution(std::span<const double> values,
                                          SummaryStyle preference);

// p in [0, 1], over sorted data.
double Percentile(std::span<const double> sorted, double p);

struct ConnectivityReport {
  bool is_connected = true;
  std::size_t n_components = 1;
  double fraction_in_largest = 1;
  DistributionSummary component_sizes;
  std::optional<std::int64_t> diameter;
  std::optional<std::int64_t> largest_component_diameter;
  // The graph exceeded the diameter budget; both diameters are absent.
  bool diameter_skipped = false;

  friend bool operator==(const ConnectivityReport&,
                         const ConnectivityReport&) = default;
};

inline constexpr std::size_t kDefaultDiameterBudget = 100000;

// Mean local clustering over every node of the simple undirected skeleton;
// nodes of degree below two contribute zero. Throws kEmptyGraph.
double AverageLocalClustering(const Graph& g);

// Weak components and exact breadth-first diameter. Diameters are skipped
// when the graph has more than `diameter_budget` nodes. Throws kEmptyGraph.
ConnectivityReport Connectivity(
    const Graph& g, std::size_t diameter_budget = kDefaultDiameterBudget,
    SummaryStyle size_style = SummaryStyle::kMeanMinMax);

// Component id per node (ids in order of first member) and the number of
// components, on the undirected skeleton.
std::pair<std::vector<std::uint32_t>, std::size_t> WeakComponents(const Graph& g);

// Pearson correlation of degrees at link ends, self-loops excluded.
// Undirected links count in both orientations; directed links pair the
// source's out-degree with the target's in-degree. Absent when undefined.
std::optional<double> DegreeAssortativity(const Graph& g);

// Share of directed links whose reverse link exists (self-loops included).
// Throws kNotDirected and kEmptyGraph (no links).
double BidirectionalFraction(const Graph& g);

// Share of strictly negative weights. Throws kZeroWeight and
// kEmptyDistribution.
double SignedNegativeFraction(std::span<const double> weights);

struct StructureConfig {
  SummaryStyle summary_style = SummaryStyle::kMeanMinMax;
  std::size_t diameter_budget = kDefaultDiameterBudget;
  // Also summarize degrees of each bipartite set separately.
  bool per_partition_degree = false;
};

struct StructurePanel {
  GraphKind kind;
  std::int64_t n_nodes = 0;
  std::int64_t n_links = 0;
  std::int64_t n_self_loops = 0;
  // Total degree (in + out for directed graphs).
  DistributionSummary degree;
  std::optional<DistributionSummary> degree_in;
  std::optional<DistributionSummary> degree_out;
  std::optional<DistributionSummary> degree_undirected;
  std::optional<double> bidirectional_fraction;
  std::optional<std::pair<DistributionSummary, DistributionSummary>>
      partition_degree;
  double clustering = 0;
  ConnectivityReport connectivity;
  std::optional<double> assortativity;
  std::optional<double> signed_negative_fraction;
  std::optional<std::pair<std::int64_t, std::int64_t>> bipartite_counts;

  friend bool operator==(const StructurePanel&, const StructurePanel&) = default;
};

// Throws kEmptyGraph for a graph without nodes.
StructurePanel ComputeStructurePanel(const Graph& g,
                                     const StructureConfig& config = {});

}  // namespace netcard

#endif  // NETCARD_STATS_H_
