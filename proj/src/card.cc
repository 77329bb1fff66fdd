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

#include "netcard/card.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <set>

#include "netcard/error.h"
#include "netcard/vocabulary.h"

namespace netcard {
namespace {

const std::string* FindField(const std::vector<Field>& fields,
                             std::string_view name) {
  for (const Field& f : fields) {
    if (f.name == name) return &f.value;
  }
  return nullptr;
}

std::optional<std::string> Lookup(const std::map<std::string, std::string>& m,
                                  std::string_view name) {
  auto it = m.find(std::string(name));
  if (it == m.end()) return std::nullopt;
  return it->second;
}

bool Contains(const std::vector<std::string>& v, std::string_view s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

bool IsSummarized(const DistributionSummary& s) {
  return s.style != SummaryStyle::kValueList;
}

class Findings {
 public:
  void Error(std::string path, std::string message) {
    out_.push_back({std::move(path), std::move(message), Severity::kError});
  }
  void Warning(std::string path, std::string message) {
    out_.push_back({std::move(path), std::move(message), Severity::kWarning});
  }
  std::vector<ValidationError> Take() { return std::move(out_); }

 private:
  std::vector<ValidationError> out_;
};

void CheckUnit(Findings& f, const std::string& path, double v) {
  if (!(v >= 0 && v <= 1)) f.Error(path, "value must lie in [0, 1]");
}

void CheckSummary(Findings& f, const std::string& path,
                  const DistributionSummary& s) {
  if (s.style == SummaryStyle::kValueList) {
    if (s.values.empty() || s.values.size() > kMaxListedValues) {
      f.Error(path, "a value list holds between 1 and 5 values");
    }
    if (!std::is_sorted(s.values.begin(), s.values.end(), std::greater<>())) {
      f.Error(path, "listed values must be sorted largest first");
    }
    return;
  }
  if (!(s.lo <= s.center && s.center <= s.hi)) {
    f.Error(path, "summary range must enclose its center");
  }
}

void ValidateFields(Findings& f, const std::vector<Field>& fields,
                    std::string_view panel,
                    std::span<const std::string_view> vocabulary) {
  std::size_t last = 0;
  bool first = true;
  std::set<std::string> seen;
  for (const Field& field : fields) {
    const std::string path = std::string(panel) + "." + field.name;
    auto it = std::find(vocabulary.begin(), vocabulary.end(), field.name);
    if (it == vocabulary.end()) {
      f.Error(path, "unknown field");
      continue;
    }
    if (!seen.insert(field.name).second) {
      f.Error(path, "field appears more than once");
      continue;
    }
    const auto pos = static_cast<std::size_t>(it - vocabulary.begin());
    if (!first && pos < last) f.Error(path, "field is out of card order");
    last = pos;
    first = false;
  }
}

void ValidateStructure(Findings& f, const Card& card) {
  const StructurePanel& s = card.structure;
  const bool directed = s.kind.directed;
  if (s.n_nodes < 1) f.Error("structure.Number of nodes", "a card needs at least one node");
  if (s.n_links < 0) f.Error("structure.Number of links", "negative link count");
  if (s.n_self_loops < 0 || s.n_self_loops > s.n_links) {
    f.Error("structure.Number of links", "self-loop count exceeds link count");
  }

  CheckSummary(f, "structure.Degree", s.degree);
  if (s.n_nodes >= 1) {
    const double expected = 2.0 * static_cast<double>(s.n_links) /
                            static_cast<double>(s.n_nodes);
    if (s.degree.style == SummaryStyle::kValueList) {
      const double sum =
          std::accumulate(s.degree.values.begin(), s.degree.values.end(), 0.0);
      if (s.degree.values.size() != static_cast<std::size_t>(s.n_nodes) ||
          sum != 2.0 * static_cast<double>(s.n_links)) {
        f.Error("structure.Degree", "degrees do not add up to twice the links");
      }
    } else if (s.degree.style == SummaryStyle::kMeanMinMax &&
               std::abs(s.degree.center - expected) >
                   1e-12 * std::max(1.0, expected)) {
      f.Error("structure.Degree", "average degree differs from 2M/N");
    }
  }

  const bool has_directed_rows = s.degree_in || s.degree_out ||
                                 s.degree_undirected || s.bidirectional_fraction;
  if (directed) {
    if (!s.degree_in || !s.degree_out || !s.degree_undirected) {
      f.Error("structure.Degree", "directed cards need in, out and undirected degree");
    }
    if (!s.bidirectional_fraction && s.n_links > 0) {
      f.Error("structure.Bidirectional links", "missing for a directed card");
    }
  } else if (has_directed_rows) {
    f.Error("structure.Degree", "directed-only rows on an undirected card");
  }
  if (s.degree_in) CheckSummary(f, "structure.Degree (in)", *s.degree_in);
  if (s.degree_out) CheckSummary(f, "structure.Degree (out)", *s.degree_out);
  if (s.degree_undirected) {
    CheckSummary(f, "structure.Degree (undirected)", *s.degree_undirected);
  }
  if (s.bidirectional_fraction) {
    CheckUnit(f, "structure.Bidirectional links", *s.bidirectional_fraction);
  }

  CheckUnit(f, "structure.Clustering", s.clustering);

  const ConnectivityReport& c = s.connectivity;
  if (c.n_components < 1 ||
      (s.n_nodes >= 1 && c.n_components > static_cast<std::size_t>(s.n_nodes))) {
    f.Error("structure.Connected", "component count out of range");
  }
  if (c.is_connected != (c.n_components == 1)) {
    f.Error("structure.Connected", "connectedness contradicts the component count");
  }
  if (!(c.fraction_in_largest > 0 && c.fraction_in_largest <= 1)) {
    f.Error("structure.Connected", "largest-component share must lie in (0, 1]");
  }
  CheckSummary(f, "structure.Component size", c.component_sizes);
  if (c.diameter_skipped) {
    if (c.diameter || c.largest_component_diameter) {
      f.Error("structure.Diameter", "diameter present although marked skipped");
    }
  } else {
    if (c.diameter.has_value() != c.is_connected) {
      f.Error("structure.Diameter", "diameter is reported exactly when connected");
    }
    if (c.largest_component_diameter.has_value() == c.is_connected) {
      f.Error("structure.Largest component's diameter",
              "reported exactly when not connected");
    }
  }
  if ((c.diameter && *c.diameter < 0) ||
      (c.largest_component_diameter && *c.largest_component_diameter < 0)) {
    f.Error("structure.Diameter", "negative diameter");
  }

  if (s.assortativity && !(*s.assortativity >= -1 && *s.assortativity <= 1)) {
    f.Error("structure.Assortativity (degree)", "value must lie in [-1, 1]");
  }
  if (s.signed_negative_fraction) {
    CheckUnit(f, "structure.Negative links", *s.signed_negative_fraction);
  }
  if (s.bipartite_counts) {
    const auto [a, b] = *s.bipartite_counts;
    if (a < 0 || b < 0 || a + b != s.n_nodes) {
      f.Error("structure.Bipartite sets", "set sizes must add up to the node count");
    }
  } else if (card.partition_names || s.partition_degree) {
    f.Error("structure.Bipartite sets", "bipartite details on a non-bipartite card");
  }
  if (s.partition_degree) {
    CheckSummary(f, "structure.Degree by bipartite set", s.partition_degree->first);
    CheckSummary(f, "structure.Degree by bipartite set", s.partition_degree->second);
  }
}

}  // namespace

const std::string* Card::FindOverall(std::string_view name) const {
  return FindField(overall, name);
}

const std::string* Card::FindMetainfo(std::string_view name) const {
  return FindField(metainfo, name);
}

std::string Card::name() const {
  const std::string* n = FindOverall("Name");
  return n ? *n : std::string();
}

std::string_view SeverityName(Severity severity) {
  return severity == Severity::kError ? "error" : "warning";
}

bool HasErrors(std::span<const ValidationError> findings) {
  return std::any_of(findings.begin(), findings.end(), [](const auto& v) {
    return v.severity == Severity::kError;
  });
}

std::pair<std::optional<bool>, std::optional<bool>> ParseKindText(
    std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  std::optional<bool> directed;
  std::optional<bool> weighted;
  if (lower.find("undirected") != std::string::npos) {
    directed = false;
  } else if (lower.find("directed") != std::string::npos) {
    directed = true;
  }
  if (lower.find("unweighted") != std::string::npos) {
    weighted = false;
  } else if (lower.find("weighted") != std::string::npos) {
    weighted = true;
  }
  return {directed, weighted};
}

std::vector<std::string> RequiredFootnotes(const StructurePanel& panel) {
  bool summarized = IsSummarized(panel.degree) ||
                    (!panel.connectivity.is_connected &&
                     IsSummarized(panel.connectivity.component_sizes));
  for (const auto* s : {&panel.degree_in, &panel.degree_out}) {
    if (*s && IsSummarized(**s)) summarized = true;
  }
  if (panel.partition_degree && (IsSummarized(panel.partition_degree->first) ||
                                 IsSummarized(panel.partition_degree->second))) {
    summarized = true;
  }
  SummaryStyle style = SummaryStyle::kMeanMinMax;
  for (const DistributionSummary* s :
       {&panel.degree, &panel.connectivity.component_sizes}) {
    if (IsSummarized(*s)) style = s->style;
  }

  std::vector<std::string> notes;
  if (summarized) {
    notes.emplace_back(style == SummaryStyle::kMedianP5P95 ? kMedianFootnote
                                                           : kMeanFootnote);
  }
  if (panel.kind.directed) notes.emplace_back(kUndirectedFootnote);
  return notes;
}

AssembledCard AssembleCard(const StructurePanel& panel,
                           const MetaSidecar& sidecar, GraphKind kind) {
  if (panel.kind != kind) {
    throw Error(ErrorCode::kKindConflict, "Kind",
                "structure was computed for a " + panel.kind.Label() +
                    " graph, not " + kind.Label());
  }
  AssembledCard out;
  Card& card = out.card;
  card.structure = panel;
  auto omitted = [&](std::string_view name) {
    return Contains(sidecar.omit_rows, name);
  };

  std::vector<std::string> notes;
  if (panel.bipartite_counts) {
    const auto [a, b] = *panel.bipartite_counts;
    std::string note = "Bipartite [" + std::to_string(a);
    if (sidecar.bipartite_labels) {
      const auto& [first, second] = *sidecar.bipartite_labels;
      card.partition_names.emplace(first.name, second.name);
      note += " " + first.name + ", " + std::to_string(b) + " " + second.name;
    } else {
      note += ", " + std::to_string(b);
    }
    notes.push_back(note + "]");
  }
  if (panel.signed_negative_fraction) {
    notes.push_back("Signed [" + FormatPercent(*panel.signed_negative_fraction, 1) +
                    "% links are negative]");
  }

  for (std::string_view name : kOverallFields) {
    if (omitted(name)) continue;
    std::optional<std::string> authored = Lookup(sidecar.overall, name);
    std::string value = authored.value_or("");
    if (name == "Kind") {
      if (authored) {
        auto [directed, weighted] = ParseKindText(*authored);
        if (directed != kind.directed || weighted != kind.weighted) {
          throw Error(ErrorCode::kKindConflict, "Kind",
                      "Kind '" + *authored + "' does not describe a " +
                          kind.Label() + " graph");
        }
      } else {
        value = kind.Label();
      }
    } else if (name == kLinkWeightsField) {
      if (!kind.weighted && !authored) continue;
      if (!kind.weighted) {
        out.issues.push_back({"overall.Link weights are",
                              "weights row on an unweighted card",
                              Severity::kError});
      } else if (value.empty()) {
        out.issues.push_back({"overall.Link weights are",
                              "weighted card does not say what weights are",
                              Severity::kWarning});
      }
    } else if (name == "Considerations" && !notes.empty()) {
      std::string joined;
      for (const std::string& n : notes) {
        joined += joined.empty() ? n : "; " + n;
      }
      value = value.empty() ? joined : joined + "; " + value;
    }
    card.overall.push_back({std::string(name), std::move(value)});
  }

  for (std::string_view name : kMetainfoFields) {
    if (omitted(name)) continue;
    card.metainfo.push_back(
        {std::string(name), Lookup(sidecar.metainfo, name).value_or("")});
  }
  card.footnotes = RequiredFootnotes(panel);
  return out;
}

std::vector<ValidationError> ValidateCard(const Card& card) {
  Findings f;
  for (const UnknownField& u : card.unknown_fields) {
    f.Error(u.panel.empty() ? u.name : u.panel + "." + u.name, "unknown field");
  }

  ValidateFields(f, card.overall, "overall", kOverallFields);
  ValidateFields(f, card.metainfo, "metainfo", kMetainfoFields);

  const std::string* name = card.FindOverall("Name");
  if (!name) {
    f.Error("overall.Name", "required row is missing");
  } else if (name->empty()) {
    f.Warning("overall.Name", "card has no name");
  }
  const GraphKind kind = card.structure.kind;
  if (const std::string* kind_row = card.FindOverall("Kind")) {
    auto [directed, weighted] = ParseKindText(*kind_row);
    if (directed != kind.directed || weighted != kind.weighted) {
      f.Error("overall.Kind", "'" + *kind_row + "' does not describe a " +
                                  kind.Label() + " graph");
    }
  } else {
    f.Error("overall.Kind", "required row is missing");
  }
  const std::string* weights = card.FindOverall(kLinkWeightsField);
  if (!kind.weighted && weights) {
    f.Error("overall.Link weights are", "weights row on an unweighted card");
  } else if (kind.weighted && (!weights || weights->empty())) {
    f.Warning("overall.Link weights are",
              "weighted card does not say what weights are");
  }

  ValidateStructure(f, card);

  for (const std::string& note : RequiredFootnotes(card.structure)) {
    if (!Contains(card.footnotes, note)) {
      if (note == kUndirectedFootnote) {
        f.Warning("footnotes", "missing footnote '" + note + "'");
      } else {
        f.Error("footnotes", "missing footnote '" + note + "'");
      }
    }
  }
  return f.Take();
}

bool Multicard::IsShared(std::string_view label) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].label == label) return shared[i];
  }
  return false;
}

}  // namespace netcard
