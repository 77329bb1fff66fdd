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

#include <charconv>
#include <set>

#include <json.hpp>

#include "netcard/error.h"
#include "netcard/ingest.h"
#include "netcard/render.h"
#include "netcard/vocabulary.h"

namespace netcard {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kStructureKeys[] = {
    "kind",
    "Number of nodes",
    "Number of links",
    "Self-loops",
    "Bidirectional links",
    "Degree",
    "Degree (in)",
    "Degree (out)",
    "Degree (undirected)",
    "Degree by bipartite set",
    "Clustering",
    "Connected",
    "Component size",
    "Diameter",
    "Largest component's diameter",
    "Assortativity (degree)",
    "Negative links",
    "Bipartite sets",
};

bool IsStructureKey(std::string_view key) {
  for (const char* k : kStructureKeys) {
    if (key == k) return true;
  }
  return false;
}

ordered_json SummaryJson(const DistributionSummary& s) {
  ordered_json out;
  switch (s.style) {
    case SummaryStyle::kValueList:
      out["style"] = "value_list";
      out["values"] = s.values;
      break;
    case SummaryStyle::kMeanMinMax:
      out["style"] = "mean_min_max";
      out["mean"] = s.center;
      out["min"] = s.lo;
      out["max"] = s.hi;
      break;
    case SummaryStyle::kMedianP5P95:
      out["style"] = "median_p5_p95";
      out["median"] = s.center;
      out["p5"] = s.lo;
      out["p95"] = s.hi;
      break;
  }
  return out;
}

void AppendUnknown(ordered_json& target, const Card& card, std::string_view panel) {
  for (const UnknownField& u : card.unknown_fields) {
    if (u.panel == panel) target[u.name] = ordered_json::parse(u.raw_json);
  }
}

// ---- reading ---------------------------------------------------------------

[[noreturn]] void Violation(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::kSchemaViolation, path, path + ": " + what);
}

std::string Escape(std::string_view key) {
  std::string out;
  for (char c : key) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

const ordered_json& Require(const ordered_json& obj, const char* key,
                            const std::string& path) {
  if (!obj.contains(key)) Violation(path + "/" + Escape(key), "missing required key");
  return obj[key];
}

double Real(const ordered_json& v, const std::string& path) {
  if (!v.is_number()) Violation(path, "expected a number");
  return v.get<double>();
}

std::int64_t Int(const ordered_json& v, const std::string& path) {
  if (!v.is_number_integer()) Violation(path, "expected an integer");
  return v.get<std::int64_t>();
}

bool Bool(const ordered_json& v, const std::string& path) {
  if (!v.is_boolean()) Violation(path, "expected a boolean");
  return v.get<bool>();
}

DistributionSummary SummaryFrom(const ordered_json& v, const std::string& path) {
  if (!v.is_object()) Violation(path, "expected a distribution summary object");
  const ordered_json& style = Require(v, "style", path);
  if (!style.is_string()) Violation(path + "/style", "expected a string");
  DistributionSummary s;
  const std::string name = style.get<std::string>();
  auto range = [&](const char* center, const char* lo, const char* hi) {
    s.center = Real(Require(v, center, path), path + "/" + center);
    s.lo = Real(Require(v, lo, path), path + "/" + lo);
    s.hi = Real(Require(v, hi, path), path + "/" + hi);
  };
  if (name == "value_list") {
    s.style = SummaryStyle::kValueList;
    const ordered_json& values = Require(v, "values", path);
    if (!values.is_array()) Violation(path + "/values", "expected an array");
    for (std::size_t i = 0; i < values.size(); ++i) {
      s.values.push_back(Real(values[i], path + "/values/" + std::to_string(i)));
    }
  } else if (name == "mean_min_max") {
    s.style = SummaryStyle::kMeanMinMax;
    range("mean", "min", "max");
  } else if (name == "median_p5_p95") {
    s.style = SummaryStyle::kMedianP5P95;
    range("median", "p5", "p95");
  } else {
    Violation(path + "/style", "unknown summary style '" + name + "'");
  }
  return s;
}

std::vector<Field> FieldsFrom(const ordered_json& obj, const char* panel,
                              std::span<const std::string_view> vocabulary,
                              std::vector<UnknownField>& unknown) {
  const std::string path = std::string("/") + panel;
  if (!obj.is_object()) Violation(path, "expected an object");
  std::vector<Field> fields;
  for (std::string_view name : vocabulary) {
    if (!obj.contains(std::string(name))) continue;
    const ordered_json& v = obj[std::string(name)];
    if (!v.is_string()) Violation(path + "/" + Escape(name), "expected a string");
    fields.push_back({std::string(name), v.get<std::string>()});
  }
  for (const auto& [key, value] : obj.items()) {
    if (std::find(vocabulary.begin(), vocabulary.end(), key) == vocabulary.end()) {
      unknown.push_back({panel, key, value.dump()});
    }
  }
  return fields;
}

void CheckSchemaVersion(const ordered_json& doc) {
  const ordered_json& v = Require(doc, "schema_version", "");
  if (!v.is_string()) Violation("/schema_version", "expected a version string");
  const std::string text = v.get<std::string>();
  const std::size_t dot = text.find('.');
  unsigned major = 0;
  unsigned minor = 0;
  auto parse = [](std::string_view s, unsigned& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return !s.empty() && ec == std::errc() && ptr == s.data() + s.size();
  };
  if (dot == std::string::npos || !parse(std::string_view(text).substr(0, dot), major) ||
      !parse(std::string_view(text).substr(dot + 1), minor)) {
    Violation("/schema_version", "malformed version '" + text + "'");
  }
  unsigned supported = 0;
  parse(kSchemaVersion.substr(0, kSchemaVersion.find('.')), supported);
  if (major != supported) {
    Violation("/schema_version",
              "unsupported schema version " + text + " (this tool reads " +
                  std::string(kSchemaVersion) + ")");
  }
}

StructurePanel StructureFrom(const ordered_json& obj, Card& card) {
  const std::string path = "/structure";
  if (!obj.is_object()) Violation(path, "expected an object");
  auto at = [&](const char* key) { return path + "/" + Escape(key); };
  StructurePanel s;

  const ordered_json& kind = Require(obj, "kind", path);
  if (!kind.is_object()) Violation(at("kind"), "expected an object");
  s.kind.directed = Bool(Require(kind, "directed", at("kind")), at("kind") + "/directed");
  s.kind.weighted = Bool(Require(kind, "weighted", at("kind")), at("kind") + "/weighted");

  s.n_nodes = Int(Require(obj, "Number of nodes", path), at("Number of nodes"));
  s.n_links = Int(Require(obj, "Number of links", path), at("Number of links"));
  s.n_self_loops = Int(Require(obj, "Self-loops", path), at("Self-loops"));
  if (obj.contains("Bidirectional links")) {
    s.bidirectional_fraction = Real(obj["Bidirectional links"], at("Bidirectional links"));
  }
  s.degree = SummaryFrom(Require(obj, "Degree", path), at("Degree"));
  auto optional_summary = [&](const char* key, std::optional<DistributionSummary>& out) {
    if (obj.contains(key)) out = SummaryFrom(obj[key], at(key));
  };
  optional_summary("Degree (in)", s.degree_in);
  optional_summary("Degree (out)", s.degree_out);
  optional_summary("Degree (undirected)", s.degree_undirected);
  if (obj.contains("Degree by bipartite set")) {
    const ordered_json& v = obj["Degree by bipartite set"];
    const std::string p = at("Degree by bipartite set");
    if (!v.is_array() || v.size() != 2) Violation(p, "expected two summaries");
    s.partition_degree.emplace(SummaryFrom(v[0], p + "/0"), SummaryFrom(v[1], p + "/1"));
  }
  s.clustering = Real(Require(obj, "Clustering", path), at("Clustering"));

  const ordered_json& conn = Require(obj, "Connected", path);
  const std::string cp = at("Connected");
  if (!conn.is_object()) Violation(cp, "expected an object");
  ConnectivityReport& c = s.connectivity;
  c.is_connected = Bool(Require(conn, "is_connected", cp), cp + "/is_connected");
  const std::int64_t components = Int(Require(conn, "components", cp), cp + "/components");
  if (components < 0) Violation(cp + "/components", "negative component count");
  c.n_components = static_cast<std::size_t>(components);
  c.fraction_in_largest =
      Real(Require(conn, "fraction_in_largest", cp), cp + "/fraction_in_largest");
  c.diameter_skipped =
      Bool(Require(conn, "diameter_skipped", cp), cp + "/diameter_skipped");
  c.component_sizes = SummaryFrom(Require(obj, "Component size", path), at("Component size"));
  if (obj.contains("Diameter")) c.diameter = Int(obj["Diameter"], at("Diameter"));
  if (obj.contains("Largest component's diameter")) {
    c.largest_component_diameter =
        Int(obj["Largest component's diameter"], at("Largest component's diameter"));
  }

  const ordered_json& assort = Require(obj, "Assortativity (degree)", path);
  if (!assort.is_null()) s.assortativity = Real(assort, at("Assortativity (degree)"));
  if (obj.contains("Negative links")) {
    s.signed_negative_fraction = Real(obj["Negative links"], at("Negative links"));
  }
  if (obj.contains("Bipartite sets")) {
    const ordered_json& b = obj["Bipartite sets"];
    const std::string bp = at("Bipartite sets");
    if (!b.is_object()) Violation(bp, "expected an object");
    const ordered_json& sizes = Require(b, "sizes", bp);
    if (!sizes.is_array() || sizes.size() != 2) Violation(bp + "/sizes", "expected two sizes");
    s.bipartite_counts.emplace(Int(sizes[0], bp + "/sizes/0"), Int(sizes[1], bp + "/sizes/1"));
    if (b.contains("names")) {
      const ordered_json& names = b["names"];
      if (!names.is_array() || names.size() != 2 || !names[0].is_string() ||
          !names[1].is_string()) {
        Violation(bp + "/names", "expected two strings");
      }
      card.partition_names.emplace(names[0].get<std::string>(),
                                   names[1].get<std::string>());
    }
  }

  for (const auto& [key, value] : obj.items()) {
    if (!IsStructureKey(key)) card.unknown_fields.push_back({"structure", key, value.dump()});
  }
  return s;
}

}  // namespace

std::string WriteCardJson(const Card& card) {
  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;

  ordered_json overall = ordered_json::object();
  for (const Field& f : card.overall) overall[f.name] = f.value;
  AppendUnknown(overall, card, "overall");
  doc["overall"] = std::move(overall);

  const StructurePanel& s = card.structure;
  ordered_json st = ordered_json::object();
  st["kind"] = {{"directed", s.kind.directed}, {"weighted", s.kind.weighted}};
  st["Number of nodes"] = s.n_nodes;
  st["Number of links"] = s.n_links;
  st["Self-loops"] = s.n_self_loops;
  if (s.bidirectional_fraction) st["Bidirectional links"] = *s.bidirectional_fraction;
  st["Degree"] = SummaryJson(s.degree);
  if (s.degree_in) st["Degree (in)"] = SummaryJson(*s.degree_in);
  if (s.degree_out) st["Degree (out)"] = SummaryJson(*s.degree_out);
  if (s.degree_undirected) st["Degree (undirected)"] = SummaryJson(*s.degree_undirected);
  if (s.partition_degree) {
    st["Degree by bipartite set"] = {SummaryJson(s.partition_degree->first),
                                     SummaryJson(s.partition_degree->second)};
  }
  st["Clustering"] = s.clustering;
  const ConnectivityReport& c = s.connectivity;
  ordered_json conn;
  conn["is_connected"] = c.is_connected;
  conn["components"] = c.n_components;
  conn["fraction_in_largest"] = c.fraction_in_largest;
  conn["diameter_skipped"] = c.diameter_skipped;
  st["Connected"] = std::move(conn);
  st["Component size"] = SummaryJson(c.component_sizes);
  if (c.diameter) st["Diameter"] = *c.diameter;
  if (c.largest_component_diameter) {
    st["Largest component's diameter"] = *c.largest_component_diameter;
  }
  st["Assortativity (degree)"] =
      s.assortativity ? ordered_json(*s.assortativity) : ordered_json(nullptr);
  if (s.signed_negative_fraction) st["Negative links"] = *s.signed_negative_fraction;
  if (s.bipartite_counts) {
    ordered_json b;
    b["sizes"] = {s.bipartite_counts->first, s.bipartite_counts->second};
    if (card.partition_names) {
      b["names"] = ordered_json::array(
          {card.partition_names->first, card.partition_names->second});
    }
    st["Bipartite sets"] = std::move(b);
  }
  AppendUnknown(st, card, "structure");
  doc["structure"] = std::move(st);

  ordered_json meta = ordered_json::object();
  for (const Field& f : card.metainfo) meta[f.name] = f.value;
  AppendUnknown(meta, card, "metainfo");
  doc["metainfo"] = std::move(meta);

  doc["footnotes"] = card.footnotes;
  AppendUnknown(doc, card, "");
  return doc.dump(2) + "\n";
}

Card ReadCardJson(std::string_view text) {
  if (auto bad = FindInvalidUtf8(text)) {
    Violation("/", "invalid UTF-8 at byte " + std::to_string(*bad));
  }
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw Error(ErrorCode::kSchemaViolation, "/",
                std::string("/: not a JSON document: ") + e.what());
  }
  if (!doc.is_object()) Violation("/", "expected an object");
  CheckSchemaVersion(doc);

  Card card;
  card.overall = FieldsFrom(Require(doc, "overall", ""), "overall", kOverallFields,
                            card.unknown_fields);
  card.structure = StructureFrom(Require(doc, "structure", ""), card);
  card.metainfo = FieldsFrom(Require(doc, "metainfo", ""), "metainfo",
                             kMetainfoFields, card.unknown_fields);
  const ordered_json& notes = Require(doc, "footnotes", "");
  if (!notes.is_array()) Violation("/footnotes", "expected an array");
  for (std::size_t i = 0; i < notes.size(); ++i) {
    if (!notes[i].is_string()) {
      Violation("/footnotes/" + std::to_string(i), "expected a string");
    }
    card.footnotes.push_back(notes[i].get<std::string>());
  }
  static const std::set<std::string> kTopLevel = {
      "schema_version", "overall", "structure", "metainfo", "footnotes"};
  for (const auto& [key, value] : doc.items()) {
    if (!kTopLevel.contains(key)) card.unknown_fields.push_back({"", key, value.dump()});
  }
  return card;
}

std::string WriteNodeLink(const Graph& g) {
  ordered_json doc;
  doc["directed"] = g.directed();
  doc["weighted"] = g.weighted();
  doc["nodes"] = std::vector<std::string>(g.nodes().begin(), g.nodes().end());
  ordered_json links = ordered_json::array();
  for (const Graph::Link& l : g.links()) {
    ordered_json entry = {g.node(l.source), g.node(l.target)};
    if (l.weight) entry.push_back(*l.weight);
    links.push_back(std::move(entry));
  }
  doc["links"] = std::move(links);
  if (const auto& sets = g.bipartite_sets()) {
    doc["bipartite"] = ordered_json::array({ordered_json(sets->first),
                                             ordered_json(sets->second)});
  }
  return doc.dump(2) + "\n";
}

}  // namespace netcard
