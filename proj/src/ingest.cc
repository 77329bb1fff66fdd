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

#include <charconv>
#include <string>
#include <utility>

#include <json.hpp>

#include "netcard/error.h"
#include "netcard/vocabulary.h"

namespace netcard {
namespace {

using json = nlohmann::json;

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsSpace(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> SplitFields(std::string_view line,
                                          Delimiter delimiter) {
  std::vector<std::string_view> fields;
  if (delimiter == Delimiter::kWhitespace) {
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && IsSpace(line[i])) ++i;
      std::size_t start = i;
      while (i < line.size() && !IsSpace(line[i])) ++i;
      if (i > start) fields.push_back(line.substr(start, i - start));
    }
    return fields;
  }
  const char sep = delimiter == Delimiter::kComma ? ',' : '\t';
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(sep, start);
    std::string_view field =
        line.substr(start, pos == std::string_view::npos ? pos : pos - start);
    fields.push_back(Trim(field));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return fields;
}

std::optional<double> ParseNumber(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  double value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

[[noreturn]] void Malformed(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::kDocumentMalformed, path.empty() ? "/" : path,
              what + " at " + (path.empty() ? "/" : path));
}

json ParseJson(std::string_view text) {
  if (auto bad = FindInvalidUtf8(text)) {
    throw Error(ErrorCode::kDocumentMalformed, "/",
                "invalid UTF-8 at byte " + std::to_string(*bad));
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kDocumentMalformed, "/",
                std::string("not a JSON document: ") + e.what());
  }
}

NodeId NodeIdFrom(const json& v, const std::string& path) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  Malformed(path, "node id must be a string or an integer");
}

std::vector<NodeId> NodeIdList(const json& v, const std::string& path) {
  if (!v.is_array()) Malformed(path, "expected an array of node ids");
  std::vector<NodeId> ids;
  ids.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    ids.push_back(NodeIdFrom(v[i], path + "/" + std::to_string(i)));
  }
  return ids;
}

bool RequireBool(const json& doc, const char* key) {
  const std::string path = std::string("/") + key;
  if (!doc.contains(key)) Malformed(path, "missing required key");
  if (!doc[key].is_boolean()) Malformed(path, "expected a boolean");
  return doc[key].get<bool>();
}

std::map<std::string, std::string> FieldMap(const json& v, const char* panel,
                                            bool (*known)(std::string_view)) {
  const std::string path = std::string("/") + panel;
  if (!v.is_object()) Malformed(path, "expected an object");
  std::map<std::string, std::string> out;
  for (const auto& [key, value] : v.items()) {
    if (!known(key)) {
      throw Error(ErrorCode::kUnknownField, key,
                  "'" + key + "' is not a " + panel + " field");
    }
    if (!value.is_string()) Malformed(path + "/" + key, "expected a string");
    out.emplace(key, value.get<std::string>());
  }
  return out;
}

BipartiteLabel LabelFrom(const json& v, const std::string& path) {
  if (!v.is_object()) Malformed(path, "expected an object");
  BipartiteLabel label;
  for (const auto& [key, value] : v.items()) {
    if (key == "name") {
      if (!value.is_string()) Malformed(path + "/name", "expected a string");
      label.name = value.get<std::string>();
    } else if (key == "nodes") {
      label.nodes = NodeIdList(value, path + "/nodes");
    } else {
      throw Error(ErrorCode::kUnknownField, key,
                  "'" + key + "' is not a bipartite label field");
    }
  }
  if (!v.contains("name")) Malformed(path + "/name", "missing required key");
  if (!v.contains("nodes")) Malformed(path + "/nodes", "missing required key");
  return label;
}

}  // namespace

std::optional<std::size_t> FindInvalidUtf8(std::string_view text) {
  const auto* s = reinterpret_cast<const unsigned char*>(text.data());
  const std::size_t n = text.size();
  std::size_t i = 0;
  while (i < n) {
    const unsigned char c = s[i];
    std::size_t len = 0;
    std::uint32_t cp = 0;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      return i;
    }
    if (i + len > n) return i;
    for (std::size_t k = 1; k < len; ++k) {
      if ((s[i + k] & 0xC0) != 0x80) return i;
      cp = (cp << 6) | (s[i + k] & 0x3F);
    }
    static constexpr std::uint32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      return i;
    }
    i += len;
  }
  return std::nullopt;
}

Graph ParseEdgeList(std::string_view text, const EdgeListOptions& options,
                    std::vector<std::string>* warnings) {
  if (auto bad = FindInvalidUtf8(text)) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < *bad; ++i) line += text[i] == '\n';
    throw Error(ErrorCode::kLineMalformed, std::to_string(line),
                "line " + std::to_string(line) + ": invalid UTF-8");
  }

  std::vector<LinkSpec> links;
  std::size_t dropped_weights = 0;
  std::size_t line_number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_number;

    std::string_view content = Trim(line);
    if (content.empty()) continue;
    if (!options.comment_prefix.empty() &&
        content.starts_with(options.comment_prefix)) {
      continue;
    }

    auto malformed = [&](const std::string& why) {
      const std::string n = std::to_string(line_number);
      return Error(ErrorCode::kLineMalformed, n, "line " + n + ": " + why);
    };
    std::vector<std::string_view> fields = SplitFields(content, options.delimiter);
    if (fields.size() < 2 || fields.size() > 3) {
      throw malformed("expected 2 or 3 columns, found " +
                      std::to_string(fields.size()));
    }
    if (fields[0].empty() || fields[1].empty()) {
      throw malformed("empty node id");
    }
    LinkSpec link{std::string(fields[0]), std::string(fields[1]), std::nullopt};
    if (fields.size() == 3) {
      std::optional<double> weight = ParseNumber(fields[2]);
      if (!weight) {
        throw malformed("weight '" + std::string(fields[2]) + "' is not a number");
      }
      if (options.has_weight_column) {
        link.weight = weight;
      } else {
        ++dropped_weights;
      }
    } else if (options.has_weight_column) {
      throw malformed("missing weight column");
    }
    links.push_back(std::move(link));
  }

  if (links.empty()) {
    throw Error(ErrorCode::kEmptyInput, "", "edge list contains no links");
  }
  if (dropped_weights > 0 && warnings != nullptr) {
    warnings->push_back("ignored the weight column on " +
                        std::to_string(dropped_weights) +
                        " line(s); the graph is unweighted");
  }
  GraphKind kind{options.directed, options.has_weight_column};
  return BuildGraph(kind, {}, links, std::nullopt,
                    BuildOptions{options.strict_duplicates});
}

Graph ParseNodeLink(std::string_view text, BuildOptions options) {
  json doc = ParseJson(text);
  if (!doc.is_object()) Malformed("", "expected an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "directed" && key != "weighted" && key != "nodes" &&
        key != "links" && key != "bipartite") {
      Malformed("/" + key, "unexpected key");
    }
  }

  GraphKind kind{RequireBool(doc, "directed"), RequireBool(doc, "weighted")};
  if (!doc.contains("nodes")) Malformed("/nodes", "missing required key");
  if (!doc.contains("links")) Malformed("/links", "missing required key");
  std::vector<NodeId> nodes = NodeIdList(doc["nodes"], "/nodes");

  const json& raw_links = doc["links"];
  if (!raw_links.is_array()) Malformed("/links", "expected an array");
  std::vector<LinkSpec> links;
  links.reserve(raw_links.size());
  for (std::size_t i = 0; i < raw_links.size(); ++i) {
    const std::string path = "/links/" + std::to_string(i);
    const json& entry = raw_links[i];
    if (!entry.is_array() || entry.size() < 2 || entry.size() > 3) {
      Malformed(path, "expected [source, target] or [source, target, weight]");
    }
    LinkSpec link{NodeIdFrom(entry[0], path + "/0"),
                  NodeIdFrom(entry[1], path + "/1"), std::nullopt};
    if (entry.size() == 3) {
      if (!entry[2].is_number()) Malformed(path + "/2", "expected a number");
      link.weight = entry[2].get<double>();
    }
    links.push_back(std::move(link));
  }

  std::optional<BipartiteSets> bipartite;
  if (doc.contains("bipartite")) {
    const json& sets = doc["bipartite"];
    if (!sets.is_array() || sets.size() != 2) {
      Malformed("/bipartite", "expected two node id arrays");
    }
    bipartite = BipartiteSets{NodeIdList(sets[0], "/bipartite/0"),
                              NodeIdList(sets[1], "/bipartite/1")};
  }
  if (nodes.empty() && links.empty()) {
    throw Error(ErrorCode::kEmptyInput, "", "document has no nodes or links");
  }
  return BuildGraph(kind, nodes, links, std::move(bipartite), options);
}

MetaSidecar ParseMetaSidecar(std::string_view text) {
  json doc = ParseJson(text);
  if (!doc.is_object()) Malformed("", "expected an object");
  MetaSidecar sidecar;
  for (const auto& [key, value] : doc.items()) {
    if (key == "overall") {
      sidecar.overall = FieldMap(value, "overall", &IsOverallField);
    } else if (key == "metainfo") {
      sidecar.metainfo = FieldMap(value, "metainfo", &IsMetainfoField);
    } else if (key == "bipartite_labels") {
      if (!value.is_array() || value.size() != 2) {
        Malformed("/bipartite_labels", "expected two labelled node sets");
      }
      sidecar.bipartite_labels.emplace(
          LabelFrom(value[0], "/bipartite_labels/0"),
          LabelFrom(value[1], "/bipartite_labels/1"));
    } else if (key == "omit_rows") {
      if (!value.is_array()) Malformed("/omit_rows", "expected an array");
      for (std::size_t i = 0; i < value.size(); ++i) {
        const std::string path = "/omit_rows/" + std::to_string(i);
        if (!value[i].is_string()) Malformed(path, "expected a string");
        std::string row = value[i].get<std::string>();
        if (row == "Name" || row == "Kind") {
          Malformed(path, "'" + row + "' cannot be omitted");
        }
        if (!IsOverallField(row) && !IsMetainfoField(row)) {
          throw Error(ErrorCode::kUnknownField, row,
                      "'" + row + "' is not an authored card field");
        }
        sidecar.omit_rows.push_back(std::move(row));
      }
    } else {
      throw Error(ErrorCode::kUnknownField, key,
                  "'" + key + "' is not a sidecar section");
    }
  }
  return sidecar;
}

}  // namespace netcard
