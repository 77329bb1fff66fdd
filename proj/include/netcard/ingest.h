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

#ifndef NETCARD_INGEST_H_
#define NETCARD_INGEST_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "netcard/graph.h"

namespace netcard {

enum class Delimiter { kWhitespace, kComma, kTab };

struct EdgeListOptions {
  Delimiter delimiter = Delimiter::kWhitespace;
  std::string comment_prefix = "#";
  // A third column holds link weights and the graph is weighted. Without
  // it, a third column is dropped with a warning.
  bool has_weight_column = false;
  bool directed = false;
  bool strict_duplicates = false;
};

// Parses one link per non-blank, non-comment line. Warnings (such as dropped
// weight columns) are appended to `warnings` when given.
//
// Throws kLineMalformed (detail is the 1-based line number) and kEmptyInput,
// plus the BuildGraph errors.
Graph ParseEdgeList(std::string_view text, const EdgeListOptions& options,
                    std::vector<std::string>* warnings = nullptr);

// Parses the canonical node-link JSON document:
//
//   {"directed": false, "weighted": true,
//    "nodes": ["a", "b", "c"],
//    "links": [["a", "b", 2.5], ["b", "c", 1]],
//    "bipartite": [["a", "c"], ["b"]]}
//
// "bipartite" is optional. Throws kDocumentMalformed with a JSON pointer to
// the offending element, plus the BuildGraph errors.
Graph ParseNodeLink(std::string_view text, BuildOptions options = {});

struct BipartiteLabel {
  std::string name;
  std::vector<NodeId> nodes;

  friend bool operator==(const BipartiteLabel&, const BipartiteLabel&) = default;
};

// User-authored card fields. Keys are the card's own row labels.
struct MetaSidecar {
  std::map<std::string, std::string> overall;
  std::map<std::string, std::string> metainfo;
  std::optional<std::pair<BipartiteLabel, BipartiteLabel>> bipartite_labels;
  // Authored rows to leave out of the card entirely (rather than show empty).
  std::vector<std::string> omit_rows;

  friend bool operator==(const MetaSidecar&, const MetaSidecar&) = default;
};

// Throws kUnknownField (detail is the field name) for keys outside the card
// vocabulary and kDocumentMalformed for structural problems.
MetaSidecar ParseMetaSidecar(std::string_view text);

// UTF-8 well-formedness check; returns the byte offset of the first invalid
// sequence, if any.
std::optional<std::size_t> FindInvalidUtf8(std::string_view text);

}  // namespace netcard

#endif  // NETCARD_INGEST_H_
