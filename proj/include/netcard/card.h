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

#ifndef NETCARD_CARD_H_
#define NETCARD_CARD_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "netcard/graph.h"
#include "netcard/ingest.h"
#include "netcard/stats.h"

namespace netcard {

inline constexpr std::string_view kSchemaVersion = "1.0";

inline constexpr std::string_view kMeanFootnote =
    "*Distributions summarized with average [min, max].";
inline constexpr std::string_view kMedianFootnote =
    "*Distributions summarized with median [5th percentile, 95th percentile].";
inline constexpr std::string_view kUndirectedFootnote = "+Undirected.";

struct Field {
  std::string name;
  std::string value;

  friend bool operator==(const Field&, const Field&) = default;
};

// A key the card vocabulary does not know, kept verbatim so it can be
// reported by validation and written back unchanged. `panel` is "overall",
// "structure", "metainfo" or empty for a top-level key.
struct UnknownField {
  std::string panel;
  std::string name;
  std::string raw_json;

  friend bool operator==(const UnknownField&, const UnknownField&) = default;
};

// Three-panel network card. Authored rows are kept in card order; a row
// that is absent was deliberately omitted, an empty value is shown as an
// empty row.
struct Card {
  std::vector<Field> overall;
  StructurePanel structure;
  std::optional<std::pair<std::string, std::string>> partition_names;
  std::vector<Field> metainfo;
  std::vector<std::string> footnotes;
  std::vector<UnknownField> unknown_fields;

  const std::string* FindOverall(std::string_view name) const;
  const std::string* FindMetainfo(std::string_view name) const;
  // The Name row, or empty.
  std::string name() const;

  friend bool operator==(const Card&, const Card&) = default;
};

enum class Severity { kError, kWarning };

struct ValidationError {
  std::string path;  // dotted: "overall.Kind", "structure.Hubs"
  std::string message;
  Severity severity = Severity::kError;

  friend bool operator==(const ValidationError&, const ValidationError&) = default;
};

std::string_view SeverityName(Severity severity);
bool HasErrors(std::span<const ValidationError> findings);

struct AssembledCard {
  Card card;
  std::vector<ValidationError> issues;
};

// Merges computed structure with authored fields. Kind is filled from
// `kind` unless the sidecar overrides it; bipartite counts and the negative
// link share are prepended to Considerations. Throws kKindConflict when an
// override contradicts `kind`.
AssembledCard AssembleCard(const StructurePanel& panel,
                           const MetaSidecar& sidecar, GraphKind kind);

// Footnotes implied by a structure panel.
std::vector<std::string> RequiredFootnotes(const StructurePanel& panel);

// Reads directedness and weightedness out of a Kind row such as
// "Directed, weighted". Either part is absent when not stated.
std::pair<std::optional<bool>, std::optional<bool>> ParseKindText(
    std::string_view text);

std::vector<ValidationError> ValidateCard(const Card& card);

// ---- display rows ---------------------------------------------------------

struct NumberFormat {
  int float_sig_digits = 4;
  int percent_decimals = 2;
};

// Locale-independent number text: integral values print without a
// fraction, others with `sig_digits` significant digits.
std::string FormatNumber(double value, int sig_digits);
std::string FormatPercent(double fraction, int decimals);
// Groups the integer part of a formatted number in thousands with "\,".
std::string LatexGroupDigits(std::string_view number);
std::string LatexEscape(std::string_view text);

// A cell's text in plain form and as ready-to-emit LaTeX.
struct CellText {
  std::string plain;
  std::string latex;

  friend bool operator==(const CellText&, const CellText&) = default;
};

enum class Panel { kOverall, kStructure, kMetainfo };

std::string_view PanelName(Panel panel);

struct RowKey {
  Panel panel = Panel::kOverall;
  std::string label;
  std::string marker;  // footnote marker such as "*" or "+", or empty
  int rank = 0;        // position in card order

  friend bool operator==(const RowKey&, const RowKey&) = default;
};

struct DisplayRow {
  RowKey key;
  CellText value;

  friend bool operator==(const DisplayRow&, const DisplayRow&) = default;
};

// Every row of the card as it is shown, in card order. Newlines in authored
// values become spaces.
std::vector<DisplayRow> DisplayRows(const Card& card, const NumberFormat& format);

// ---- multicard ------------------------------------------------------------

struct MulticardColumn {
  std::string name;
  // One entry per label; absent when the card has no such row.
  std::vector<std::optional<CellText>> cells;

  friend bool operator==(const MulticardColumn&, const MulticardColumn&) = default;
};

struct Multicard {
  std::vector<RowKey> labels;
  std::vector<MulticardColumn> columns;
  // Parallel to `labels`: every column holds the same value.
  std::vector<bool> shared;
  std::vector<std::string> footnotes;

  bool IsShared(std::string_view label) const;
};

// Column per card in the given order. Throws kTooFewCards below two cards.
Multicard MergeMulticard(std::span<const Card> cards,
                         const NumberFormat& format = {});

}  // namespace netcard

#endif  // NETCARD_CARD_H_
