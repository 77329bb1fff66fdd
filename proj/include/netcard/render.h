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

#ifndef NETCARD_RENDER_H_
#define NETCARD_RENDER_H_

#include <string>
#include <string_view>

#include "netcard/card.h"
#include "netcard/graph.h"

namespace netcard {

enum class Format { kText, kMarkdown, kLatex, kCsv, kJson };

// Accepts "text", "markdown", "latex", "csv" and "json".
std::optional<Format> ParseFormat(std::string_view name);

struct RenderOptions {
  Format format = Format::kText;
  int float_sig_digits = 4;
  int percent_decimals = 2;
  bool suppress_empty_rows = false;
  // Refuse cards with validation errors (kInvalidCard).
  bool strict = false;

  NumberFormat number_format() const {
    return {float_sig_digits, percent_decimals};
  }
};

std::string RenderCard(const Card& card, const RenderOptions& options = {});
std::string RenderMulticard(const Multicard& mc, const RenderOptions& options = {});

// Machine-readable card document. Output is deterministic: keys follow card
// order and numbers round-trip exactly.
std::string WriteCardJson(const Card& card);

// Throws kSchemaViolation with a JSON pointer to the first offending element.
// Keys outside the card vocabulary are kept as Card::unknown_fields.
Card ReadCardJson(std::string_view text);

// Canonical node-link document accepted by ParseNodeLink.
std::string WriteNodeLink(const Graph& g);

}  // namespace netcard

#endif  // NETCARD_RENDER_H_
