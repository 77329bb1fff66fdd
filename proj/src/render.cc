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

#include "netcard/render.h"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "netcard/error.h"

namespace netcard {
namespace {

constexpr std::size_t kMaxRuleWidth = 100;

// Display width in code points.
std::size_t Width(std::string_view s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) {
    return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
  }));
}

std::string Pad(std::string_view s, std::size_t width) {
  std::string out(s);
  out.append(width - std::min(width, Width(s)), ' ');
  return out;
}

std::string PlainLabel(const RowKey& key) { return key.label + key.marker; }

std::string LatexLabel(const RowKey& key) {
  std::string out = LatexEscape(key.label);
  if (!key.marker.empty()) out += "$^" + key.marker + "$";
  return out;
}

std::string MarkdownEscape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '\\' || c == '|' || c == '*' || c == '_' || c == '`') out += '\\';
    out += c;
  }
  return out;
}

std::string CsvField(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Footnotes start with their marker character.
std::string LatexFootnote(std::string_view note) {
  if (!note.empty() && (note.front() == '*' || note.front() == '+')) {
    return "$^" + std::string(1, note.front()) + "$" +
           LatexEscape(note.substr(1));
  }
  return LatexEscape(note);
}

std::string_view PanelTitle(Panel panel) {
  switch (panel) {
    case Panel::kOverall: return "Overall";
    case Panel::kStructure: return "Structure";
    case Panel::kMetainfo: return "Meta-information";
  }
  return "";
}

// Rows of one table, each with a key and one cell per value column.
struct Grid {
  std::vector<RowKey> keys;
  std::vector<std::vector<CellText>> cells;
  std::vector<bool> shared;
  std::vector<std::string> footnotes;
  std::vector<std::string> column_names;
  bool multicard = false;
};

Grid CardGrid(const Card& card, const RenderOptions& opts) {
  Grid g;
  for (DisplayRow& row : DisplayRows(card, opts.number_format())) {
    if (opts.suppress_empty_rows && row.value.plain.empty()) continue;
    g.keys.push_back(std::move(row.key));
    g.cells.push_back({std::move(row.value)});
    g.shared.push_back(false);
  }
  g.footnotes = card.footnotes;
  g.column_names = {card.name()};
  return g;
}

Grid MulticardGrid(const Multicard& mc, const RenderOptions& opts) {
  Grid g;
  g.multicard = true;
  for (std::size_t i = 0; i < mc.labels.size(); ++i) {
    std::vector<CellText> row;
    bool all_empty = true;
    for (const MulticardColumn& column : mc.columns) {
      row.push_back(column.cells[i].value_or(CellText{}));
      all_empty = all_empty && row.back().plain.empty();
    }
    if (opts.suppress_empty_rows && all_empty) continue;
    g.keys.push_back(mc.labels[i]);
    g.cells.push_back(std::move(row));
    g.shared.push_back(mc.shared[i]);
  }
  g.footnotes = mc.footnotes;
  for (const MulticardColumn& column : mc.columns) g.column_names.push_back(column.name);
  return g;
}

// Index ranges [begin, end) of consecutive rows that share a panel.
std::vector<std::pair<std::size_t, std::size_t>> PanelRuns(const Grid& g) {
  std::vector<std::pair<std::size_t, std::size_t>> runs;
  for (std::size_t i = 0; i < g.keys.size(); ++i) {
    if (runs.empty() || g.keys[i].panel != g.keys[runs.back().first].panel) {
      runs.emplace_back(i, i + 1);
    } else {
      runs.back().second = i + 1;
    }
  }
  return runs;
}

std::string RenderText(const Grid& g) {
  const std::size_t columns = g.column_names.size();
  std::vector<std::size_t> width(columns + 1, 0);
  for (std::size_t r = 0; r < g.keys.size(); ++r) {
    width[0] = std::max(width[0], Width(PlainLabel(g.keys[r])));
    for (std::size_t c = 0; c < columns; ++c) {
      width[c + 1] = std::max(width[c + 1], Width(g.cells[r][c].plain));
    }
  }
  std::vector<std::string> lines;
  std::size_t longest = 0;
  for (std::size_t r = 0; r < g.keys.size(); ++r) {
    std::string line = Pad(PlainLabel(g.keys[r]), width[0]);
    for (std::size_t c = 0; c < columns; ++c) {
      const std::string& cell = g.cells[r][c].plain;
      line += " | ";
      line += (c + 1 < columns) ? Pad(cell, width[c + 1]) : cell;
    }
    if (g.shared[r]) line += "  (shared)";
    while (!line.empty() && line.back() == ' ') line.pop_back();
    longest = std::max(longest, Width(line));
    lines.push_back(std::move(line));
  }
  const std::size_t rule_width = std::clamp<std::size_t>(longest, 20, kMaxRuleWidth);

  std::ostringstream out;
  const std::string heavy(rule_width, '=');
  const std::string light(rule_width, '-');
  out << heavy << '\n';
  bool first = true;
  for (const auto& [begin, end] : PanelRuns(g)) {
    if (!first) out << light << '\n';
    first = false;
    for (std::size_t r = begin; r < end; ++r) out << lines[r] << '\n';
  }
  out << heavy << '\n';
  for (const std::string& note : g.footnotes) out << note << '\n';
  return out.str();
}

std::string RenderMarkdown(const Grid& g) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [begin, end] : PanelRuns(g)) {
    if (!first) out << '\n';
    first = false;
    out << "| " << PanelTitle(g.keys[begin].panel) << " |";
    for (const std::string& name : g.column_names) {
      out << ' ' << (g.multicard ? MarkdownEscape(name) : std::string()) << " |";
    }
    out << "\n|:--|";
    for (std::size_t c = 0; c < g.column_names.size(); ++c) out << ":--|";
    out << '\n';
    for (std::size_t r = begin; r < end; ++r) {
      out << "| " << MarkdownEscape(PlainLabel(g.keys[r])) << " |";
      for (const CellText& cell : g.cells[r]) {
        out << ' ' << MarkdownEscape(cell.plain) << " |";
      }
      out << '\n';
    }
  }
  for (const std::string& note : g.footnotes) {
    out << '\n' << MarkdownEscape(note) << '\n';
  }
  return out.str();
}

std::string RenderLatex(const Grid& g) {
  const std::size_t columns = g.column_names.size();
  std::ostringstream out;
  out << "\\begin{tabular}{l";
  for (std::size_t c = 0; c < columns; ++c) out << (g.multicard ? "p{3.5cm}" : "p{8cm}");
  out << "}\n\\toprule\n";
  bool first = true;
  for (const auto& [begin, end] : PanelRuns(g)) {
    if (!first) out << "\\midrule\n";
    first = false;
    for (std::size_t r = begin; r < end; ++r) {
      out << LatexLabel(g.keys[r]);
      if (g.shared[r]) {
        out << " & \\multicolumn{" << columns << "}{l}{" << g.cells[r][0].latex
            << "}";
      } else {
        for (const CellText& cell : g.cells[r]) out << " & " << cell.latex;
      }
      out << " \\\\\n";
    }
  }
  out << "\\bottomrule\n";
  for (const std::string& note : g.footnotes) {
    out << "\\multicolumn{" << columns + 1 << "}{l}{\\footnotesize "
        << LatexFootnote(note) << "} \\\\\n";
  }
  out << "\\end{tabular}\n";
  return out.str();
}

std::string RenderCsv(const Grid& g) {
  std::ostringstream out;
  if (!g.multicard) out << "panel,label,value\n";
  for (std::size_t r = 0; r < g.keys.size(); ++r) {
    if (!g.multicard) out << PanelName(g.keys[r].panel) << ',';
    out << CsvField(PlainLabel(g.keys[r]));
    for (const CellText& cell : g.cells[r]) out << ',' << CsvField(cell.plain);
    out << '\n';
  }
  for (const std::string& note : g.footnotes) {
    if (g.multicard) {
      out << CsvField(note) << std::string(g.column_names.size(), ',') << '\n';
    } else {
      out << "footnote,," << CsvField(note) << '\n';
    }
  }
  return out.str();
}

std::string MulticardJson(const Grid& g) {
  using ordered_json = nlohmann::ordered_json;
  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["columns"] = g.column_names;
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < g.keys.size(); ++r) {
    ordered_json row;
    row["panel"] = PanelName(g.keys[r].panel);
    row["label"] = g.keys[r].label;
    row["marker"] = g.keys[r].marker;
    ordered_json values = ordered_json::array();
    for (const CellText& cell : g.cells[r]) values.push_back(cell.plain);
    row["values"] = std::move(values);
    row["shared"] = static_cast<bool>(g.shared[r]);
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  doc["footnotes"] = g.footnotes;
  return doc.dump(2) + "\n";
}

}  // namespace

std::optional<Format> ParseFormat(std::string_view name) {
  if (name == "text") return Format::kText;
  if (name == "markdown") return Format::kMarkdown;
  if (name == "latex") return Format::kLatex;
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  return std::nullopt;
}

std::string RenderCard(const Card& card, const RenderOptions& options) {
  if (options.strict) {
    std::vector<ValidationError> findings = ValidateCard(card);
    if (HasErrors(findings)) {
      for (const ValidationError& v : findings) {
        if (v.severity == Severity::kError) {
          throw Error(ErrorCode::kInvalidCard, v.path, v.path + ": " + v.message);
        }
      }
    }
  }
  if (options.format == Format::kJson) return WriteCardJson(card);
  const Grid grid = CardGrid(card, options);
  switch (options.format) {
    case Format::kText: return RenderText(grid);
    case Format::kMarkdown: return RenderMarkdown(grid);
    case Format::kLatex: return RenderLatex(grid);
    case Format::kCsv: return RenderCsv(grid);
    case Format::kJson: break;
  }
  return {};
}

std::string RenderMulticard(const Multicard& mc, const RenderOptions& options) {
  const Grid grid = MulticardGrid(mc, options);
  switch (options.format) {
    case Format::kText: return RenderText(grid);
    case Format::kMarkdown: return RenderMarkdown(grid);
    case Format::kLatex: return RenderLatex(grid);
    case Format::kCsv: return RenderCsv(grid);
    case Format::kJson: return MulticardJson(grid);
  }
  return {};
}

}  // namespace netcard
