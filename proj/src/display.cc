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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>

#include "netcard/card.h"
#include "netcard/error.h"
#include "netcard/vocabulary.h"

namespace netcard {
namespace {

std::string ToChars(double value, std::chars_format fmt, int precision) {
  char buf[128];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, fmt, precision);
  if (ec != std::errc()) return "?";
  return std::string(buf, ptr);
}

void StripZeros(std::string& s) {
  if (s.find('.') == std::string::npos) return;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
}

CellText Authored(const std::string& value) {
  std::string plain = value;
  for (char& c : plain) {
    if (c == '\n' || c == '\r' || c == '\t') c = ' ';
  }
  std::string latex = LatexEscape(plain);
  return {std::move(plain), std::move(latex)};
}

CellText Number(double v, const NumberFormat& fmt) {
  std::string s = FormatNumber(v, fmt.float_sig_digits);
  return {s, LatexGroupDigits(s)};
}

CellText Integer(std::int64_t v) {
  std::string s = std::to_string(v);
  return {s, LatexGroupDigits(s)};
}

CellText Percent(double fraction, const NumberFormat& fmt) {
  std::string s = FormatPercent(fraction, fmt.percent_decimals);
  return {s + "%", s + "\\%"};
}

CellText Plain(std::string s) {
  std::string latex = LatexEscape(s);
  return {std::move(s), std::move(latex)};
}

CellText Concat(std::initializer_list<CellText> parts) {
  CellText out;
  for (const CellText& p : parts) {
    out.plain += p.plain;
    out.latex += p.latex;
  }
  return out;
}

CellText Summary(const DistributionSummary& s, const NumberFormat& fmt) {
  if (s.style == SummaryStyle::kValueList) {
    CellText out = Plain("[");
    for (std::size_t i = 0; i < s.values.size(); ++i) {
      if (i > 0) out = Concat({out, Plain(", ")});
      out = Concat({out, Number(s.values[i], fmt)});
    }
    return Concat({out, Plain("]")});
  }
  return Concat({Number(s.center, fmt), Plain(" ["), Number(s.lo, fmt),
                 Plain(", "), Number(s.hi, fmt), Plain("]")});
}

std::string SummaryMarker(const DistributionSummary& s) {
  return s.style == SummaryStyle::kValueList ? "" : "*";
}

enum StructureRank : int {
  kRankNodes = 100,
  kRankLinks,
  kRankBidirectional,
  kRankDegreeInOut,
  kRankDegreeIn,
  kRankDegreeOut,
  kRankDegree,
  kRankDegreePartition,
  kRankClustering,
  kRankConnected,
  kRankComponentSize,
  kRankDiameter,
  kRankLargestDiameter,
  kRankAssortativity,
};

constexpr int kMetainfoRankBase = 200;

}  // namespace

std::string FormatNumber(double value, int sig_digits) {
  if (!std::isfinite(value)) return "n/a";
  if (value == 0) return "0";
  sig_digits = std::max(sig_digits, 1);
  if (std::abs(value) < 1e15 && value == std::trunc(value)) {
    return std::to_string(static_cast<long long>(value));
  }
  const int exponent = static_cast<int>(std::floor(std::log10(std::abs(value))));
  const int decimals = sig_digits - 1 - exponent;
  std::string s;
  if (decimals > 17) {
    s = ToChars(value, std::chars_format::general, sig_digits);
    return s;
  }
  s = ToChars(value, std::chars_format::fixed, std::max(decimals, 0));
  StripZeros(s);
  if (s == "-0") s = "0";
  return s;
}

std::string FormatPercent(double fraction, int decimals) {
  std::string s = ToChars(100.0 * fraction, std::chars_format::fixed,
                          std::max(decimals, 0));
  if (s.starts_with("-") && s.find_first_not_of("-0.") == std::string::npos) {
    s.erase(0, 1);
  }
  return s;
}

std::string LatexGroupDigits(std::string_view number) {
  std::size_t begin = number.starts_with("-") ? 1 : 0;
  std::size_t end = begin;
  while (end < number.size() && number[end] >= '0' && number[end] <= '9') ++end;
  if (number.find_first_of("eE") != std::string_view::npos || end - begin < 4) {
    return std::string(number);
  }
  std::string out(number.substr(0, begin));
  for (std::size_t i = begin; i < end; ++i) {
    if (i > begin && (end - i) % 3 == 0) out += "\\,";
    out += number[i];
  }
  out += number.substr(end);
  return out;
}

std::string LatexEscape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '\\': out += "\\textbackslash{}"; break;
      case '&': case '%': case '$': case '#': case '_': case '{': case '}':
        out += '\\';
        out += c;
        break;
      case '~': out += "\\textasciitilde{}"; break;
      case '^': out += "\\textasciicircum{}"; break;
      default: out += c;
    }
  }
  return out;
}

std::string_view PanelName(Panel panel) {
  switch (panel) {
    case Panel::kOverall: return "overall";
    case Panel::kStructure: return "structure";
    case Panel::kMetainfo: return "metainfo";
  }
  return "";
}

std::vector<DisplayRow> DisplayRows(const Card& card, const NumberFormat& fmt) {
  std::vector<DisplayRow> rows;
  auto add = [&](Panel panel, std::string label, std::string marker, int rank,
                 CellText value) {
    rows.push_back({{panel, std::move(label), std::move(marker), rank},
                    std::move(value)});
  };

  for (const Field& f : card.overall) {
    const auto* it = std::find(kOverallFields.begin(), kOverallFields.end(), f.name);
    add(Panel::kOverall, f.name, "", static_cast<int>(it - kOverallFields.begin()),
        Authored(f.value));
  }

  const StructurePanel& s = card.structure;
  const Panel st = Panel::kStructure;
  add(st, "Number of nodes", "", kRankNodes, Integer(s.n_nodes));
  CellText links = Integer(s.n_links);
  if (s.n_self_loops > 0) {
    links = Concat({links, Plain(" ["), Integer(s.n_self_loops),
                    Plain(s.n_self_loops == 1 ? " self-loop]" : " self-loops]")});
  }
  add(st, "Number of links", "", kRankLinks, links);
  if (s.bidirectional_fraction) {
    add(st, "Bidirectional links", "", kRankBidirectional,
        Percent(*s.bidirectional_fraction, fmt));
  }

  if (s.kind.directed && s.degree_in && s.degree_out) {
    if (*s.degree_in == *s.degree_out) {
      add(st, "Degree (in/out)", SummaryMarker(*s.degree_in), kRankDegreeInOut,
          Summary(*s.degree_in, fmt));
    } else {
      add(st, "Degree (in)", SummaryMarker(*s.degree_in), kRankDegreeIn,
          Summary(*s.degree_in, fmt));
      add(st, "Degree (out)", SummaryMarker(*s.degree_out), kRankDegreeOut,
          Summary(*s.degree_out, fmt));
    }
    add(st, "Degree", "+", kRankDegree,
        Summary(s.degree_undirected.value_or(s.degree), fmt));
  } else {
    add(st, "Degree", SummaryMarker(s.degree), kRankDegree, Summary(s.degree, fmt));
  }
  if (s.partition_degree) {
    std::string first = "first set";
    std::string second = "second set";
    if (card.partition_names) std::tie(first, second) = *card.partition_names;
    add(st, "Degree (" + first + ")", SummaryMarker(s.partition_degree->first),
        kRankDegreePartition, Summary(s.partition_degree->first, fmt));
    add(st, "Degree (" + second + ")", SummaryMarker(s.partition_degree->second),
        kRankDegreePartition, Summary(s.partition_degree->second, fmt));
  }

  add(st, "Clustering", "", kRankClustering, Number(s.clustering, fmt));

  const ConnectivityReport& c = s.connectivity;
  if (c.is_connected) {
    add(st, "Connected", "", kRankConnected, Plain("Yes"));
  } else {
    add(st, "Connected", "", kRankConnected,
        Concat({Integer(static_cast<std::int64_t>(c.n_components)),
                Plain(" components ["), Percent(c.fraction_in_largest, fmt),
                Plain(" in largest]")}));
    add(st, "Component size", SummaryMarker(c.component_sizes), kRankComponentSize,
        Summary(c.component_sizes, fmt));
  }
  const CellText skipped = Plain("not computed");
  if (c.is_connected) {
    add(st, "Diameter", "", kRankDiameter,
        c.diameter ? Integer(*c.diameter) : skipped);
  } else {
    add(st, "Diameter", "", kRankDiameter, Plain("n/a"));
    add(st, "Largest component's diameter", "", kRankLargestDiameter,
        c.largest_component_diameter ? Integer(*c.largest_component_diameter)
                                     : skipped);
  }
  add(st, "Assortativity (degree)", "", kRankAssortativity,
      s.assortativity ? Number(*s.assortativity, fmt) : Plain("n/a"));

  for (const Field& f : card.metainfo) {
    const auto* it =
        std::find(kMetainfoFields.begin(), kMetainfoFields.end(), f.name);
    add(Panel::kMetainfo, f.name, "",
        kMetainfoRankBase + static_cast<int>(it - kMetainfoFields.begin()),
        Authored(f.value));
  }
  return rows;
}

Multicard MergeMulticard(std::span<const Card> cards, const NumberFormat& fmt) {
  if (cards.size() < 2) {
    throw Error(ErrorCode::kTooFewCards, std::to_string(cards.size()),
                "need at least two cards to compare");
  }
  struct Slot {
    RowKey key;
    std::size_t first_seen;
  };
  std::vector<Slot> slots;
  std::map<std::pair<Panel, std::string>, std::size_t> slot_of;
  std::vector<std::vector<DisplayRow>> per_card;
  per_card.reserve(cards.size());
  for (const Card& card : cards) {
    per_card.push_back(DisplayRows(card, fmt));
    for (const DisplayRow& row : per_card.back()) {
      auto key = std::make_pair(row.key.panel, row.key.label);
      auto [it, inserted] = slot_of.try_emplace(key, slots.size());
      if (inserted) {
        slots.push_back({row.key, slots.size()});
      } else if (slots[it->second].key.marker.empty()) {
        slots[it->second].key.marker = row.key.marker;
      }
    }
  }
  std::stable_sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) {
    return a.key.rank < b.key.rank;
  });

  Multicard mc;
  for (const Slot& slot : slots) mc.labels.push_back(slot.key);
  for (std::size_t c = 0; c < cards.size(); ++c) {
    MulticardColumn column;
    column.name = cards[c].name();
    if (column.name.empty()) column.name = "Network " + std::to_string(c + 1);
    column.cells.resize(mc.labels.size());
    for (const DisplayRow& row : per_card[c]) {
      for (std::size_t i = 0; i < mc.labels.size(); ++i) {
        if (mc.labels[i].panel == row.key.panel &&
            mc.labels[i].label == row.key.label) {
          column.cells[i] = row.value;
          break;
        }
      }
    }
    mc.columns.push_back(std::move(column));
  }
  for (std::size_t i = 0; i < mc.labels.size(); ++i) {
    const auto& first = mc.columns.front().cells[i];
    bool same = first.has_value();
    for (const MulticardColumn& column : mc.columns) {
      same = same && column.cells[i] == first;
    }
    mc.shared.push_back(same);
  }
  for (const Card& card : cards) {
    for (const std::string& note : card.footnotes) {
      if (std::find(mc.footnotes.begin(), mc.footnotes.end(), note) ==
          mc.footnotes.end()) {
        mc.footnotes.push_back(note);
      }
    }
  }
  return mc;
}

}  // namespace netcard
