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

#include <clocale>
#include <locale>
#include <random>
#include <regex>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "json.hpp"
#include "netcard/error.h"
#include "render_extract.h"
#include "test_support.h"

namespace netcard {
namespace {

using ::testing::HasSubstr;
using ::testing::Not;

Card ReadCardOrFail(const std::string& text, std::string* pointer) {
  try {
    ReadCardJson(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSchemaViolation);
    *pointer = e.detail();
  }
  return {};
}

testing::LabeledValues Expected(const Card& card) {
  testing::LabeledValues out;
  for (const DisplayRow& row : DisplayRows(card, {})) {
    out.emplace_back(row.key.label + row.key.marker, row.value.plain);
  }
  return testing::Sorted(out);
}

std::string Render(const Card& card, Format format) {
  RenderOptions options;
  options.format = format;
  return RenderCard(card, options);
}

TEST(TextRenderTest, KarateCard) {
  const std::string text = Render(testing::KarateCard(), Format::kText);
  EXPECT_TRUE(std::regex_search(text, std::regex(R"(Degree\* +\| 4\.588 \[1, 17\])")));
  EXPECT_TRUE(std::regex_search(text, std::regex(R"(Clustering +\| 0\.5706\n)")));
  EXPECT_THAT(text, HasSubstr("\n*Distributions summarized with average [min, max].\n"));
  EXPECT_TRUE(text.starts_with("===================="));
}

TEST(TextRenderTest, SuppressEmptyRows) {
  RenderOptions options;
  const std::string full = RenderCard(testing::KarateCard(), options);
  options.suppress_empty_rows = true;
  const std::string trimmed = RenderCard(testing::KarateCard(), options);
  EXPECT_TRUE(std::regex_search(full, std::regex(R"(\nEthics +\|\n)")));
  EXPECT_THAT(trimmed, Not(HasSubstr("Ethics")));
  EXPECT_THAT(trimmed, HasSubstr("Funding"));
}

TEST(TextRenderTest, StrictRejectsInvalidCards) {
  Card card = testing::KarateCard();
  card.unknown_fields.push_back({"structure", "Hubs", "3"});
  RenderOptions options;
  EXPECT_NO_THROW(RenderCard(card, options));
  options.strict = true;
  try {
    RenderCard(card, options);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidCard);
  }
}

TEST(LatexRenderTest, KarateCard) {
  const std::string latex = Render(testing::KarateCard(), Format::kLatex);
  EXPECT_TRUE(latex.starts_with("\\begin{tabular}{lp{8cm}}\n\\toprule\n"));
  EXPECT_THAT(latex, HasSubstr("Degree$^*$ & 4.588 [1, 17] \\\\\n"));
  EXPECT_THAT(latex, HasSubstr("\\midrule\n"));
  EXPECT_THAT(latex, HasSubstr("\\bottomrule\n"));
  EXPECT_THAT(latex, HasSubstr("{\\footnotesize $^*$Distributions summarized"));
}

TEST(LatexRenderTest, GroupsLargeIntegers) {
  std::vector<LinkSpec> links;
  for (int i = 0; i < 1200; ++i) links.push_back({"h", "n" + std::to_string(i), {}});
  Card card = testing::CardFor(BuildGraph({false, false}, {}, links));
  EXPECT_THAT(Render(card, Format::kLatex), HasSubstr("Number of nodes & 1\\,201 \\\\"));
  EXPECT_THAT(Render(card, Format::kText), HasSubstr("| 1201\n"));
}

TEST(MarkdownRenderTest, EscapesAndPanels) {
  Card card = testing::KarateCard();
  card.overall[2].value = "a|b *c* _d_";
  const std::string md = Render(card, Format::kMarkdown);
  EXPECT_THAT(md, HasSubstr("| Overall |  |\n|:--|:--|\n"));
  EXPECT_THAT(md, HasSubstr("| Nodes are | a\\|b \\*c\\* \\_d\\_ |"));
  EXPECT_THAT(md, HasSubstr("| Degree\\* | 4.588 [1, 17] |"));
}

TEST(CsvRenderTest, Card) {
  const std::string csv = Render(testing::KarateCard(), Format::kCsv);
  EXPECT_TRUE(csv.starts_with("panel,label,value\noverall,Name,Zachary Karate Club\n"));
  EXPECT_THAT(csv, HasSubstr("overall,Kind,\"Undirected, unweighted\"\n"));
  EXPECT_THAT(csv, HasSubstr("footnote,,\"*Distributions summarized with average [min, max].\"\n"));
}

std::vector<Card> ThreeCards() {
  std::vector<Card> cards;
  const char* names[] = {"Flights", "Routes", "Trains"};
  for (int i = 0; i < 3; ++i) {
    std::vector<LinkSpec> links;
    for (int j = 0; j <= 6 + i; ++j) {
      links.push_back({"n" + std::to_string(j), "n" + std::to_string(j + 1), {}});
    }
    MetaSidecar sidecar;
    sidecar.overall["Name"] = names[i];
    sidecar.metainfo["Access"] = "https://example.org/open_data";
    cards.push_back(testing::CardFor(BuildGraph({false, false}, {}, links), sidecar));
  }
  return cards;
}

TEST(MulticardRenderTest, LatexSharedRowsSpanColumns) {
  RenderOptions options;
  options.format = Format::kLatex;
  const std::string latex = RenderMulticard(MergeMulticard(ThreeCards()), options);
  EXPECT_TRUE(latex.starts_with("\\begin{tabular}{lp{3.5cm}p{3.5cm}p{3.5cm}}"));
  EXPECT_THAT(latex,
              HasSubstr("Access & \\multicolumn{3}{l}{https://example.org/open\\_data} \\\\"));
  EXPECT_THAT(latex, HasSubstr("Name & Flights & Routes & Trains \\\\"));
}

TEST(MulticardRenderTest, CsvHasOneColumnPerNetwork) {
  RenderOptions options;
  options.format = Format::kCsv;
  const std::string csv = RenderMulticard(MergeMulticard(ThreeCards()), options);
  for (const auto& record : testing::CsvRecords(csv)) EXPECT_EQ(record.size(), 4u);
  EXPECT_THAT(csv, HasSubstr("Access,https://example.org/open_data,"
                             "https://example.org/open_data,https://example.org/open_data\n"));
}

TEST(MulticardRenderTest, TextMarksSharedRows) {
  const std::string text = RenderMulticard(MergeMulticard(ThreeCards()));
  EXPECT_TRUE(std::regex_search(text, std::regex(R"(\nAccess +\| .*  \(shared\)\n)")));
  EXPECT_TRUE(std::regex_search(text, std::regex(R"(\nName +\| Flights +\| Routes +\| Trains\n)")));
}

TEST(MulticardRenderTest, Json) {
  RenderOptions options;
  options.format = Format::kJson;
  auto doc = nlohmann::json::parse(RenderMulticard(MergeMulticard(ThreeCards()), options));
  EXPECT_EQ(doc["columns"].size(), 3u);
  bool saw_access = false;
  for (const auto& row : doc["rows"]) {
    EXPECT_EQ(row["values"].size(), 3u);
    if (row["label"] == "Access") {
      saw_access = true;
      EXPECT_TRUE(row["shared"].get<bool>());
    }
  }
  EXPECT_TRUE(saw_access);
}

TEST(CardJsonTest, KarateRoundTrip) {
  Card card = testing::KarateCard();
  const std::string json = WriteCardJson(card);
  EXPECT_THAT(json, HasSubstr("\"schema_version\": \"1.0\""));
  Card back = ReadCardJson(json);
  EXPECT_EQ(back, card);
  EXPECT_EQ(WriteCardJson(back), json);
}

TEST(CardJsonTest, SchemaViolationsPointAtTheProblem) {
  auto doc = nlohmann::ordered_json::parse(WriteCardJson(testing::KarateCard()));
  std::string pointer;

  auto missing = doc;
  missing.erase("structure");
  ReadCardOrFail(missing.dump(), &pointer);
  EXPECT_EQ(pointer, "/structure");

  auto future = doc;
  future["schema_version"] = "2.0";
  ReadCardOrFail(future.dump(), &pointer);
  EXPECT_EQ(pointer, "/schema_version");

  auto minor = doc;
  minor["schema_version"] = "1.7";
  EXPECT_NO_THROW(ReadCardJson(minor.dump()));

  auto bad_type = doc;
  bad_type["structure"]["Clustering"] = "high";
  ReadCardOrFail(bad_type.dump(), &pointer);
  EXPECT_EQ(pointer, "/structure/Clustering");

  ReadCardOrFail("{", &pointer);
  EXPECT_EQ(pointer, "/");
}

TEST(CardJsonTest, UnknownFieldsSurviveAndFailValidation) {
  auto doc = nlohmann::ordered_json::parse(WriteCardJson(testing::KarateCard()));
  doc["structure"]["Hubs"] = 3;
  Card card = ReadCardJson(doc.dump());
  ASSERT_EQ(card.unknown_fields.size(), 1u);
  EXPECT_EQ(card.unknown_fields[0].name, "Hubs");
  std::vector<ValidationError> findings = ValidateCard(card);
  ASSERT_EQ(findings.size(), 1u);
  EXPECT_EQ(findings[0].path, "structure.Hubs");
  EXPECT_THAT(WriteCardJson(card), HasSubstr("\"Hubs\": 3"));
}

TEST(CardJsonPropertyTest, RoundTripIsByteIdentical) {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 300; ++trial) {
    Card card = testing::RandomCard(rng);
    const std::string first = WriteCardJson(card);
    Card back = ReadCardJson(first);
    EXPECT_EQ(WriteCardJson(back), first) << trial;
    EXPECT_EQ(back, card) << trial;
  }
}

TEST(FormatAgreementPropertyTest, EveryFormatShowsTheSameRows) {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 200; ++trial) {
    Card card = testing::RandomCard(rng);
    const testing::LabeledValues want = Expected(card);
    SCOPED_TRACE(trial);
    EXPECT_EQ(testing::FromText(Render(card, Format::kText)), want);
    EXPECT_EQ(testing::FromMarkdown(Render(card, Format::kMarkdown)), want);
    EXPECT_EQ(testing::FromLatex(Render(card, Format::kLatex)), want);
    EXPECT_EQ(testing::FromCsv(Render(card, Format::kCsv)), want);
  }
}

struct CommaDecimal : std::numpunct<char> {
  char do_decimal_point() const override { return ','; }
  char do_thousands_sep() const override { return '.'; }
  std::string do_grouping() const override { return "\3"; }
};

TEST(LocaleTest, OutputIgnoresTheGlobalLocale) {
  Card card = testing::KarateCard();
  const std::string text = Render(card, Format::kText);
  const std::string json = WriteCardJson(card);
  const std::locale saved = std::locale::global(
      std::locale(std::locale::classic(), new CommaDecimal));
  // Use a C locale with a comma decimal point too, when one is installed.
  const std::string c_saved = std::setlocale(LC_NUMERIC, nullptr);
  std::setlocale(LC_NUMERIC, "de_DE.UTF-8");
  EXPECT_EQ(Render(card, Format::kText), text);
  EXPECT_EQ(WriteCardJson(card), json);
  EXPECT_EQ(ReadCardJson(json), card);
  std::setlocale(LC_NUMERIC, c_saved.c_str());
  std::locale::global(saved);
}

}  // namespace
}  // namespace netcard
