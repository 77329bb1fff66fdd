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

#include "netcard/cli.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "netcard/card.h"
#include "netcard/error.h"
#include "netcard/ingest.h"
#include "netcard/render.h"
#include "netcard/stats.h"

namespace netcard::cli {
namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flags shared by every subcommand that renders.
struct RenderFlags {
  std::string format = "text";
  int sig_digits = 4;
  int percent_decimals = 2;
  bool suppress_empty = false;
  bool strict = false;

  void Register(CLI::App* app, bool format_required_default = true) {
    auto* f = app->add_option("--format", format,
                              "Output format: text, markdown, latex, csv or json");
    f->check(CLI::IsMember({"text", "markdown", "latex", "csv", "json"}));
    if (format_required_default) f->capture_default_str();
    app->add_option("--sig-digits", sig_digits, "Significant digits for reals")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();
    app->add_option("--percent-decimals", percent_decimals,
                    "Decimals shown for percentages")
        ->check(CLI::Range(0, 10))
        ->capture_default_str();
    app->add_flag("--suppress-empty", suppress_empty, "Leave out rows with no value");
    app->add_flag("--strict", strict, "Treat card validation errors as fatal");
  }

  RenderOptions Options() const {
    RenderOptions o;
    o.format = *ParseFormat(format);
    o.float_sig_digits = sig_digits;
    o.percent_decimals = percent_decimals;
    o.suppress_empty_rows = suppress_empty;
    o.strict = strict;
    return o;
  }
};

struct GenerateFlags {
  std::string edgelist;
  std::string nodelink;
  std::string delimiter = "whitespace";
  std::string comment = "#";
  bool weighted = false;
  bool directed = false;
  std::string sidecar;
  std::string out_path;
  std::string render_out;
  std::string summary = "mean";
  std::size_t diameter_budget = kDefaultDiameterBudget;
  bool partition_degrees = false;
  RenderFlags render;
  bool render_requested = false;
};

std::string ReadInput(const std::string& path, std::istream& in) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot read '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(file)), {});
  if (file.bad()) throw IoError("cannot read '" + path + "'");
  return text;
}

void WriteOutput(const std::string& path, const std::string& content,
                 std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    out.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot write '" + path + "'");
  file << content;
  file.close();
  if (!file) throw IoError("cannot write '" + path + "'");
}

void Report(std::span<const ValidationError> findings, std::ostream& err) {
  for (const ValidationError& v : findings) {
    err << SeverityName(v.severity) << ' ' << v.path << ' ' << v.message << '\n';
  }
}

int Generate(const GenerateFlags& flags, std::istream& in, std::ostream& out,
             std::ostream& err) {
  std::vector<std::string> warnings;
  Graph graph;
  if (!flags.edgelist.empty()) {
    EdgeListOptions opts;
    opts.delimiter = flags.delimiter == "comma" ? Delimiter::kComma
                     : flags.delimiter == "tab" ? Delimiter::kTab
                                                : Delimiter::kWhitespace;
    opts.comment_prefix = flags.comment;
    opts.has_weight_column = flags.weighted;
    opts.directed = flags.directed;
    opts.strict_duplicates = flags.render.strict;
    graph = ParseEdgeList(ReadInput(flags.edgelist, in), opts, &warnings);
  } else {
    if (flags.weighted || flags.directed) {
      warnings.push_back("--weighted/--directed ignored; the node-link document declares its kind");
    }
    graph = ParseNodeLink(ReadInput(flags.nodelink, in),
                          BuildOptions{flags.render.strict});
  }

  MetaSidecar sidecar;
  if (!flags.sidecar.empty()) sidecar = ParseMetaSidecar(ReadInput(flags.sidecar, in));
  if (sidecar.bipartite_labels) {
    graph = WithBipartiteSets(graph, BipartiteSets{sidecar.bipartite_labels->first.nodes,
                                                   sidecar.bipartite_labels->second.nodes});
  }

  StructureConfig config;
  config.summary_style = flags.summary == "median" ? SummaryStyle::kMedianP5P95
                                                   : SummaryStyle::kMeanMinMax;
  config.diameter_budget = flags.diameter_budget;
  config.per_partition_degree = flags.partition_degrees;
  const StructurePanel panel = ComputeStructurePanel(graph, config);
  const Card card = AssembleCard(panel, sidecar, graph.kind()).card;

  for (const std::string& w : warnings) err << "warning: " << w << '\n';
  const std::vector<ValidationError> findings = ValidateCard(card);
  Report(findings, err);
  if (HasErrors(findings)) return kExitDomainError;

  if (flags.render_requested) {
    WriteOutput(flags.render_out, RenderCard(card, flags.render.Options()), out);
    if (!flags.out_path.empty()) WriteOutput(flags.out_path, WriteCardJson(card), out);
  } else {
    WriteOutput(flags.out_path, WriteCardJson(card), out);
  }
  return kExitOk;
}

int Render(const std::string& path, const std::string& out_path,
           const RenderFlags& flags, std::istream& in, std::ostream& out) {
  const Card card = ReadCardJson(ReadInput(path, in));
  WriteOutput(out_path, RenderCard(card, flags.Options()), out);
  return kExitOk;
}

int Validate(const std::string& path, const std::string& schema_dir,
             std::istream& in, std::ostream& err) {
  const std::string text = ReadInput(path, in);
  std::vector<ValidationError> findings;
  if (!schema_dir.empty()) {
    const std::string schema_path = schema_dir + "/card.schema.json";
    nlohmann::json schema;
    try {
      schema = nlohmann::json::parse(ReadInput(schema_path, in));
    } catch (const nlohmann::json::exception&) {
      throw IoError("'" + schema_path + "' is not a JSON document");
    }
    const std::string version = schema.value("version", "");
    if (version != kSchemaVersion) {
      findings.push_back({"schema_version",
                          "schema directory describes version '" + version +
                              "', this tool uses " + std::string(kSchemaVersion),
                          Severity::kWarning});
    }
  }
  const Card card = ReadCardJson(text);
  for (ValidationError& v : ValidateCard(card)) findings.push_back(std::move(v));
  Report(findings, err);
  return HasErrors(findings) ? kExitDomainError : kExitOk;
}

int Compare(const std::vector<std::string>& paths, const std::string& out_path,
            const RenderFlags& flags, std::istream& in, std::ostream& out,
            std::ostream& err) {
  if (paths.size() < 2) {
    err << "netcard: compare: need at least two cards\n";
    return kExitDomainError;
  }
  std::vector<Card> cards;
  bool invalid = false;
  for (const std::string& path : paths) {
    cards.push_back(ReadCardJson(ReadInput(path, in)));
    const std::vector<ValidationError> findings = ValidateCard(cards.back());
    for (const ValidationError& v : findings) {
      err << path << ": " << SeverityName(v.severity) << ' ' << v.path << ' '
          << v.message << '\n';
    }
    invalid = invalid || HasErrors(findings);
  }
  if (invalid) return kExitDomainError;
  const RenderOptions options = flags.Options();
  const Multicard mc = MergeMulticard(cards, options.number_format());
  WriteOutput(out_path, RenderMulticard(mc, options), out);
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Compute, validate and render network cards", "netcard"};
  app.require_subcommand(1);

  GenerateFlags gen;
  CLI::App* generate = app.add_subcommand("generate", "Build a card from a graph file");
  auto* edgelist = generate->add_option("--edgelist", gen.edgelist, "Edge-list file");
  auto* nodelink = generate->add_option("--nodelink", gen.nodelink, "Node-link JSON file");
  edgelist->excludes(nodelink);
  generate->add_option("--delimiter", gen.delimiter, "Edge-list column delimiter")
      ->check(CLI::IsMember({"whitespace", "comma", "tab"}))
      ->capture_default_str();
  generate->add_option("--comment", gen.comment, "Edge-list comment prefix")
      ->capture_default_str();
  generate->add_flag("--weighted", gen.weighted, "Third edge-list column is a weight");
  generate->add_flag("--directed", gen.directed, "Edge-list links are directed");
  generate->add_option("--sidecar", gen.sidecar, "Authored card fields (JSON)");
  generate->add_option("--out", gen.out_path, "Card document destination");
  generate->add_option("--render-out", gen.render_out, "Rendered view destination");
  generate->add_option("--summary", gen.summary, "Distribution summary: mean or median")
      ->check(CLI::IsMember({"mean", "median"}))
      ->capture_default_str();
  generate->add_option("--diameter-budget", gen.diameter_budget,
                       "Largest node count for which diameters are computed")
      ->capture_default_str();
  generate->add_flag("--partition-degrees", gen.partition_degrees,
                     "Summarize degrees per bipartite set");
  gen.render.Register(generate, false);

  RenderFlags ren;
  std::string render_path;
  std::string render_out;
  CLI::App* render = app.add_subcommand("render", "Render a card document");
  render->add_option("card", render_path, "Card document, or - for standard input")
      ->required();
  render->add_option("--out", render_out, "Destination (default: standard output)");
  ren.Register(render);

  std::string validate_path;
  std::string schema_dir;
  if (const char* env = std::getenv("NETCARD_SCHEMA_DIR")) schema_dir = env;
  CLI::App* validate = app.add_subcommand("validate", "Check a card document");
  validate->add_option("card", validate_path, "Card document, or - for standard input")
      ->required();
  validate->add_option("--schema-dir", schema_dir,
                       "Directory holding card.schema.json (default: $NETCARD_SCHEMA_DIR)");

  RenderFlags cmp;
  std::vector<std::string> compare_paths;
  std::string compare_out;
  CLI::App* compare = app.add_subcommand("compare", "Merge cards into a multicard");
  compare->add_option("cards", compare_paths, "Card documents, in column order")
      ->required();
  compare->add_option("--out", compare_out, "Destination (default: standard output)");
  cmp.Register(compare);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitDomainError;
  }

  try {
    if (*generate) {
      if (gen.edgelist.empty() && gen.nodelink.empty()) {
        err << "netcard: generate: one of --edgelist or --nodelink is required\n";
        return kExitDomainError;
      }
      gen.render_requested = generate->count("--format") > 0;
      return Generate(gen, in, out, err);
    }
    if (*render) return Render(render_path, render_out, ren, in, out);
    if (*validate) return Validate(validate_path, schema_dir, in, err);
    if (*compare) return Compare(compare_paths, compare_out, cmp, in, out, err);
  } catch (const IoError& e) {
    err << "netcard: " << e.what() << '\n';
    return kExitIoError;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kSchemaViolation) {
      err << "error " << e.detail() << ' ' << e.what() << '\n';
    } else {
      err << "netcard: " << e.what() << '\n';
    }
    return kExitDomainError;
  } catch (const std::exception& e) {
    err << "netcard: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitDomainError;
}

}  // namespace netcard::cli
