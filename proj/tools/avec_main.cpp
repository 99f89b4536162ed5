// Copyright 2026 The avecbound Authors
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

// avec: generate graphs, evaluate eccentricity bounds, replay the
// matching-and-tree argument and sweep the chain family.
//
// Exit status: 0 success, 1 a bound or trace check failed, 2 usage or
// input error.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "avec/avec.h"

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct InputError {
  std::string message;
};

void Check(avec_status s) {
  if (s != AVEC_OK) throw InputError{avec_last_error()};
}

struct GraphDeleter {
  void operator()(avec_graph* g) const { avec_graph_free(g); }
};
using GraphPtr = std::unique_ptr<avec_graph, GraphDeleter>;

struct StringDeleter {
  void operator()(char* s) const { avec_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

GraphPtr ReadGraph(const std::string& path) {
  avec_graph* g = nullptr;
  Check(avec_graph_read(path.c_str(), &g));
  return GraphPtr(g);
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{"cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text) || !out.flush()) throw InputError{"cannot write " + path};
}

std::string MetaPath(const std::string& graph_path) { return graph_path + ".meta.json"; }

// Writes the graph and its metadata sidecar, or the graph alone to stdout.
void EmitGenerated(const GraphPtr& g, const CString& meta, const std::string& out,
                   const std::string& format) {
  avec_format f = format == "graph6" ? AVEC_FORMAT_GRAPH6 : AVEC_FORMAT_EDGELIST;
  if (out.empty()) {
    char* text = nullptr;
    Check(avec_graph_format(g.get(), f, &text));
    CString owned(text);
    std::cout << owned.get();
    return;
  }
  Check(avec_graph_write(g.get(), out.c_str(), f));
  WriteFile(MetaPath(out), meta.get());
}

std::pair<std::uint32_t, std::uint32_t> ParseRange(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) throw InputError{"--ell-range expects A..B, got " + text};
  try {
    std::size_t used = 0;
    unsigned long a = std::stoul(text.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument(text);
    std::string rest = text.substr(dots + 2);
    unsigned long b = std::stoul(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    return {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
  } catch (const std::exception&) {
    throw InputError{"--ell-range expects A..B, got " + text};
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Average eccentricity bounds for graphs of given girth and minimum degree"};
  app.require_subcommand(1);

  std::string out_path;
  std::string format = "edgelist";
  auto* gen = app.add_subcommand("gen", "generate a graph");
  gen->require_subcommand(1);

  std::uint64_t q = 0;
  auto* reiman = gen->add_subcommand("reiman", "point-line incidence graph of PG(2, q)");
  reiman->add_option("--q", q, "prime power")->required();
  reiman->add_option("--out", out_path, "output path (stdout if omitted)");
  reiman->add_option("--format", format)->check(CLI::IsMember({"edgelist", "graph6"}));

  std::uint32_t delta = 0;
  std::uint32_t ell = 0;
  std::string head_path;
  std::optional<std::uint32_t> head_u;
  std::optional<std::uint32_t> head_v;
  auto* chain = gen->add_subcommand("chain", "chain of Reiman graphs");
  chain->add_option("--delta", delta, "minimum degree; delta - 1 must be a prime power")->required();
  chain->add_option("--ell", ell, "number of copies, even")->required();
  chain->add_option("--head", head_path, "graph replacing the first copy");
  chain->add_option("--head-u", head_u, "head vertex u (default: first edge)");
  chain->add_option("--head-v", head_v, "head vertex v joined to the next copy");
  chain->add_option("--out", out_path, "output path (stdout if omitted)");
  chain->add_option("--format", format)->check(CLI::IsMember({"edgelist", "graph6"}));

  std::string input;
  std::string meta_path;
  bool as_json = false;
  bool as_csv = false;
  auto* analyze = app.add_subcommand("analyze", "evaluate every bound on a graph");
  analyze->add_option("path", input)->required();
  auto* json_flag = analyze->add_flag("--json", as_json, "JSON report (default)");
  analyze->add_flag("--csv", as_csv, "CSV row")->excludes(json_flag);
  analyze->add_option("--meta", meta_path, "generator metadata (default: PATH.meta.json)");

  auto* audit = app.add_subcommand("audit", "ball-size audit of every edge");
  audit->add_option("path", input)->required();

  std::string variant;
  std::optional<std::int64_t> anchor;
  std::string trace_path;
  auto* replay = app.add_subcommand("replay", "replay the matching-and-tree argument");
  replay->add_option("path", input)->required();
  replay->add_option("--variant", variant)->required()->check(CLI::IsMember({"girth6", "maxdeg"}));
  replay->add_option("--anchor", anchor, "max-degree vertex on e_1 (default: smallest)");
  replay->add_option("--trace", trace_path, "write the trace JSON here instead of stdout");

  std::string family;
  std::vector<std::uint32_t> deltas;
  std::string range;
  std::string csv_path;
  auto* sweep = app.add_subcommand("sweep", "bound report rows for a parameter range");
  sweep->add_option("--family", family)->required()->check(CLI::IsMember({"chain"}));
  sweep->add_option("--delta", deltas)->required();
  sweep->add_option("--ell-range", range, "A..B")->required();
  sweep->add_option("--csv", csv_path, "output path, - for stdout")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "avec: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*reiman) {
      avec_graph* g = nullptr;
      char* meta = nullptr;
      Check(avec_gen_reiman(q, &g, &meta));
      EmitGenerated(GraphPtr(g), CString(meta), out_path, format);
      return kOk;
    }
    if (*chain) {
      GraphPtr head;
      std::uint32_t u = 0;
      std::uint32_t v = 0;
      if (!head_path.empty()) {
        head = ReadGraph(head_path);
        if (head_u.has_value() != head_v.has_value()) {
          throw InputError{"--head-u and --head-v go together"};
        }
        if (head_u) {
          u = *head_u;
          v = *head_v;
        } else {
          std::uint32_t first[2] = {0, 0};
          if (avec_graph_edges(head.get(), first, 1) == 0) throw InputError{"head has no edges"};
          u = first[0];
          v = first[1];
        }
      } else if (head_u || head_v) {
        throw InputError{"--head-u/--head-v need --head"};
      }
      avec_graph* g = nullptr;
      char* meta = nullptr;
      Check(avec_gen_chain(delta, ell, head.get(), u, v, &g, &meta));
      EmitGenerated(GraphPtr(g), CString(meta), out_path, format);
      return kOk;
    }
    if (*analyze) {
      GraphPtr g = ReadGraph(input);
      std::string meta;
      if (!meta_path.empty()) {
        meta = ReadFile(meta_path);
      } else if (std::filesystem::exists(MetaPath(input))) {
        meta = ReadFile(MetaPath(input));
      }
      char* out = nullptr;
      int pass = 0;
      Check(avec_analyze(g.get(), meta.empty() ? nullptr : meta.c_str(),
                         as_csv ? AVEC_REPORT_CSV : AVEC_REPORT_JSON, &out, &pass));
      CString owned(out);
      std::cout << owned.get();
      return pass ? kOk : kCheckFailed;
    }
    if (*audit) {
      GraphPtr g = ReadGraph(input);
      char* out = nullptr;
      int pass = 0;
      Check(avec_audit_balls(g.get(), &out, &pass));
      CString owned(out);
      std::cout << owned.get();
      return pass ? kOk : kCheckFailed;
    }
    if (*replay) {
      GraphPtr g = ReadGraph(input);
      if (variant == "girth6" && anchor) throw InputError{"--anchor applies to --variant maxdeg"};
      if (anchor && *anchor < 0) throw InputError{"--anchor must be a vertex index"};
      char* out = nullptr;
      int pass = 0;
      Check(avec_replay(g.get(), variant == "maxdeg" ? AVEC_VARIANT_MAXDEG : AVEC_VARIANT_GIRTH6,
                        anchor.value_or(-1), &out, &pass));
      CString owned(out);
      if (trace_path.empty()) {
        std::cout << owned.get();
      } else {
        WriteFile(trace_path, owned.get());
        std::cout << (pass ? "pass" : "fail") << "\n";
      }
      return pass ? kOk : kCheckFailed;
    }
    if (*sweep) {
      auto [lo, hi] = ParseRange(range);
      char* out = nullptr;
      int pass = 0;
      Check(avec_sweep_chain(deltas.data(), deltas.size(), lo, hi, &out, &pass));
      CString owned(out);
      if (csv_path == "-") {
        std::cout << owned.get();
      } else {
        WriteFile(csv_path, owned.get());
      }
      return pass ? kOk : kCheckFailed;
    }
  } catch (const InputError& e) {
    std::cerr << "avec: " << e.message << "\n";
    return kUsage;
  }
  return kUsage;
}
