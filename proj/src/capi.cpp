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

#include "avec/avec.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "avec/bounds.hpp"
#include "avec/error.hpp"
#include "avec/generators.hpp"
#include "avec/graph.hpp"
#include "avec/graph_io.hpp"
#include "avec/replay.hpp"
#include "avec/report_io.hpp"

struct avec_graph {
  avec::Graph graph;
};

namespace {

thread_local std::string g_last_error;

avec_status Fail(avec_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
avec_status Guard(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return AVEC_OK;
  } catch (const avec::Error& e) {
    return Fail(static_cast<avec_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(AVEC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(AVEC_ERR_INTERNAL, e.what());
  }
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void Require(const void* p, const char* what) {
  if (p == nullptr) {
    throw avec::Error(avec::ErrorCode::kInvalidArgument, std::string(what) + " is null");
  }
}

avec_graph* Wrap(avec::Graph g) { return new avec_graph{std::move(g)}; }

}  // namespace

extern "C" {

const char* avec_last_error(void) { return g_last_error.c_str(); }

const char* avec_status_name(avec_status status) {
  switch (status) {
    case AVEC_OK:
      return "Ok";
    case AVEC_ERR_INTERNAL:
      return "Internal";
    default:
      if (status >= AVEC_ERR_INVALID_VERTEX && status <= AVEC_ERR_ARITHMETIC_OVERFLOW) {
        return avec::ErrorCodeName(static_cast<avec::ErrorCode>(status)).data();
      }
      return "Unknown";
  }
}

void avec_string_free(char* s) { std::free(s); }

avec_status avec_graph_create(size_t n, const uint32_t* edges, size_t m, avec_graph** out) {
  return Guard([&] {
    Require(out, "out");
    if (m > 0) Require(edges, "edges");
    std::vector<avec::Edge> list(m);
    for (size_t i = 0; i < m; ++i) list[i] = {edges[2 * i], edges[2 * i + 1]};
    *out = Wrap(avec::Graph::Build(n, list));
  });
}

void avec_graph_free(avec_graph* g) { delete g; }

avec_status avec_graph_parse(const char* text, avec_graph** out) {
  return Guard([&] {
    Require(text, "text");
    Require(out, "out");
    *out = Wrap(avec::ParseGraph(text));
  });
}

avec_status avec_graph_read(const char* path, avec_graph** out) {
  return Guard([&] {
    Require(path, "path");
    Require(out, "out");
    *out = Wrap(avec::ParseGraph(avec::ReadTextFile(path)));
  });
}

avec_status avec_graph_format(const avec_graph* g, avec_format format, char** out) {
  return Guard([&] {
    Require(g, "graph");
    Require(out, "out");
    auto f = format == AVEC_FORMAT_GRAPH6 ? avec::GraphFormat::kGraph6 : avec::GraphFormat::kEdgeList;
    *out = CopyString(avec::Format(g->graph, f));
  });
}

avec_status avec_graph_write(const avec_graph* g, const char* path, avec_format format) {
  return Guard([&] {
    Require(g, "graph");
    Require(path, "path");
    auto f = format == AVEC_FORMAT_GRAPH6 ? avec::GraphFormat::kGraph6 : avec::GraphFormat::kEdgeList;
    avec::WriteTextFile(path, avec::Format(g->graph, f));
  });
}

size_t avec_graph_order(const avec_graph* g) { return g ? g->graph.order() : 0; }

size_t avec_graph_size(const avec_graph* g) { return g ? g->graph.size() : 0; }

size_t avec_graph_edges(const avec_graph* g, uint32_t* edges, size_t capacity) {
  if (g == nullptr) return 0;
  auto all = g->graph.edges();
  for (size_t i = 0; i < all.size() && i < capacity && edges != nullptr; ++i) {
    edges[2 * i] = all[i].u;
    edges[2 * i + 1] = all[i].v;
  }
  return all.size();
}

avec_status avec_eccentricities(const avec_graph* g, uint32_t* ecc) {
  return Guard([&] {
    Require(g, "graph");
    Require(ecc, "ecc");
    auto p = avec::ComputeEccentricities(g->graph);
    std::copy(p.ecc.begin(), p.ecc.end(), ecc);
  });
}

avec_status avec_average_eccentricity(const avec_graph* g, int64_t* num, int64_t* den) {
  return Guard([&] {
    Require(g, "graph");
    Require(num, "num");
    Require(den, "den");
    auto p = avec::ComputeEccentricities(g->graph);
    *num = p.avec.num();
    *den = p.avec.den();
  });
}

avec_status avec_girth(const avec_graph* g, uint32_t* girth) {
  return Guard([&] {
    Require(g, "graph");
    Require(girth, "girth");
    *girth = avec::ComputeGirth(g->graph).value_or(0);
  });
}

avec_status avec_path_avec(uint64_t n, int64_t* num, int64_t* den) {
  return Guard([&] {
    Require(num, "num");
    Require(den, "den");
    auto r = avec::PathAvec(n);
    *num = r.num();
    *den = r.den();
  });
}

avec_status avec_gen_reiman(uint64_t q, avec_graph** out, char** meta) {
  return Guard([&] {
    Require(out, "out");
    avec::LabeledGraph g = avec::Reiman(q);
    std::string m = avec::MetaJson(g);
    *out = Wrap(std::move(g.graph));
    if (meta != nullptr) *meta = CopyString(m);
  });
}

avec_status avec_gen_chain(uint32_t delta, uint32_t ell, const avec_graph* head, uint32_t head_u,
                           uint32_t head_v, avec_graph** out, char** meta) {
  return Guard([&] {
    Require(out, "out");
    avec::ChainSpec spec{delta, ell, std::nullopt};
    if (head != nullptr) {
      avec::LabeledGraph h;
      h.graph = head->graph;
      h.designated = {{"u", head_u}, {"v", head_v}};
      h.construction.name = "custom";
      spec.head = std::move(h);
    }
    avec::LabeledGraph g = avec::Chain(spec);
    std::string m = avec::MetaJson(g);
    *out = Wrap(std::move(g.graph));
    if (meta != nullptr) *meta = CopyString(m);
  });
}

avec_status avec_analyze(const avec_graph* g, const char* meta_json, avec_report_format format,
                         char** out, int* pass) {
  return Guard([&] {
    Require(g, "graph");
    Require(out, "out");
    avec::FamilyTag family = avec::FamilyTag::kNone;
    std::uint32_t ell = 0;
    if (meta_json != nullptr) {
      avec::GraphMeta meta = avec::ParseMeta(meta_json);
      family = meta.family();
      ell = meta.construction.ell;
    }
    avec::BoundReport r = avec::Analyze(g->graph, family);
    *out = CopyString(format == AVEC_REPORT_CSV ? avec::CsvHeader() + avec::CsvRow(r, ell)
                                                : avec::ReportJson(r));
    if (pass != nullptr) *pass = r.violations.empty() ? 1 : 0;
  });
}

avec_status avec_audit_balls(const avec_graph* g, char** out_json, int* pass) {
  return Guard([&] {
    Require(g, "graph");
    Require(out_json, "out");
    avec::BallAudit a = avec::AuditBalls(g->graph);
    *out_json = CopyString(avec::AuditJson(a));
    if (pass != nullptr) *pass = a.pass ? 1 : 0;
  });
}

avec_status avec_replay(const avec_graph* g, avec_variant variant, int64_t anchor,
                        char** trace_json, int* pass) {
  return Guard([&] {
    Require(g, "graph");
    Require(trace_json, "out");
    std::optional<avec::Vertex> a;
    if (variant == AVEC_VARIANT_MAXDEG) {
      if (anchor >= 0) {
        if (static_cast<uint64_t>(anchor) >= g->graph.order()) {
          throw avec::Error(avec::ErrorCode::kInvalidVertex,
                            "anchor " + std::to_string(anchor) + " out of range");
        }
        a = static_cast<avec::Vertex>(anchor);
      } else {
        std::size_t best = g->graph.MaxDegree();
        for (avec::Vertex v = 0; v < g->graph.order(); ++v) {
          if (g->graph.degree(v) == best) {
            a = v;
            break;
          }
        }
      }
    }
    auto v = variant == AVEC_VARIANT_MAXDEG ? avec::ReplayVariant::kMaxDegree
                                            : avec::ReplayVariant::kGirthSix;
    avec::ProofTrace t = avec::Replay(g->graph, v, a);
    *trace_json = CopyString(avec::TraceJson(t));
    if (pass != nullptr) *pass = t.pass ? 1 : 0;
  });
}

avec_status avec_sweep_chain(const uint32_t* deltas, size_t count, uint32_t ell_lo, uint32_t ell_hi,
                             char** csv, int* pass) {
  return Guard([&] {
    Require(csv, "out");
    if (count > 0) Require(deltas, "deltas");
    std::string text = avec::SweepChainCsv({deltas, count}, ell_lo, ell_hi);
    bool ok = true;
    for (size_t pos = text.find('\n'); pos + 1 < text.size();) {
      size_t end = text.find('\n', pos + 1);
      ok = ok && text[end - 1] == '1';
      pos = end;
    }
    *csv = CopyString(text);
    if (pass != nullptr) *pass = ok ? 1 : 0;
  });
}

}  // extern "C"
