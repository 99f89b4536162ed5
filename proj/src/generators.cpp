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

#include "avec/generators.hpp"

#include <array>
#include <string>

#include "avec/error.hpp"
#include "avec/finite_field.hpp"
#include "bfs.hpp"

namespace avec {
namespace {

using Triple = std::array<std::uint32_t, 3>;

// Nonzero triples whose leftmost nonzero coordinate is 1, lexicographic.
std::vector<Triple> NormalizedTriples(std::uint32_t q) {
  std::vector<Triple> out;
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) {
      for (std::uint32_t c = 0; c < q; ++c) {
        Triple t{a, b, c};
        std::uint32_t lead = a != 0 ? a : (b != 0 ? b : c);
        if (lead == 1) out.push_back(t);
      }
    }
  }
  return out;
}

std::string TripleLabel(const char* open, const Triple& t, const char* close) {
  return open + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
         std::to_string(t[2]) + close;
}

[[noreturn]] void BadSpec(const std::string& reason) {
  throw Error(ErrorCode::kInvalidChainSpec, reason);
}

// Smallest vertex at distance exactly 3 from `from` within a single copy,
// shifted by the copy's offset.
std::optional<Vertex> DistanceThreeWitness(const Graph& copy, Vertex from, Vertex offset) {
  internal::Bfs bfs(copy.order());
  bfs.Run(copy, from);
  for (Vertex x = 0; x < copy.order(); ++x) {
    if (bfs.dist()[x] == 3) return offset + x;
  }
  return std::nullopt;
}

void ValidateHead(const LabeledGraph& head, std::uint32_t delta) {
  const Graph& h = head.graph;
  auto u = head.designated.find("u");
  auto v = head.designated.find("v");
  if (u == head.designated.end() || v == head.designated.end()) {
    BadSpec("head graph must designate vertices \"u\" and \"v\"");
  }
  if (u->second >= h.order() || v->second >= h.order() || !h.HasEdge(u->second, v->second)) {
    BadSpec("head vertices u and v must be adjacent");
  }
  if (h.MinDegree() < delta) {
    BadSpec("head minimum degree " + std::to_string(h.MinDegree()) + " is below delta " +
            std::to_string(delta));
  }
  if (!h.IsConnected()) BadSpec("head graph is disconnected");
  Girth girth = ComputeGirth(h);
  if (girth && *girth < 6) BadSpec("head girth " + std::to_string(*girth) + " is below 6");
}

}  // namespace

Vertex LabeledGraph::Designated(std::string_view name) const {
  auto it = designated.find(name);
  if (it == designated.end()) {
    throw Error(ErrorCode::kInvalidArgument, "no designated vertex \"" + std::string(name) + "\"");
  }
  return it->second;
}

LabeledGraph Reiman(std::uint64_t q) {
  const FiniteField field = FiniteField::Make(q);
  const std::vector<FieldElement> elems = field.Elements();
  const std::vector<Triple> triples = NormalizedTriples(field.q());
  const auto side = static_cast<Vertex>(triples.size());

  // Products of element indices, tabulated once.
  std::vector<std::uint32_t> mul(static_cast<std::size_t>(q) * q);
  std::vector<std::uint32_t> add(static_cast<std::size_t>(q) * q);
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) {
      mul[a * q + b] = field.Index(field.Mul(elems[a], elems[b]));
      add[a * q + b] = field.Index(field.Add(elems[a], elems[b]));
    }
  }

  std::vector<Edge> edges;
  for (Vertex i = 0; i < side; ++i) {
    for (Vertex j = 0; j < side; ++j) {
      const Triple& pt = triples[i];
      const Triple& ln = triples[j];
      std::uint32_t dot = add[mul[pt[0] * q + ln[0]] * q + mul[pt[1] * q + ln[1]]];
      dot = add[dot * q + mul[pt[2] * q + ln[2]]];
      if (dot == 0) edges.push_back({i, side + j});
    }
  }

  LabeledGraph out;
  out.graph = Graph::Build(2 * static_cast<std::size_t>(side), edges);
  for (const Triple& t : triples) out.labels.push_back(TripleLabel("P(", t, ")"));
  for (const Triple& t : triples) out.labels.push_back(TripleLabel("L[", t, "]"));
  const Edge& uv = out.graph.edges().front();
  out.designated.emplace("u", uv.u);
  out.designated.emplace("v", uv.v);
  out.construction.name = "reiman";
  out.construction.q = field.q();
  out.construction.modulus = field.ModulusString();
  return out;
}

LabeledGraph Chain(const ChainSpec& spec) {
  if (spec.delta < 3) BadSpec("delta must be at least 3");
  if (spec.ell < 2 || spec.ell % 2 != 0) BadSpec("ell must be even and at least 2");
  if (!FactorPrimePower(spec.delta - 1)) {
    BadSpec("delta - 1 = " + std::to_string(spec.delta - 1) + " is not a prime power");
  }
  if (spec.head) ValidateHead(*spec.head, spec.delta);

  const LabeledGraph base = Reiman(spec.delta - 1);
  const Vertex bu = base.Designated("u");
  const Vertex bv = base.Designated("v");
  std::vector<Edge> base_minus;
  for (const Edge& e : base.graph.edges()) {
    if (!(e.u == bu && e.v == bv)) base_minus.push_back(e);
  }
  const Graph middle = Graph::Build(base.graph.order(), base_minus);

  LabeledGraph out;
  std::vector<Edge> edges;
  std::vector<Vertex> offsets;
  std::vector<Vertex> us;
  std::vector<Vertex> vs;
  Vertex offset = 0;
  for (std::uint32_t t = 1; t <= spec.ell; ++t) {
    const bool use_head = t == 1 && spec.head.has_value();
    const LabeledGraph& src = use_head ? *spec.head : base;
    const Graph& copy = (t == 1 || t == spec.ell) ? src.graph : middle;
    for (const Edge& e : copy.edges()) edges.push_back({offset + e.u, offset + e.v});
    const std::string tag = "H^" + std::to_string(t) + ":";
    for (Vertex x = 0; x < copy.order(); ++x) {
      out.labels.push_back(tag + (x < src.labels.size() ? src.labels[x] : std::to_string(x)));
    }
    offsets.push_back(offset);
    us.push_back(offset + src.Designated("u"));
    vs.push_back(offset + src.Designated("v"));
    out.designated.emplace("u^" + std::to_string(t), us.back());
    out.designated.emplace("v^" + std::to_string(t), vs.back());
    offset += static_cast<Vertex>(copy.order());
  }
  for (std::uint32_t t = 0; t + 1 < spec.ell; ++t) edges.push_back({vs[t], us[t + 1]});
  out.graph = Graph::Build(offset, edges);

  const Graph& first = spec.head ? spec.head->graph : base.graph;
  if (auto w = DistanceThreeWitness(first, vs.front() - offsets.front(), offsets.front())) {
    out.designated.emplace("u*", *w);
  }
  if (auto w = DistanceThreeWitness(base.graph, us.back() - offsets.back(), offsets.back())) {
    out.designated.emplace("v*", *w);
  }

  out.construction.name = "chain";
  out.construction.q = base.construction.q;
  out.construction.modulus = base.construction.modulus;
  out.construction.delta = spec.delta;
  out.construction.ell = spec.ell;
  out.construction.custom_head = spec.head.has_value();
  return out;
}

Graph Classic(ClassicKind kind, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "classic graph of order 0");
  std::vector<Edge> edges;
  const auto last = static_cast<Vertex>(n - 1);
  switch (kind) {
    case ClassicKind::kPath:
      for (Vertex i = 0; i < last; ++i) edges.push_back({i, i + 1});
      break;
    case ClassicKind::kCycle:
      if (n < 3) throw Error(ErrorCode::kInvalidArgument, "cycle needs at least 3 vertices");
      for (Vertex i = 0; i < last; ++i) edges.push_back({i, i + 1});
      edges.push_back({0, last});
      break;
    case ClassicKind::kStar:
      for (Vertex i = 1; i <= last; ++i) edges.push_back({0, i});
      break;
    case ClassicKind::kComplete:
      for (Vertex i = 0; i <= last; ++i) {
        for (Vertex j = i + 1; j <= last; ++j) edges.push_back({i, j});
      }
      break;
  }
  return Graph::Build(n, edges);
}

}  // namespace avec
