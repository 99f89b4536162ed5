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

#include "avec/report_io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <vector>

#include <nlohmann/json.hpp>

#include "avec/error.hpp"

namespace avec {
namespace {

using Json = nlohmann::ordered_json;

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

Json ToJson(const Rational& r) { return Json{{"num", r.num()}, {"den", r.den()}}; }

Json ToJson(const Value& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return ToJson(*r);
  double d = std::get<double>(v);
  return std::isfinite(d) ? Json(d) : Json(nullptr);
}

Json ToJson(Edge e) { return Json::array({e.u, e.v}); }

Json ToJson(std::span<const Edge> edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back(ToJson(e));
  return out;
}

template <typename T>
Json Optional(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::string Number(double v) {
  if (!std::isfinite(v)) return "";
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

std::string_view FamilyName(FamilyTag f) { return f == FamilyTag::kChain ? "chain" : "none"; }

}  // namespace

std::string ReportJson(const BoundReport& r) {
  Json bounds = Json::array();
  for (const BoundEntry& b : r.bounds) {
    Json e;
    e["name"] = BoundName(b.kind);
    e["kind"] = b.is_lower ? "lower" : "upper";
    e["applicable"] = b.applicable;
    e["value"] = b.applicable ? Json(b.value.value) : Json(nullptr);
    e["exact"] = b.applicable && b.value.exact ? ToJson(*b.value.exact) : Json(nullptr);
    e["slack"] = Optional(b.slack);
    bounds.push_back(std::move(e));
  }
  Json j;
  j["n"] = r.n;
  j["delta"] = r.delta;
  j["max_degree"] = r.max_degree;
  j["girth_class"] = r.girth_six ? "girth_ge_6" : "girth_lt_6";
  j["c4c5_class"] = r.c4c5_free ? "c4c5_free" : "has_c4_or_c5";
  j["avec"] = Json{{"num", r.ex_total}, {"den", r.n}};
  j["bounds"] = std::move(bounds);
  j["violations"] = r.violations;
  j["girth"] = Optional(r.girth);
  j["ex_total"] = r.ex_total;
  j["avec_reduced"] = ToJson(r.avec);
  j["diameter"] = r.diameter;
  j["radius"] = r.radius;
  j["family"] = FamilyName(r.family);
  j["notes"] = r.notes;
  return Dump(j);
}

std::string AuditJson(const BallAudit& a) {
  Json edges = Json::array();
  for (const EdgeBallItem& e : a.edges) {
    edges.push_back(Json{{"edge", ToJson(e.edge)}, {"ball_size", e.ball_size}, {"margin", e.margin}});
  }
  Json vertices = Json::array();
  for (const VertexBallItem& v : a.vertices) {
    vertices.push_back(Json{{"vertex", v.vertex}, {"ball_size", v.ball_size}, {"margin", v.margin}});
  }
  Json j;
  j["class"] = a.girth_six ? "girth_ge_6" : "c4c5_free";
  j["delta"] = a.delta;
  j["max_degree"] = a.max_degree;
  j["edge_threshold"] = a.edge_threshold;
  j["vertex_threshold"] = a.vertex_threshold;
  j["min_edge_margin"] = a.min_edge_margin;
  j["min_vertex_margin"] = a.min_vertex_margin;
  j["pass"] = a.pass;
  j["edges"] = std::move(edges);
  j["vertices"] = std::move(vertices);
  return Dump(j);
}

std::string TraceJson(const ProofTrace& t) {
  const StructuralConstants& c = t.constants;
  Json constants{{"delta_star", c.delta_star}, {"delta_circ", c.delta_circ}};
  constants["max_degree"] = Optional(c.max_degree);
  constants["max_degree_star"] = Optional(c.max_degree_star);

  Json matching;
  matching["edges"] = ToJson(t.matching.edges);
  matching["anchor"] = Optional(t.matching.anchor);
  matching["pairwise_distance"] = t.matching.pairwise;

  Json tree;
  tree["edges"] = ToJson(t.tree.tree.edges());
  tree["connectors"] = ToJson(t.tree.connectors);
  tree["owner"] = t.tree.owner;
  tree["assignment"] = t.tree.assignment;

  Json cbar = Json::array();
  for (const Edge& e : t.matching.edges) {
    cbar.push_back(Json{{"edge", ToJson(e)},
                        {"weight", t.weights.cbar[*t.tree.tree.EdgeIndex(e.u, e.v)]}});
  }
  Json cprime = Json::array();
  for (const Value& v : t.weights.cprime) cprime.push_back(ToJson(v));
  Json weights;
  weights["c"] = t.weights.c;
  weights["cbar"] = std::move(cbar);
  weights["cprime"] = std::move(cprime);
  weights["normalized_total"] = ToJson(t.weights.normalized_total);

  Json values;
  values["avec_graph"] = ToJson(t.avec_graph);
  values["avec_tree"] = ToJson(t.avec_tree);
  values["avec_c_tree"] = ToJson(t.avec_c_tree);
  values["avec_cbar_line"] = ToJson(t.avec_cbar_line);
  values["avec_cbar_target"] = t.avec_cbar_target ? ToJson(*t.avec_cbar_target) : Json(nullptr);
  values["avec_cprime_target"] = t.avec_cprime_target ? ToJson(*t.avec_cprime_target) : Json(nullptr);
  values["ecc_target_e1"] = Optional(t.ecc_target_e1);
  values["final_bound"] = ToJson(t.final_bound);

  Json checks = Json::array();
  for (const StepCheck& s : t.checks) {
    checks.push_back(Json{{"name", s.name},
                          {"relation", s.relation},
                          {"lhs", ToJson(s.lhs)},
                          {"rhs", ToJson(s.rhs)},
                          {"pass", s.pass}});
  }

  Json j;
  j["variant"] = VariantName(t.variant);
  j["n"] = t.n;
  j["delta"] = t.delta;
  j["max_degree"] = t.max_degree;
  j["girth_six"] = t.girth_six;
  j["c4c5_free"] = t.c4c5_free;
  j["constants"] = std::move(constants);
  j["checks"] = std::move(checks);
  j["values"] = std::move(values);
  j["matching"] = std::move(matching);
  j["tree"] = std::move(tree);
  j["weights"] = std::move(weights);
  j["notes"] = t.notes;
  j["pass"] = t.pass;
  return Dump(j);
}

std::string MetaJson(const LabeledGraph& g) {
  const Construction& c = g.construction;
  Json designated = Json::object();
  for (const auto& [name, v] : g.designated) designated[name] = v;
  Json j;
  j["construction"] = c.name;
  j["n"] = g.graph.order();
  j["q"] = c.q;
  j["modulus"] = c.modulus;
  j["delta"] = c.delta;
  j["ell"] = c.ell;
  j["custom_head"] = c.custom_head;
  j["designated"] = std::move(designated);
  return Dump(j);
}

FamilyTag GraphMeta::family() const {
  return construction.name == "chain" && !construction.custom_head ? FamilyTag::kChain
                                                                    : FamilyTag::kNone;
}

GraphMeta ParseMeta(std::string_view text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw Error(ErrorCode::kParseError, "metadata is not a JSON object");
  }
  GraphMeta m;
  try {
    m.construction.name = j.value("construction", std::string());
    m.construction.q = j.value("q", 0u);
    m.construction.modulus = j.value("modulus", std::string());
    m.construction.delta = j.value("delta", 0u);
    m.construction.ell = j.value("ell", 0u);
    m.construction.custom_head = j.value("custom_head", false);
    if (j.contains("designated")) {
      for (const auto& [name, v] : j.at("designated").items()) {
        m.designated.emplace(name, v.get<Vertex>());
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("metadata: ") + e.what());
  }
  return m;
}

std::string CsvHeader() {
  return "n,delta,max_degree,ell,avec_num,avec_den,lower_T32,girth6_T31,slack_upper,slack_lower,pass\n";
}

std::string CsvRow(const BoundReport& r, std::uint32_t ell) {
  const BoundEntry& lower = r.entry(BoundKind::kChainLower);
  const BoundEntry& upper = r.entry(BoundKind::kGirthSix);
  auto value = [](const BoundEntry& b) { return b.applicable ? Number(b.value.value) : ""; };
  auto slack = [](const BoundEntry& b) { return b.slack ? Number(*b.slack) : ""; };
  std::string row;
  for (const std::string& cell :
       {std::to_string(r.n), std::to_string(r.delta), std::to_string(r.max_degree),
        std::to_string(ell), std::to_string(r.ex_total), std::to_string(r.n), value(lower),
        value(upper), slack(upper), slack(lower)}) {
    row += cell;
    row += ',';
  }
  row += r.violations.empty() ? "1" : "0";
  row += '\n';
  return row;
}

std::string SweepChainCsv(std::span<const std::uint32_t> deltas, std::uint32_t ell_lo,
                          std::uint32_t ell_hi) {
  std::vector<std::uint32_t> ds(deltas.begin(), deltas.end());
  std::sort(ds.begin(), ds.end());
  ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
  if (ds.empty() || ell_lo > ell_hi) {
    throw Error(ErrorCode::kInvalidChainSpec, "empty sweep range");
  }
  std::string out = CsvHeader();
  for (std::uint32_t delta : ds) {
    for (std::uint32_t ell = ell_lo + (ell_lo % 2); ell <= ell_hi; ell += 2) {
      LabeledGraph g = Chain({delta, ell, std::nullopt});
      out += CsvRow(Analyze(g.graph, FamilyTag::kChain), ell);
    }
  }
  return out;
}

}  // namespace avec
