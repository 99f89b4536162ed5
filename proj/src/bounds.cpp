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

#include "avec/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "avec/error.hpp"
#include "bfs.hpp"

namespace avec {
namespace {

Rational R(std::int64_t v) { return Rational(v); }

std::int64_t CeilDiv(std::int64_t a, std::int64_t b) { return Rational(a, b).Ceil(); }

void RequireMinDegreeThree(std::uint32_t delta) {
  if (delta < 3) {
    throw Error(ErrorCode::kOutOfRange,
                "minimum degree " + std::to_string(delta) + " is below 3");
  }
}

// (9/2) * ceil(n / ball) + 8
BoundValue CeilingBound(std::uint64_t n, std::int64_t ball) {
  Rational v = Rational(9, 2) * R(CeilDiv(static_cast<std::int64_t>(n), ball)) + R(8);
  return {v.ToDouble(), v};
}

// (n - big) / (2 ball) * (9n + 3 big) / n + 21
BoundValue MaxDegreeBound(std::uint64_t n, std::int64_t ball, double big) {
  const auto nd = static_cast<double>(n);
  double v = (nd - big) / (2.0 * static_cast<double>(ball)) * (9.0 * nd + 3.0 * big) / nd + 21.0;
  return {v, std::nullopt};
}

}  // namespace

StructuralConstants ComputeStructuralConstants(std::uint32_t delta,
                                               std::optional<std::uint32_t> max_degree) {
  RequireMinDegreeThree(delta);
  if (max_degree && *max_degree < delta) {
    throw Error(ErrorCode::kOutOfRange, "maximum degree below minimum degree");
  }
  const std::int64_t d = delta;
  StructuralConstants sc;
  sc.delta = delta;
  sc.delta_star = 2 * d * d - 2 * d + 2;
  sc.delta_circ = 2 * d * d - 5 * d + (d % 2 == 0 ? 5 : 7);
  if (max_degree) {
    const double big = *max_degree;
    const double dd = delta;
    sc.max_degree = max_degree;
    sc.max_degree_star = big * dd + (dd - 1.0) * std::sqrt(big * (dd - 2.0)) + 1.5;
    sc.max_degree_circ = big * (dd - 1.0) + (dd - 2.0) * std::sqrt(big * (dd - 3.0)) + 1.5;
  }
  return sc;
}

Rational PathAvec(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "path of order 0");
  const auto nn = static_cast<std::int64_t>(n);
  // floor(3n^2/4 - n/2) = floor((3n^2 - 2n) / 4)
  return Rational(Rational(3 * nn * nn - 2 * nn, 4).Floor(), nn);
}

std::string_view BoundName(BoundKind kind) {
  switch (kind) {
    case BoundKind::kPath: return "path_T11";
    case BoundKind::kGeneral: return "general_eq1";
    case BoundKind::kGirthSix: return "girth6_T31";
    case BoundKind::kC4C5Free: return "c4c5_T33";
    case BoundKind::kGirthSixMaxDegree: return "girth6_maxdeg_T41";
    case BoundKind::kC4C5FreeMaxDegree: return "c4c5_maxdeg_T44";
    case BoundKind::kChainLower: return "lower_T32";
  }
  return "unknown";
}

std::optional<BoundKind> ParseBoundName(std::string_view name) {
  for (BoundKind k : kAllBounds) {
    if (BoundName(k) == name) return k;
  }
  return std::nullopt;
}

BoundValue UpperBound(BoundKind kind, std::uint64_t n, std::uint32_t delta,
                      std::optional<std::uint32_t> max_degree) {
  switch (kind) {
    case BoundKind::kPath: {
      Rational v = PathAvec(n);
      return {v.ToDouble(), v};
    }
    case BoundKind::kGeneral: {
      Rational v = Rational(9 * static_cast<std::int64_t>(n), 4 * (static_cast<std::int64_t>(delta) + 1)) +
                   Rational(15, 4);
      return {v.ToDouble(), v};
    }
    case BoundKind::kGirthSix:
      return CeilingBound(n, ComputeStructuralConstants(delta).delta_star);
    case BoundKind::kC4C5Free:
      return CeilingBound(n, ComputeStructuralConstants(delta).delta_circ);
    case BoundKind::kGirthSixMaxDegree:
    case BoundKind::kC4C5FreeMaxDegree: {
      if (!max_degree) {
        throw Error(ErrorCode::kMissingParameter,
                    std::string(BoundName(kind)) + " needs the maximum degree");
      }
      auto sc = ComputeStructuralConstants(delta, max_degree);
      if (kind == BoundKind::kGirthSixMaxDegree) {
        return MaxDegreeBound(n, sc.delta_star, *sc.max_degree_star);
      }
      return MaxDegreeBound(n, sc.delta_circ, *sc.max_degree_circ);
    }
    case BoundKind::kChainLower: {
      Rational v = SharpnessLower(static_cast<std::int64_t>(n), delta);
      return {v.ToDouble(), v};
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown bound");
}

Rational SharpnessLower(std::int64_t n, std::uint32_t delta) {
  auto sc = ComputeStructuralConstants(delta);
  return Rational(9 * n, 2 * sc.delta_star) - R(5);
}

BallAudit AuditBalls(const Graph& g) {
  if (g.order() == 0 || !g.IsConnected()) {
    throw Error(ErrorCode::kDisconnectedGraph, "ball audit needs a connected graph");
  }
  const auto delta = static_cast<std::uint32_t>(g.MinDegree());
  const auto max_degree = static_cast<std::uint32_t>(g.MaxDegree());
  RequireMinDegreeThree(delta);
  const CycleScan scan = ScanForbiddenCycles(g);
  if (!scan.c4c5_free()) {
    throw Error(ErrorCode::kNotApplicable, "graph contains a 4-cycle or a 5-cycle");
  }
  const auto sc = ComputeStructuralConstants(delta, max_degree);

  BallAudit audit;
  audit.girth_six = scan.girth_six();
  audit.delta = delta;
  audit.max_degree = max_degree;
  audit.edge_threshold = audit.girth_six ? sc.delta_star : sc.delta_circ;
  audit.vertex_threshold = audit.girth_six ? *sc.max_degree_star : *sc.max_degree_circ;

  internal::Bfs bfs(g.order());
  auto ball_size = [&](std::span<const Vertex> src, std::int32_t radius) {
    bfs.Run(g, src);
    return static_cast<std::size_t>(
        std::count_if(bfs.order().begin(), bfs.order().end(),
                      [&](Vertex x) { return bfs.dist()[x] <= radius; }));
  };

  audit.pass = true;
  audit.min_edge_margin = std::numeric_limits<std::int64_t>::max();
  for (const Edge& e : g.edges()) {
    const Vertex src[] = {e.u, e.v};
    EdgeBallItem item{e, ball_size(src, 2), 0};
    item.margin = static_cast<std::int64_t>(item.ball_size) - audit.edge_threshold;
    audit.min_edge_margin = std::min(audit.min_edge_margin, item.margin);
    audit.pass = audit.pass && item.margin >= 0;
    audit.edges.push_back(item);
  }
  audit.min_vertex_margin = std::numeric_limits<double>::infinity();
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != max_degree) continue;
    VertexBallItem item{v, ball_size(std::span<const Vertex>(&v, 1), 3), 0.0};
    item.margin = static_cast<double>(item.ball_size) - audit.vertex_threshold;
    audit.min_vertex_margin = std::min(audit.min_vertex_margin, item.margin);
    audit.pass = audit.pass && item.margin >= -kBoundTolerance;
    audit.vertices.push_back(item);
  }
  return audit;
}

const BoundEntry& BoundReport::entry(BoundKind kind) const {
  for (const BoundEntry& b : bounds) {
    if (b.kind == kind) return b;
  }
  throw Error(ErrorCode::kInvalidArgument, "bound not in report");
}

BoundReport Analyze(const Graph& g, FamilyTag family) {
  const EccentricityProfile profile = ComputeEccentricities(g);
  const CycleScan scan = ScanForbiddenCycles(g);

  BoundReport r;
  r.n = g.order();
  r.delta = static_cast<std::uint32_t>(g.MinDegree());
  r.max_degree = static_cast<std::uint32_t>(g.MaxDegree());
  r.girth_six = scan.girth_six();
  r.c4c5_free = scan.c4c5_free();
  r.girth = ComputeGirth(g);
  r.family = family;
  r.ex_total = profile.ex_total;
  r.avec = profile.avec;
  r.diameter = profile.diameter;
  r.radius = profile.radius;

  const bool degree_ok = r.delta >= 3;
  for (BoundKind kind : kAllBounds) {
    BoundEntry b;
    b.kind = kind;
    b.is_lower = kind == BoundKind::kChainLower;
    switch (kind) {
      case BoundKind::kPath:
      case BoundKind::kGeneral:
        b.applicable = true;
        break;
      case BoundKind::kGirthSix:
      case BoundKind::kGirthSixMaxDegree:
        b.applicable = degree_ok && r.girth_six;
        break;
      case BoundKind::kC4C5Free:
      case BoundKind::kC4C5FreeMaxDegree:
        b.applicable = degree_ok && r.c4c5_free;
        break;
      case BoundKind::kChainLower:
        b.applicable = degree_ok && family == FamilyTag::kChain;
        break;
    }
    if (!b.applicable) {
      r.bounds.push_back(b);
      continue;
    }
    b.value = UpperBound(kind, r.n, r.delta, r.max_degree);
    bool violated = false;
    if (b.value.exact) {
      b.exact_slack = b.is_lower ? r.avec - *b.value.exact : *b.value.exact - r.avec;
      b.slack = b.exact_slack->ToDouble();
      violated = *b.exact_slack < Rational(0);
    } else {
      b.slack = b.is_lower ? r.avec.ToDouble() - b.value.value : b.value.value - r.avec.ToDouble();
      violated = *b.slack < -kBoundTolerance;
    }
    if (violated) {
      r.violations.push_back(std::string(BoundName(kind)) + ": avec " + r.avec.ToString() +
                             (b.is_lower ? " is below " : " exceeds ") + std::to_string(b.value.value));
    }
    r.bounds.push_back(b);
  }
  if (r.entry(BoundKind::kGirthSix).applicable) {
    r.notes.emplace_back(
        "girth6_T31 uses additive constant +8; a +7 form of the same bound also circulates");
  }
  return r;
}

}  // namespace avec
