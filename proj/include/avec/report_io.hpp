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

#ifndef AVEC_REPORT_IO_HPP_
#define AVEC_REPORT_IO_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "avec/bounds.hpp"
#include "avec/generators.hpp"
#include "avec/replay.hpp"

namespace avec {

// All emitters produce deterministic, newline-terminated text. avec is
// written unreduced as {num: EX(G), den: n}.
std::string ReportJson(const BoundReport& report);
std::string AuditJson(const BallAudit& audit);
std::string TraceJson(const ProofTrace& trace);

// Generator sidecar: construction parameters and designated vertices.
std::string MetaJson(const LabeledGraph& g);

struct GraphMeta {
  Construction construction;
  std::map<std::string, Vertex, std::less<>> designated;

  // Chains with the default head carry the family lower bound.
  FamilyTag family() const;
};

// Throws kParseError.
GraphMeta ParseMeta(std::string_view json);

std::string CsvHeader();
// ell is 0 for graphs outside the chain family.
std::string CsvRow(const BoundReport& report, std::uint32_t ell);

// One row per chain(delta, ell) with ell even in [ell_lo, ell_hi], sorted by
// (delta, ell), header included. Throws kInvalidChainSpec.
std::string SweepChainCsv(std::span<const std::uint32_t> deltas, std::uint32_t ell_lo,
                          std::uint32_t ell_hi);

}  // namespace avec

#endif  // AVEC_REPORT_IO_HPP_
