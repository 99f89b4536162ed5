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

#ifndef AVEC_GENERATORS_HPP_
#define AVEC_GENERATORS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "avec/graph.hpp"

namespace avec {

// How a generated graph was built; serialized as generator metadata.
struct Construction {
  std::string name;         // "reiman", "chain" or "classic"
  std::uint32_t q = 0;      // field order, 0 when not field-based
  std::string modulus;      // irreducible polynomial of GF(q)
  std::uint32_t delta = 0;  // chain minimum degree
  std::uint32_t ell = 0;    // chain length
  bool custom_head = false; // chain whose first copy was user supplied
};

struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels;
  std::map<std::string, Vertex, std::less<>> designated;
  Construction construction;

  // Throws kInvalidArgument for unknown names.
  Vertex Designated(std::string_view name) const;
};

// Point-line incidence graph of the projective plane over GF(q).
//
// Vertices 0..q^2+q are the points (1-dimensional subspaces of GF(q)^3) as
// normalized triples, followed by the lines (2-dimensional subspaces) as
// normalized normal covectors; both blocks are in lexicographic order of the
// element indices, and a point lies on a line iff their dot product is zero.
// The designated pair "u", "v" is the lexicographically smallest edge.
LabeledGraph Reiman(std::uint64_t q);

struct ChainSpec {
  std::uint32_t delta = 0;
  std::uint32_t ell = 0;
  // Replaces the first copy. Must designate an adjacent pair "u", "v";
  // the chain continues from its "v".
  std::optional<LabeledGraph> head;
};

// Copies H^1..H^ell laid out consecutively: H^1 is Reiman(delta - 1) or the
// head, H^2..H^(ell-1) are Reiman(delta - 1) minus its designated edge, and
// H^ell is Reiman(delta - 1). Consecutive copies are joined by v^(t) u^(t+1).
// Designates "u^t", "v^t" for every copy and, when they exist, "u*" (first
// copy, distance 3 from v^1) and "v*" (last copy, distance 3 from u^ell).
// Throws kInvalidChainSpec with the reason.
LabeledGraph Chain(const ChainSpec& spec);

enum class ClassicKind { kPath, kCycle, kStar, kComplete };

// Star of order n has center 0. Throws kInvalidArgument for n == 0 and for
// cycles with n < 3.
Graph Classic(ClassicKind kind, std::size_t n);

}  // namespace avec

#endif  // AVEC_GENERATORS_HPP_
