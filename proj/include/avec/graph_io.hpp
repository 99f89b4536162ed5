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

#ifndef AVEC_GRAPH_IO_HPP_
#define AVEC_GRAPH_IO_HPP_

#include <string>
#include <string_view>

#include "avec/graph.hpp"

namespace avec {

enum class GraphFormat { kEdgeList, kGraph6 };

// Edge-list text: a header line "n m" followed by m lines "u v". Blank lines
// and anything after '#' are ignored. Throws kParseError on malformed input.
Graph ParseEdgeList(std::string_view text);
// Writes the header and the canonical edge list (u < v, ascending).
std::string FormatEdgeList(const Graph& g);

// graph6 interchange format; an optional ">>graph6<<" prefix is accepted.
Graph ParseGraph6(std::string_view text);
std::string FormatGraph6(const Graph& g);

// graph6 bytes all lie in 63..126, so a digit on the first content line
// marks an edge list.
GraphFormat DetectFormat(std::string_view text);
Graph ParseGraph(std::string_view text);

std::string Format(const Graph& g, GraphFormat format);

// Throws kIoError if the file cannot be read or written.
std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, std::string_view contents);

}  // namespace avec

#endif  // AVEC_GRAPH_IO_HPP_
