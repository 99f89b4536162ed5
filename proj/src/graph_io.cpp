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

#include "avec/graph_io.hpp"

#include <charconv>
#include <limits>
#include <fstream>
#include <sstream>
#include <vector>

#include "avec/error.hpp"

namespace avec {
namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view StripComment(std::string_view line) {
  if (auto pos = line.find('#'); pos != std::string_view::npos) line = line.substr(0, pos);
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
    line.remove_suffix(1);
  }
  while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
  return line;
}

// Splits into content lines (comments and blanks removed), keeping line numbers.
std::vector<std::pair<std::size_t, std::string_view>> ContentLines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  std::size_t lineno = 0;
  while (!text.empty()) {
    ++lineno;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    line = StripComment(line);
    if (!line.empty()) out.emplace_back(lineno, line);
  }
  return out;
}

std::vector<std::uint64_t> ParseIntegers(std::size_t lineno, std::string_view line) {
  std::vector<std::uint64_t> values;
  const char* p = line.data();
  const char* end = line.data() + line.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
    if (p == end) break;
    std::uint64_t value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc() || (next < end && *next != ' ' && *next != '\t')) {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(lineno) + ": expected nonnegative integers");
    }
    values.push_back(value);
    p = next;
  }
  return values;
}

}  // namespace

Graph ParseEdgeList(std::string_view text) {
  auto lines = ContentLines(text);
  if (lines.empty()) throw Error(ErrorCode::kParseError, "missing \"n m\" header");
  auto header = ParseIntegers(lines[0].first, lines[0].second);
  if (header.size() != 2) {
    throw Error(ErrorCode::kParseError,
                "line " + std::to_string(lines[0].first) + ": header must be \"n m\"");
  }
  const std::uint64_t n = header[0];
  const std::uint64_t m = header[1];
  if (n > std::numeric_limits<Vertex>::max()) throw Error(ErrorCode::kParseError, "order too large");
  if (lines.size() - 1 != m) {
    throw Error(ErrorCode::kParseError, "header announces " + std::to_string(m) +
                                            " edges but " + std::to_string(lines.size() - 1) +
                                            " edge lines follow");
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto uv = ParseIntegers(lines[i].first, lines[i].second);
    if (uv.size() != 2) {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(lines[i].first) + ": expected \"u v\"");
    }
    if (uv[0] >= n || uv[1] >= n) {
      throw Error(ErrorCode::kInvalidVertex,
                  "line " + std::to_string(lines[i].first) + ": endpoint out of range");
    }
    edges.push_back({static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1])});
  }
  return Graph::Build(n, edges);
}

std::string FormatEdgeList(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

Graph ParseGraph6(std::string_view text) {
  auto lines = ContentLines(text);
  if (lines.size() != 1) throw Error(ErrorCode::kParseError, "graph6 input must be one line");
  std::string_view s = lines[0].second;
  if (s.starts_with(kGraph6Header)) s.remove_prefix(kGraph6Header.size());
  for (char ch : s) {
    if (ch < 63 || ch > 126) throw Error(ErrorCode::kParseError, "graph6 byte outside 63..126");
  }
  std::size_t pos = 0;
  auto take = [&](std::size_t count) {
    if (pos + count > s.size()) throw Error(ErrorCode::kParseError, "truncated graph6 order");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < count; ++i) v = (v << 6) | static_cast<std::uint64_t>(s[pos++] - 63);
    return v;
  };
  std::uint64_t n = 0;
  if (s.empty()) throw Error(ErrorCode::kParseError, "empty graph6 string");
  if (s[0] != 126) {
    n = take(1);
  } else if (s.size() > 1 && s[1] == 126) {
    pos = 2;
    n = take(6);
  } else {
    pos = 1;
    n = take(3);
  }
  if (n > std::numeric_limits<Vertex>::max()) throw Error(ErrorCode::kParseError, "order too large");
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (s.size() - pos != bytes) {
    throw Error(ErrorCode::kParseError, "graph6 body has " + std::to_string(s.size() - pos) +
                                            " bytes, expected " + std::to_string(bytes));
  }
  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      auto byte = static_cast<unsigned>(s[pos + k / 6] - 63);
      if (byte & (0x20u >> (k % 6))) edges.push_back({i, j});
    }
  }
  for (std::uint64_t tail = k; tail < bytes * 6; ++tail) {
    auto byte = static_cast<unsigned>(s[pos + tail / 6] - 63);
    if (byte & (0x20u >> (tail % 6))) throw Error(ErrorCode::kParseError, "nonzero graph6 padding");
  }
  return Graph::Build(n, edges);
}

std::string FormatGraph6(const Graph& g) {
  const std::uint64_t n = g.order();
  std::string out;
  auto put = [&](std::uint64_t value, int groups) {
    for (int i = groups - 1; i >= 0; --i) out.push_back(static_cast<char>(((value >> (6 * i)) & 63) + 63));
  };
  if (n <= 62) {
    put(n, 1);
  } else if (n <= 258047) {
    out.push_back(126);
    put(n, 3);
  } else {
    out.push_back(126);
    out.push_back(126);
    put(n, 6);
  }
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::vector<unsigned char> body((bits + 5) / 6, 0);
  for (const Edge& e : g.edges()) {
    // Bit for (i, j), i < j, sits at position j(j-1)/2 + i in column order.
    std::uint64_t k = static_cast<std::uint64_t>(e.v) * (e.v - 1) / 2 + e.u;
    body[k / 6] |= static_cast<unsigned char>(0x20u >> (k % 6));
  }
  for (unsigned char b : body) out.push_back(static_cast<char>(b + 63));
  out.push_back('\n');
  return out;
}

GraphFormat DetectFormat(std::string_view text) {
  auto lines = ContentLines(text);
  if (lines.empty()) return GraphFormat::kEdgeList;
  std::string_view first = lines[0].second;
  if (first.starts_with(kGraph6Header)) return GraphFormat::kGraph6;
  for (char ch : first) {
    if (ch < 63 || ch > 126) return GraphFormat::kEdgeList;
  }
  return GraphFormat::kGraph6;
}

Graph ParseGraph(std::string_view text) {
  return DetectFormat(text) == GraphFormat::kGraph6 ? ParseGraph6(text) : ParseEdgeList(text);
}

std::string Format(const Graph& g, GraphFormat format) {
  return format == GraphFormat::kGraph6 ? FormatGraph6(g) : FormatEdgeList(g);
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIoError, "error reading " + path);
  return buf.str();
}

void WriteTextFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot open " + path + " for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorCode::kIoError, "error writing " + path);
}

}  // namespace avec
