// Copyright 2026 The ssr Authors.
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

#include "ssr/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "ssr/errors.hpp"

namespace ssr {
namespace {

bool parse_double(std::string_view text, double& value) {
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc() && ptr == last;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) {
      ++j;
    }
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::istream& in, bool directed, bool weighted) {
  std::unordered_map<std::string, VertexId> ids;
  std::vector<std::string> tokens;
  std::vector<Edge> edges;

  auto intern = [&](std::string_view tok) {
    auto [it, inserted] =
        ids.try_emplace(std::string(tok), static_cast<VertexId>(tokens.size()));
    if (inserted) tokens.emplace_back(tok);
    return it->second;
  };

  const std::size_t expected = weighted ? 3 : 2;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto fields = split_ws(line);
    if (fields.empty() || fields[0].front() == '#' || fields[0].front() == '%') {
      continue;
    }
    if (fields.size() != expected) {
      throw ParseError("expected " + std::to_string(expected) +
                           " fields, found " + std::to_string(fields.size()),
                       lineno, ParseError::Unit::kLine);
    }
    double w = 1.0;
    if (weighted) {
      if (!parse_double(fields[2], w) || !std::isfinite(w)) {
        throw ParseError("non-numeric weight '" + std::string(fields[2]) + "'",
                         lineno, ParseError::Unit::kLine);
      }
      if (w < 0.0) {
        throw ValidationError("line " + std::to_string(lineno) +
                              ": negative edge weight");
      }
    }
    const VertexId src = intern(fields[0]);
    const VertexId dst = intern(fields[1]);
    if (src == dst) {
      throw ValidationError("line " + std::to_string(lineno) +
                            ": self-loop on '" + std::string(fields[0]) + "'");
    }
    edges.push_back({src, dst, w});
  }
  if (in.bad()) throw IoError("read failure while parsing edge list");
  if (tokens.empty()) throw ValidationError("edge list contains no edges");
  const std::size_t n = tokens.size();
  return Graph::from_edges(n, directed, edges, std::move(tokens), weighted);
}

Graph load_edge_list(const std::filesystem::path& path, bool directed,
                     bool weighted) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return parse_edge_list(in, directed, weighted);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  std::ostringstream buf;
  buf.precision(17);
  for (const Edge& e : g.edges()) {
    buf << g.token(e.src) << ' ' << g.token(e.dst);
    if (g.weighted()) buf << ' ' << e.weight;
    buf << '\n';
  }
  out << buf.str();
}

Graph load_graph(const std::filesystem::path& path, GraphFormat format,
                 bool directed, bool weighted) {
  switch (format) {
    case GraphFormat::kGml:
      return load_gml(path, weighted);
    case GraphFormat::kEdgeList:
      break;
  }
  return load_edge_list(path, directed, weighted);
}

}  // namespace ssr
