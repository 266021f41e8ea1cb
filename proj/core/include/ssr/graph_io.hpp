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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "ssr/graph.hpp"

namespace ssr {

enum class GraphFormat { kEdgeList, kGml };

/// Whitespace-separated "src dst [weight]" lines. Lines starting with '#' or
/// '%' are comments. Vertex tokens are arbitrary strings, numbered densely in
/// order of first appearance. Unweighted input takes exactly two tokens per
/// line, weighted input exactly three.
Graph parse_edge_list(std::istream& in, bool directed, bool weighted);
Graph load_edge_list(const std::filesystem::path& path, bool directed,
                     bool weighted);

/// Writes one line per distinct edge using the graph's vertex tokens. The
/// weight column is emitted when the graph is weighted.
void write_edge_list(std::ostream& out, const Graph& g);

/// Subset of GML: `graph [ directed 0|1  node [ id N ... ]  edge [ source A
/// target B value W ... ] ]`. Unknown keys are skipped. Vertex tokens are the
/// node ids as written. Errors report a byte offset. `value` is used as the
/// edge weight only when `weighted` is set.
Graph parse_gml(std::string_view text, bool weighted = true);
Graph load_gml(const std::filesystem::path& path, bool weighted = true);

Graph load_graph(const std::filesystem::path& path, GraphFormat format,
                 bool directed, bool weighted);

}  // namespace ssr
