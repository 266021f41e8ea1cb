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
#include <span>
#include <string>
#include <vector>

#include "ssr/graph.hpp"
#include "ssr/modularity.hpp"

namespace ssr {

/// Contents of a label file, in file order.
struct LabelFile {
  std::vector<std::string> tokens;
  std::vector<CommunityId> labels;
};

/// Reads "token community" lines; '#' starts a comment line. Malformed lines
/// throw ParseError (line numbers), repeated tokens ValidationError.
LabelFile parse_labels(std::istream& in);
LabelFile load_labels(const std::filesystem::path& path);

/// Reorders `file` to match `tokens`. Missing, unknown or extra tokens throw
/// ValidationError.
std::vector<CommunityId> align_labels(const LabelFile& file,
                                      std::span<const std::string> tokens);

/// One line per vertex in vertex order, which is the order of first
/// appearance in the graph input.
void write_labels(std::ostream& out, std::span<const std::string> tokens,
                  std::span<const CommunityId> labels);
void save_labels(const std::filesystem::path& path,
                 std::span<const std::string> tokens,
                 std::span<const CommunityId> labels);

}  // namespace ssr
