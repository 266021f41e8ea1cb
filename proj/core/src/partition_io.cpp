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

#include "ssr/partition_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "ssr/errors.hpp"

namespace ssr {

LabelFile parse_labels(std::istream& in) {
  LabelFile out;
  std::unordered_map<std::string, std::size_t> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::string token;
    std::string community;
    std::string extra;
    if (!(fields >> token) || token.front() == '#') continue;
    if (!(fields >> community) || (fields >> extra)) {
      throw ParseError("expected 'token community'", lineno,
                       ParseError::Unit::kLine);
    }
    CommunityId id = 0;
    const char* last = community.data() + community.size();
    auto [ptr, ec] = std::from_chars(community.data(), last, id);
    if (ec != std::errc() || ptr != last) {
      throw ParseError("bad community id '" + community + "'", lineno,
                       ParseError::Unit::kLine);
    }
    if (!seen.emplace(token, out.tokens.size()).second) {
      throw ValidationError("line " + std::to_string(lineno) +
                            ": repeated token '" + token + "'");
    }
    out.tokens.push_back(std::move(token));
    out.labels.push_back(id);
  }
  if (in.bad()) throw IoError("read failure in label file");
  return out;
}

LabelFile load_labels(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return parse_labels(in);
}

std::vector<CommunityId> align_labels(const LabelFile& file,
                                      std::span<const std::string> tokens) {
  std::unordered_map<std::string_view, std::size_t> index;
  index.reserve(file.tokens.size());
  for (std::size_t i = 0; i < file.tokens.size(); ++i) {
    index.emplace(file.tokens[i], i);
  }
  std::vector<CommunityId> out(tokens.size());
  for (std::size_t v = 0; v < tokens.size(); ++v) {
    auto it = index.find(tokens[v]);
    if (it == index.end()) {
      throw ValidationError("no label for vertex '" + tokens[v] + "'");
    }
    out[v] = file.labels[it->second];
  }
  if (file.tokens.size() != tokens.size()) {
    std::unordered_map<std::string_view, bool> known;
    for (const auto& t : tokens) known.emplace(t, true);
    for (const auto& t : file.tokens) {
      if (!known.count(t)) {
        throw ValidationError("label for unknown vertex '" + t + "'");
      }
    }
  }
  return out;
}

void write_labels(std::ostream& out, std::span<const std::string> tokens,
                  std::span<const CommunityId> labels) {
  if (tokens.size() != labels.size()) {
    throw ValidationError("token and label counts differ");
  }
  for (std::size_t v = 0; v < tokens.size(); ++v) {
    out << tokens[v] << ' ' << labels[v] << '\n';
  }
}

void save_labels(const std::filesystem::path& path,
                 std::span<const std::string> tokens,
                 std::span<const CommunityId> labels) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_labels(out, tokens, labels);
  out.flush();
  if (!out) throw IoError("write failure on " + path.string());
}

}  // namespace ssr
