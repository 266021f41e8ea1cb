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

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ssr/errors.hpp"
#include "ssr/graph_io.hpp"

namespace ssr {
namespace {

struct GmlNode;
using GmlList = std::vector<std::pair<std::string, GmlNode>>;

struct GmlNode {
  std::size_t offset = 0;
  std::string scalar;
  std::unique_ptr<GmlList> list;

  bool is_list() const { return list != nullptr; }
};

class GmlReader {
 public:
  explicit GmlReader(std::string_view text) : text_(text) {}

  GmlList parse_document() {
    GmlList top = parse_list(/*nested=*/false, 0);
    return top;
  }

 private:
  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    throw ParseError(what, at, ParseError::Unit::kByte);
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view read_word() {
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '[' || c == ']' ||
          c == '"') {
        break;
      }
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  GmlList parse_list(bool nested, std::size_t open_at) {
    GmlList items;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size()) {
        if (nested) fail("unbalanced '[': no matching ']'", open_at);
        return items;
      }
      if (text_[pos_] == ']') {
        if (!nested) fail("unbalanced ']'", pos_);
        ++pos_;
        return items;
      }
      const std::size_t key_at = pos_;
      if (text_[pos_] == '[' || text_[pos_] == '"') {
        fail("expected a key", key_at);
      }
      std::string key(read_word());
      skip_space();
      if (pos_ >= text_.size()) fail("key '" + key + "' has no value", key_at);

      GmlNode value;
      value.offset = pos_;
      const char c = text_[pos_];
      if (c == '[') {
        const std::size_t at = pos_++;
        value.list = std::make_unique<GmlList>(parse_list(true, at));
      } else if (c == '"') {
        const std::size_t at = pos_++;
        const std::size_t close = text_.find('"', pos_);
        if (close == std::string_view::npos) fail("unterminated string", at);
        value.scalar = std::string(text_.substr(pos_, close - pos_));
        pos_ = close + 1;
      } else if (c == ']') {
        fail("key '" + key + "' has no value", key_at);
      } else {
        value.scalar = std::string(read_word());
      }
      items.emplace_back(std::move(key), std::move(value));
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

const GmlNode* find_key(const GmlList& list, std::string_view key) {
  for (const auto& [k, v] : list) {
    if (k == key) return &v;
  }
  return nullptr;
}

double to_number(const GmlNode& node, std::string_view what) {
  double value = 0.0;
  const std::string& s = node.scalar;
  const char* first = s.data();
  if (!s.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), value);
  if (node.is_list() || ec != std::errc() || ptr != s.data() + s.size() ||
      !std::isfinite(value)) {
    throw ParseError(std::string(what) + " must be a number", node.offset,
                     ParseError::Unit::kByte);
  }
  return value;
}

}  // namespace

Graph parse_gml(std::string_view text, bool weighted) {
  GmlReader reader(text);
  GmlList doc = reader.parse_document();

  const GmlNode* graph = find_key(doc, "graph");
  if (graph == nullptr || !graph->is_list()) {
    throw ParseError("no 'graph [ ... ]' block", 0, ParseError::Unit::kByte);
  }

  bool directed = false;
  if (const GmlNode* d = find_key(*graph->list, "directed")) {
    directed = to_number(*d, "directed") != 0.0;
  }

  std::unordered_map<std::string, VertexId> ids;
  std::vector<std::string> tokens;
  std::vector<Edge> edges;

  for (const auto& [key, node] : *graph->list) {
    if (key != "node") continue;
    if (!node.is_list()) {
      throw ParseError("node must be a list", node.offset,
                       ParseError::Unit::kByte);
    }
    const GmlNode* id = find_key(*node.list, "id");
    if (id == nullptr || id->is_list()) {
      throw ParseError("node without scalar id", node.offset,
                       ParseError::Unit::kByte);
    }
    auto [it, inserted] =
        ids.try_emplace(id->scalar, static_cast<VertexId>(tokens.size()));
    if (!inserted) {
      throw ParseError("duplicate node id " + id->scalar, id->offset,
                       ParseError::Unit::kByte);
    }
    tokens.push_back(id->scalar);
  }

  for (const auto& [key, node] : *graph->list) {
    if (key != "edge") continue;
    if (!node.is_list()) {
      throw ParseError("edge must be a list", node.offset,
                       ParseError::Unit::kByte);
    }
    auto endpoint = [&](std::string_view name) {
      const GmlNode* ref = find_key(*node.list, name);
      if (ref == nullptr || ref->is_list()) {
        throw ParseError("edge without " + std::string(name), node.offset,
                         ParseError::Unit::kByte);
      }
      auto it = ids.find(ref->scalar);
      if (it == ids.end()) {
        throw ParseError("edge references unknown node id " + ref->scalar,
                         ref->offset, ParseError::Unit::kByte);
      }
      return it->second;
    };
    Edge e{endpoint("source"), endpoint("target"), 1.0};
    if (weighted) {
      if (const GmlNode* v = find_key(*node.list, "value")) {
        e.weight = to_number(*v, "edge value");
      }
    }
    edges.push_back(e);
  }

  if (tokens.empty()) throw ValidationError("GML graph has no nodes");
  const std::size_t n = tokens.size();
  return Graph::from_edges(n, directed, edges, std::move(tokens), weighted);
}

Graph load_gml(const std::filesystem::path& path, bool weighted) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failure on " + path.string());
  return parse_gml(text, weighted);
}

}  // namespace ssr
