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

#include <doctest.h>

#include <sstream>

#include "ssr/errors.hpp"
#include "ssr/partition_io.hpp"

using namespace ssr;

TEST_CASE("label files") {
  SUBCASE("parse with comments") {
    std::istringstream in("# header\nb 1\n\na 0\n  c 1  \n");
    const LabelFile f = parse_labels(in);
    CHECK(f.tokens == std::vector<std::string>{"b", "a", "c"});
    CHECK(f.labels == std::vector<CommunityId>{1, 0, 1});
  }
  SUBCASE("malformed lines name the line") {
    for (const char* text : {"a 1\nb\n", "a 1\nb 2 3\n", "a 1\nb x\n", "a 1\nb -1\n"}) {
      std::istringstream in(text);
      try {
        parse_labels(in);
        FAIL("expected a parse error");
      } catch (const ParseError& e) {
        CHECK(e.position() == 2);
      }
    }
  }
  SUBCASE("repeated token") {
    std::istringstream in("a 1\na 2\n");
    CHECK_THROWS_AS(parse_labels(in), ValidationError);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(load_labels("/nonexistent/labels"), IoError);
  }
}

TEST_CASE("aligning labels to vertex tokens") {
  std::istringstream in("c 2\na 0\nb 1\n");
  const LabelFile f = parse_labels(in);
  const std::vector<std::string> tokens{"a", "b", "c"};
  CHECK(align_labels(f, tokens) == std::vector<CommunityId>{0, 1, 2});

  const std::vector<std::string> more{"a", "b", "c", "d"};
  CHECK_THROWS_AS(align_labels(f, more), ValidationError);
  const std::vector<std::string> fewer{"a", "b"};
  CHECK_THROWS_AS(align_labels(f, fewer), ValidationError);
  const std::vector<std::string> other{"a", "b", "x"};
  CHECK_THROWS_AS(align_labels(f, other), ValidationError);
}

TEST_CASE("written labels read back") {
  const std::vector<std::string> tokens{"n1", "n7", "n3"};
  const std::vector<CommunityId> labels{0, 1, 0};
  std::stringstream buf;
  write_labels(buf, tokens, labels);
  CHECK(buf.str() == "n1 0\nn7 1\nn3 0\n");
  const LabelFile f = parse_labels(buf);
  CHECK(f.tokens == tokens);
  CHECK(f.labels == labels);
}
