// Copyright 2026 The tritough Authors.
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

#ifndef TRITOUGH_IO_HPP_
#define TRITOUGH_IO_HPP_

#include <string>
#include <string_view>

#include "tritough/construct.hpp"
#include "tritough/graph.hpp"

namespace tritough {

// Labels, clockwise rotation and registries as JSON. Lossless.
std::string to_json_embedding(const LabeledGraph& g);
// Throws ParseError on malformed input, EmbeddingInconsistent on a bad
// rotation.
LabeledGraph from_json_embedding(std::string_view text);

// Standard graph6 line without a header or trailing newline.
std::string to_graph6(const Graph& g);
// Accepts an optional ">>graph6<<" header and trailing whitespace.
Graph from_graph6(std::string_view text);

std::string to_dot(const LabeledGraph& g);

// Throw IoError.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace tritough

#endif  // TRITOUGH_IO_HPP_
