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

#include "tritough/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "tritough/errors.hpp"

namespace tritough {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json triples(const std::vector<std::array<Vertex, 3>>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& t : v) a.push_back({t[0], t[1], t[2]});
  return a;
}

ordered_json edge_list(const std::vector<Edge>& v) {
  ordered_json a = ordered_json::array();
  for (const Edge& e : v) a.push_back({e.u, e.v});
  return a;
}

ordered_json string_map(const std::map<Vertex, std::string>& m) {
  ordered_json o = ordered_json::object();
  for (const auto& [k, v] : m) o[std::to_string(k)] = v;
  return o;
}

std::vector<std::array<Vertex, 3>> read_triples(const json& a) {
  std::vector<std::array<Vertex, 3>> out;
  for (const json& t : a) {
    if (t.size() != 3) throw ParseError("triangle entry needs 3 ids");
    out.push_back({t[0].get<Vertex>(), t[1].get<Vertex>(), t[2].get<Vertex>()});
  }
  return out;
}

std::vector<Edge> read_edges(const json& a) {
  std::vector<Edge> out;
  for (const json& e : a) {
    if (e.size() != 2) throw ParseError("edge entry needs 2 ids");
    out.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
  }
  return out;
}

std::map<Vertex, std::string> read_string_map(const json& o) {
  std::map<Vertex, std::string> out;
  for (auto it = o.begin(); it != o.end(); ++it)
    out[std::stoi(it.key())] = it.value().get<std::string>();
  return out;
}

const json& optional_key(const json& o, const char* key) {
  static const json empty = json::array();
  auto it = o.find(key);
  return it == o.end() ? empty : *it;
}

}  // namespace

std::string to_json_embedding(const LabeledGraph& g) {
  const int n = g.graph.num_vertices();
  ordered_json doc;
  doc["format"] = "tritough-embedding-1";
  doc["orientation"] = "clockwise";
  auto& verts = doc["vertices"] = ordered_json::array();
  for (Vertex v = 0; v < n; ++v) {
    const VertexLabel& l = g.labels.at(v);
    verts.push_back(
        {{"id", v}, {"class", to_string(l.cls)}, {"index", {l.i, l.j}}});
  }
  auto& rot = doc["rotation"] = ordered_json::object();
  for (Vertex v = 0; v < n; ++v) rot[std::to_string(v)] = g.graph.rotation(v);

  const Registries& r = g.reg;
  ordered_json reg;
  reg["rings"] = r.rings;
  reg["c3_triangles"] = triples(r.c3_triangles);
  reg["s_triangles"] = triples(r.s_triangles);
  reg["s_triangle_groups"] = triples(r.s_triangle_groups);
  auto& spokes = reg["spokes"] = ordered_json::array();
  for (const Spoke& s : r.spokes) spokes.push_back(s.path);
  reg["c0"] = r.c0;
  reg["c1"] = r.c1;
  reg["c"] = r.c;
  reg["g0_u"] = r.g0_u;
  reg["g0_w"] = r.g0_w;
  reg["g0_n"] = r.g0_n;
  reg["g0_edges"] = edge_list(r.g0_edges);
  reg["link_edges"] = edge_list(r.link_edges);
  reg["names"] = string_map(r.names);
  reg["colors"] = string_map(r.colors);
  doc["registries"] = std::move(reg);
  return doc.dump(1);
}

LabeledGraph from_json_embedding(std::string_view text) {
  std::vector<std::vector<Vertex>> rotation;
  LabeledGraph out;
  try {
    json doc = json::parse(text);
    const json& verts = doc.at("vertices");
    const int n = static_cast<int>(verts.size());
    out.labels.resize(n);
    rotation.resize(n);
    std::vector<char> seen(n, 0);
    for (const json& v : verts) {
      const int id = v.at("id").get<int>();
      if (id < 0 || id >= n || seen[id])
        throw ParseError("vertex ids must be dense and distinct");
      seen[id] = 1;
      const json& idx = v.at("index");
      if (idx.size() != 2) throw ParseError("index needs 2 entries");
      out.labels[id] = VertexLabel{
          vertex_class_from_string(v.at("class").get<std::string>()),
          idx[0].get<int>(), idx[1].get<int>()};
    }
    const json& rot = doc.at("rotation");
    if (static_cast<int>(rot.size()) != n)
      throw ParseError("rotation must list every vertex");
    for (auto it = rot.begin(); it != rot.end(); ++it) {
      const int id = std::stoi(it.key());
      if (id < 0 || id >= n) throw ParseError("rotation id out of range");
      rotation[id] = it.value().get<std::vector<Vertex>>();
    }

    const json& reg = doc.at("registries");
    Registries& r = out.reg;
    r.rings = optional_key(reg, "rings").get<std::vector<std::vector<Vertex>>>();
    r.c3_triangles = read_triples(optional_key(reg, "c3_triangles"));
    r.s_triangles = read_triples(optional_key(reg, "s_triangles"));
    r.s_triangle_groups = read_triples(optional_key(reg, "s_triangle_groups"));
    for (const json& s : optional_key(reg, "spokes"))
      r.spokes.push_back(Spoke{s.get<std::vector<Vertex>>()});
    r.c0 = optional_key(reg, "c0").get<std::vector<Vertex>>();
    r.c1 = optional_key(reg, "c1").get<std::vector<Vertex>>();
    r.c = optional_key(reg, "c").get<std::vector<Vertex>>();
    r.g0_u = optional_key(reg, "g0_u").get<std::vector<Vertex>>();
    r.g0_w = reg.value("g0_w", -1);
    r.g0_n = reg.value("g0_n", 0);
    r.g0_edges = read_edges(optional_key(reg, "g0_edges"));
    r.link_edges = read_edges(optional_key(reg, "link_edges"));
    if (reg.contains("names")) r.names = read_string_map(reg.at("names"));
    if (reg.contains("colors")) r.colors = read_string_map(reg.at("colors"));
  } catch (const json::exception& e) {
    throw ParseError(std::string("json-embedding: ") + e.what());
  } catch (const std::logic_error& e) {
    throw ParseError(std::string("json-embedding: ") + e.what());
  }
  out.graph = EmbeddedGraph(std::move(rotation));
  return out;
}

std::string to_graph6(const Graph& g) {
  const long n = g.num_vertices();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += '~';
    for (int s = 12; s >= 0; s -= 6) out += static_cast<char>(((n >> s) & 63) + 63);
  } else {
    out += "~~";
    for (int s = 30; s >= 0; s -= 6) out += static_cast<char>(((n >> s) & 63) + 63);
  }
  int acc = 0, bits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out += static_cast<char>(acc + 63);
        acc = bits = 0;
      }
    }
  }
  if (bits > 0) out += static_cast<char>((acc << (6 - bits)) + 63);
  return out;
}

Graph from_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  std::size_t pos = 0;
  auto next = [&]() -> long {
    if (pos >= text.size()) throw ParseError("graph6: truncated");
    int c = static_cast<unsigned char>(text[pos++]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte out of range");
    return c - 63;
  };
  long n = next();
  if (n == 63) {
    int bytes = 3;
    if (pos < text.size() && text[pos] == '~') {
      ++pos;
      bytes = 6;
    }
    n = 0;
    for (int k = 0; k < bytes; ++k) n = (n << 6) | next();
  }
  const long pairs = n * (n - 1) / 2;
  const std::size_t want = pos + static_cast<std::size_t>((pairs + 5) / 6);
  if (text.size() != want)
    throw ParseError("graph6: expected " + std::to_string(want) +
                     " bytes, got " + std::to_string(text.size()));
  Graph g(static_cast<int>(n));
  int acc = 0, left = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (left == 0) {
        acc = static_cast<int>(next());
        left = 6;
      }
      --left;
      if ((acc >> left) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

std::string to_dot(const LabeledGraph& g) {
  std::ostringstream out;
  out << "graph G {\n  node [shape=point];\n";
  for (Vertex v = 0; v < g.graph.num_vertices(); ++v) {
    const VertexLabel& l = g.labels.at(v);
    out << "  " << v << " [class=\"" << to_string(l.cls) << "\", index=\""
        << l.i << "," << l.j << "\"];\n";
  }
  for (const Edge& e : g.graph.abstract().edges())
    out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failed: " + path);
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace tritough
