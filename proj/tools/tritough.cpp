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

// Command-line front end: build, verify, two-factor, search, stats, export-d.
// Exit codes: 0 pass, 1 verification failure, 2 input or validator error.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tritough/construct.hpp"
#include "tritough/errors.hpp"
#include "tritough/factor.hpp"
#include "tritough/faces.hpp"
#include "tritough/io.hpp"
#include "tritough/toughness.hpp"
#include "tritough/verify.hpp"

namespace {

using namespace tritough;
using nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct Options {
  std::string g0_path;
  std::string format = "json-embedding";
  std::string out;
  std::string input;
  std::string level = "fast";
  std::int64_t budget = 100000;
  std::uint64_t seed = 1;
  int m = 39;
  bool json = false;
};

LabeledGraph load_g0_option(const Options& o) {
  return o.g0_path.empty() ? load_bundled_g0() : load_g0_file(o.g0_path);
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty() || o.out == "-")
    std::cout << text;
  else
    write_file(o.out, text);
}

std::string serialize(const LabeledGraph& g, const std::string& format) {
  if (format == "json-embedding") return to_json_embedding(g) + "\n";
  if (format == "graph6") return to_graph6(g.graph.abstract()) + "\n";
  return to_dot(g);
}

// json-embedding when the file starts with '{', graph6 otherwise.
struct Input {
  Graph graph;
  std::optional<LabeledGraph> labeled;
};

Input read_input(const std::string& path) {
  std::string text = read_file(path);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    LabeledGraph lg = from_json_embedding(text);
    Graph g = lg.graph.abstract();
    return {std::move(g), std::move(lg)};
  }
  return {from_graph6(text), std::nullopt};
}

void print_report(const Options& o, const VerificationReport& r) {
  std::cout << (o.json ? r.to_json() + "\n" : r.to_text());
}

int cmd_build(const Options& o) {
  Pipeline p = build_pipeline(load_g0_option(o));
  emit(o, serialize(p.g, o.format));
  return kExitPass;
}

int cmd_export_d(const Options& o) {
  emit(o, serialize(build_d(o.m), o.format));
  return kExitPass;
}

int cmd_verify(const Options& o) {
  const VerifyLevel level =
      o.level == "full" ? VerifyLevel::kFull : VerifyLevel::kFast;
  LabeledGraph g0 = load_g0_option(o);
  VerificationReport r;
  if (o.input.empty()) {
    r = verify_pipeline(build_pipeline(g0), level);
  } else {
    Input in = read_input(o.input);
    if (!in.labeled)
      throw ParseError("verify --input needs a json-embedding file");
    r = verify_construction(g0, *in.labeled, level);
  }
  print_report(o, r);
  return r.overall() ? kExitPass : kExitFail;
}

int cmd_two_factor(const Options& o) {
  Graph g = o.input.empty()
                ? build_pipeline(load_g0_option(o)).g.graph.abstract()
                : read_input(o.input).graph;
  TwoFactorResult tf = has_two_factor(g);
  if (o.json) {
    ordered_json doc;
    doc["n"] = g.num_vertices();
    doc["e"] = g.num_edges();
    doc["two_factor"] = tf.feasible ? "feasible" : "infeasible";
    if (tf.feasible) {
      auto& edges = doc["factor"] = ordered_json::array();
      for (const Edge& e : tf.factor) edges.push_back({e.u, e.v});
    } else {
      doc["deficiency"] = tf.deficiency;
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "n " << g.num_vertices() << "\ne " << g.num_edges()
              << "\ntwo_factor " << (tf.feasible ? "feasible" : "infeasible")
              << "\n";
    if (!tf.feasible) std::cout << "deficiency " << tf.deficiency << "\n";
  }
  return kExitPass;
}

int cmd_search(const Options& o) {
  Graph g;
  SearchOptions so;
  if (o.input.empty()) {
    LabeledGraph full = build_pipeline(load_g0_option(o)).g;
    so = construction_hints(full);
    g = full.graph.abstract();
  } else {
    Input in = read_input(o.input);
    g = std::move(in.graph);
    if (in.labeled && !in.labeled->reg.rings.empty())
      so = construction_hints(*in.labeled);
  }
  so.budget = o.budget;
  so.seed = o.seed;
  SearchResult res = search_cuts(g, so);
  ordered_json doc;
  doc["n"] = g.num_vertices();
  doc["budget"] = o.budget;
  doc["seed"] = o.seed;
  doc["evaluations"] = res.evaluations;
  if (res.found) {
    doc["ratio"] = to_string(res.score.ratio);
    doc["h"] = to_string(res.score.h);
    doc["components"] = res.cut.components;
    doc["W"] = res.cut.W;
  } else {
    doc["ratio"] = "inf";
  }
  if (o.json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "ratio " << doc["ratio"].get<std::string>() << "\n";
    if (res.found) {
      std::cout << "h " << doc["h"].get<std::string>() << "\n|W| "
                << res.cut.W.size() << "\ncomponents " << res.cut.components
                << "\nW";
      for (Vertex v : res.cut.W) std::cout << ' ' << v;
      std::cout << "\n";
    }
    std::cout << "evaluations " << res.evaluations << "\n";
  }
  return kExitPass;
}

int cmd_stats(const Options& o) {
  LabeledGraph g0 = load_g0_option(o);
  Pipeline p = build_pipeline(g0);
  G0Census c0 = census_g0(p.g0);
  ordered_json doc;
  doc["g0"] = {{"p", c0.p}, {"q", c0.q}, {"n", c0.n},
               {"e", c0.e}, {"f", c0.f}, {"f_s", c0.f_s}};
  const std::pair<const char*, const LabeledGraph*> stages[] = {
      {"d", &p.d}, {"g1", &p.g1}, {"g2", &p.g2}, {"g", &p.g}};
  for (const auto& [name, lg] : stages) {
    GraphCensus c = census(*lg);
    ordered_json s = {{"n", c.n}, {"e", c.e}, {"f", c.f}};
    ordered_json classes = ordered_json::object();
    for (const auto& [k, v] : c.classes) classes[to_string(k)] = v;
    s["classes"] = std::move(classes);
    doc[name] = std::move(s);
  }
  doc["plane_triangulation"] = is_plane_triangulation(p.g.graph);
  if (o.json) {
    std::cout << doc.dump(2) << "\n";
    return kExitPass;
  }
  std::cout << "g0 p=" << c0.p << " q=" << c0.q << " n=" << c0.n
            << " e=" << c0.e << " f=" << c0.f << " f_s=" << c0.f_s << "\n";
  for (const auto& [name, lg] : stages) {
    const auto& s = doc[name];
    std::cout << name << " n=" << s["n"] << " e=" << s["e"] << " f=" << s["f"];
    for (const auto& [k, v] : s["classes"].items())
      std::cout << " " << k << "=" << v;
    std::cout << "\n";
  }
  std::cout << "plane_triangulation "
            << (doc["plane_triangulation"].get<bool>() ? "true" : "false")
            << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"tritough: a 3/2-tough plane triangulation without a 2-factor"};
  app.require_subcommand(1);
  app.add_option("--g0", o.g0_path, "G0 json file replacing the bundled copy");
  app.add_flag("--json", o.json, "Machine-readable output");

  const std::vector<std::string> formats = {"json-embedding", "graph6", "dot"};
  auto* build = app.add_subcommand("build", "Write the full construction");
  build->add_option("--format", o.format)->check(CLI::IsMember(formats));
  build->add_option("--out", o.out, "Output path, '-' for stdout");

  auto* export_d = app.add_subcommand("export-d", "Write the graph D(m)");
  export_d->add_option("--m", o.m, "Ring length")->check(CLI::Range(3, 1000));
  export_d->add_option("--format", o.format)->check(CLI::IsMember(formats));
  export_d->add_option("--out", o.out, "Output path, '-' for stdout");

  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("--level", o.level)
      ->check(CLI::IsMember({"fast", "full"}));
  verify->add_option("--input", o.input, "json-embedding file to check");

  auto* two_factor = app.add_subcommand("two-factor", "Decide 2-factor existence");
  two_factor->add_option("--input", o.input, "graph6 or json-embedding file");

  auto* search = app.add_subcommand("search", "Search for cuts of small ratio");
  search->add_option("--budget", o.budget)->check(CLI::PositiveNumber);
  search->add_option("--seed", o.seed);
  search->add_option("--input", o.input, "graph6 or json-embedding file");

  auto* stats = app.add_subcommand("stats", "Census of every stage");

  for (CLI::App* sub : {build, export_d, verify, two_factor, search, stats})
  {
    sub->add_flag("--json", o.json, "Machine-readable output");
    if (sub != export_d)
      sub->add_option("--g0", o.g0_path, "G0 json file replacing the bundled copy");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitInput;
  }

  try {
    if (*build) return cmd_build(o);
    if (*export_d) return cmd_export_d(o);
    if (*verify) return cmd_verify(o);
    if (*two_factor) return cmd_two_factor(o);
    if (*search) return cmd_search(o);
    if (*stats) return cmd_stats(o);
  } catch (const InvariantViolation& e) {
    std::cerr << "InvariantViolation: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
