#include "stc/io.hpp"

#include "stc/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace stc {

using nlohmann::json;

Graph parse_edge_list(std::istream &in, const std::string &source) {
  std::vector<std::string> labels;
  std::set<std::string> known;
  std::vector<LabelPair> edges;
  std::set<LabelPair> seen;
  auto declare = [&](const std::string &l) {
    if (known.insert(l).second)
      labels.push_back(l);
  };

  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    auto where = [&] { return source + ":" + std::to_string(lineno) + ": "; };
    std::istringstream ss(line);
    std::vector<std::string> tok;
    for (std::string t; ss >> t;)
      tok.push_back(t);
    if (tok.empty() || tok[0].front() == '#')
      continue;
    if (tok[0] == "vertex") {
      if (tok.size() != 2)
        throw input_error(where() + "expected 'vertex <label>'");
      declare(tok[1]);
      continue;
    }
    if (tok.size() != 2)
      throw input_error(where() + "expected two vertex labels, got " +
                        std::to_string(tok.size()) + " tokens");
    if (tok[0] == tok[1])
      throw input_error(where() + "self-loop at '" + tok[0] + "'");
    LabelPair key = std::minmax(tok[0], tok[1]);
    if (!seen.insert(key).second)
      throw input_error(where() + "duplicate edge '" + key.first + "' '" + key.second + "'");
    declare(tok[0]);
    declare(tok[1]);
    edges.push_back(std::move(key));
  }
  if (in.bad())
    throw input_error(source + ": read error");
  return Graph(std::move(labels), edges);
}

Graph read_edge_list(const std::string &path) {
  if (path == "-")
    return parse_edge_list(std::cin, "<stdin>");
  std::ifstream f(path);
  if (!f)
    throw input_error("cannot open '" + path + "'");
  return parse_edge_list(f, path);
}

std::string format_edge_list(const Graph &g, const std::vector<std::string> &comments) {
  std::ostringstream out;
  for (const auto &c : comments)
    out << "# " << c << '\n';
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    if (g.degree(static_cast<Vertex>(v)) == 0)
      out << "vertex " << g.label(static_cast<Vertex>(v)) << '\n';
  for (const Edge &e : g.edges())
    out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
  return out.str();
}

namespace {

json pairs(const Graph &g, const std::vector<Edge> &edges) {
  json arr = json::array();
  for (const Edge &e : edges)
    arr.push_back({g.label(e.u), g.label(e.v)});
  return arr;
}

} // namespace

std::string format_result(const Graph &g, const SolveResult &res) {
  json doc;
  doc["value"] = res.value;
  doc["solver"] = std::string(to_string(res.solver));
  doc["strong"] = pairs(g, res.labeling.strong);
  doc["weak"] = pairs(g, res.labeling.weak);
  doc["stats"] = json::object();
  for (const auto &[k, v] : res.stats)
    doc["stats"][k] = v;
  return doc.dump(2) + "\n";
}

StrongWeakLabeling parse_labeling(const Graph &g, std::istream &in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error &e) {
    throw input_error(std::string("labeling is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("strong") || !doc.contains("weak"))
    throw input_error("labeling document needs 'strong' and 'weak' lists");

  auto read = [&](const char *key) {
    std::vector<Edge> out;
    const auto &list = doc[key];
    if (!list.is_array())
      throw input_error(std::string("'") + key + "' must be a list");
    for (const auto &p : list) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
        throw input_error(std::string("entries of '") + key + "' must be label pairs");
      Vertex a = g.index_of(p[0].get<std::string>());
      Vertex b = g.index_of(p[1].get<std::string>());
      if (a == b)
        throw input_error("labeled pair is a self-loop");
      out.emplace_back(a, b);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  StrongWeakLabeling lab;
  lab.strong = read("strong");
  lab.weak = read("weak");
  for (const Edge &e : lab.strong) {
    if (!g.has_edge(e.u, e.v))
      throw input_error("strong pair '" + g.label(e.u) + "' '" + g.label(e.v) +
                        "' is not an edge");
    lab.value += g.edge_weight(e);
  }
  return lab;
}

Graph incompat_as_graph(const Graph &g) {
  const auto h = build_incompat(g);
  auto node_name = [&](int i) {
    const Edge &e = h.nodes[i];
    return g.label(e.u) + "-" + g.label(e.v);
  };
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < h.size(); ++i)
    labels.push_back(node_name(static_cast<int>(i)));
  std::vector<LabelPair> edges;
  for (const auto &[a, b] : h.conflicts)
    edges.emplace_back(node_name(a), node_name(b));
  // Labels containing '-' can make two different edges print alike.
  std::vector<std::string> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw input_error("edge node names collide; vertex labels must not contain '-'");
  return Graph(std::move(labels), edges, h.node_weight);
}

} // namespace stc
