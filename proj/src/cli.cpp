#include "stc/cli.hpp"

#include "stc/classes.hpp"
#include "stc/errors.hpp"
#include "stc/io.hpp"
#include "stc/ordering.hpp"
#include "stc/reductions.hpp"
#include "stc/solvers.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace stc {

namespace {

std::string join_labels(const Graph &g, const std::vector<Vertex> &vs) {
  std::string s;
  for (Vertex v : vs) {
    if (!s.empty())
      s += ' ';
    s += g.label(v);
  }
  return s;
}

int cmd_solve(const std::string &path, const std::string &solver, std::size_t cap,
              std::ostream &out) {
  const Graph g = read_edge_list(path);
  const SolveOptions opts{cap, false};
  SolveResult res;
  if (solver == "auto")
    res = solve_auto(g, opts);
  else if (solver == "pig")
    res = solve_pig_dp(g);
  else if (solver == "tp")
    res = solve_trivially_perfect(g);
  else if (solver == "bip")
    res = solve_bipartite(g);
  else
    res = solve_oracle(g, opts);

  const std::string doc = format_result(g, res);
  // Re-read what we are about to print and check it from scratch.
  std::istringstream back(doc);
  const auto lab = parse_labeling(g, back);
  if (validate_stc(g, lab) || lab.value != res.value)
    throw contract_violation("result document failed re-validation");
  out << doc;
  return exit_ok;
}

int cmd_verify(const std::string &graph_path, const std::string &labeling_path,
               std::ostream &out) {
  const Graph g = read_edge_list(graph_path);
  StrongWeakLabeling lab;
  if (labeling_path == "-") {
    lab = parse_labeling(g, std::cin);
  } else {
    std::ifstream f(labeling_path);
    if (!f)
      throw input_error("cannot open '" + labeling_path + "'");
    lab = parse_labeling(g, f);
  }
  if (auto bad = validate_stc(g, lab)) {
    out << "INVALID " << g.label(bad->u) << ' ' << g.label(bad->v) << ' ' << g.label(bad->w)
        << '\n';
    return exit_invalid;
  }
  out << "VALID value=" << lab.value << '\n';
  return exit_ok;
}

std::vector<std::array<int, 3>> parse_triplets(const std::string &spec) {
  std::vector<std::array<int, 3>> out;
  std::stringstream groups(spec);
  for (std::string group; std::getline(groups, group, ';');) {
    if (group.find_first_not_of(" \t") == std::string::npos)
      continue;
    std::stringstream items(group);
    std::vector<int> vals;
    for (std::string item; std::getline(items, item, ',');) {
      try {
        std::size_t used = 0;
        vals.push_back(std::stoi(item, &used));
        if (item.find_first_not_of(" \t", used) != std::string::npos)
          throw std::invalid_argument(item);
      } catch (const std::logic_error &) {
        throw input_error("bad triplet element '" + item + "'");
      }
    }
    if (vals.size() != 3)
      throw input_error("triplet '" + group + "' does not have three elements");
    out.push_back({vals[0], vals[1], vals[2]});
  }
  return out;
}

struct GenerateArgs {
  std::string kind;
  int n = 0;
  std::uint64_t seed = 0;
  double spread = 0.5;
  int universe = 0;
  std::string triplets;
  std::string output;
  std::string sidecar;
};

int cmd_generate(const GenerateArgs &a, std::ostream &out) {
  Graph g;
  std::vector<std::string> comments;
  std::vector<std::pair<int, std::int64_t>> table;
  bool reduction = false;

  if (a.kind == "pig" || a.kind == "tp") {
    if (a.n < 0)
      throw input_error("--n must be non-negative");
    g = a.kind == "pig" ? gen_random_proper_interval(a.n, a.seed, a.spread)
                        : gen_random_trivially_perfect(a.n, a.seed);
  } else {
    reduction = true;
    SetPackingInstance sp{a.universe, parse_triplets(a.triplets), 0};
    auto split = gen_disjointnn_from_3sp(sp);
    if (a.kind == "3sp-reduction") {
      for (int k = 0; k <= static_cast<int>(split.independent_side.size()); ++k)
        table.emplace_back(k, k);
    } else {
      auto red = gen_maxstc_from_disjointnn(split);
      table = red.threshold_table();
      split = std::move(red.instance);
    }
    g = split.graph;
    std::string c = "clique:", i = "independent:";
    for (const auto &l : split.clique_side)
      c += " " + l;
    for (const auto &l : split.independent_side)
      i += " " + l;
    comments = {c, i};
    for (const auto &[k, t] : table)
      comments.push_back("threshold " + std::to_string(k) + " " + std::to_string(t));
  }

  const std::string doc = format_edge_list(g, comments);
  if (a.output.empty() || a.output == "-") {
    out << doc;
  } else {
    std::ofstream f(a.output);
    if (!f)
      throw input_error("cannot write '" + a.output + "'");
    f << doc;
  }
  std::string sidecar = a.sidecar;
  if (sidecar.empty() && reduction && !a.output.empty() && a.output != "-")
    sidecar = a.output + ".thresholds";
  if (reduction && !sidecar.empty()) {
    std::ofstream f(sidecar);
    if (!f)
      throw input_error("cannot write '" + sidecar + "'");
    for (const auto &[k, t] : table)
      f << k << ' ' << t << '\n';
  }
  return exit_ok;
}

int cmd_recognize(const std::string &path, std::ostream &out) {
  const Graph g = read_edge_list(path);
  auto fail = [](const char *what) {
    throw contract_violation(std::string("recognition witness failed re-verification: ") + what);
  };

  // proper interval
  if (auto o = recognize(g)) {
    if (verify_umbrella(g, o->order))
      fail("ordering");
    out << "proper-interval: yes ordering: " << join_labels(g, o->order) << '\n';
  } else {
    const auto cand = lexbfs_candidate(g);
    const auto bad = verify_umbrella(g, cand);
    if (!bad)
      fail("rejected ordering");
    out << "proper-interval: no umbrella-violation: " << g.label(bad->x) << ' '
        << g.label(bad->y) << ' ' << g.label(bad->z) << '\n';
  }

  // trivially perfect
  if (auto q = find_p4_or_c4(g)) {
    const auto &v = q->nodes;
    const bool p4 = q->kind == QuartetKind::p4;
    const int edges = g.has_edge(v[0], v[1]) + g.has_edge(v[1], v[2]) + g.has_edge(v[2], v[3]);
    const bool closing = g.has_edge(v[3], v[0]);
    if (edges != 3 || g.has_edge(v[0], v[2]) || g.has_edge(v[1], v[3]) || closing == p4)
      fail("P4/C4");
    out << "trivially-perfect: no induced-" << (p4 ? "P4" : "C4") << ": "
        << join_labels(g, {v.begin(), v.end()}) << '\n';
  } else {
    out << "trivially-perfect: yes\n";
  }

  // bipartite
  const auto bc = check_bipartite(g);
  if (bc.bipartite) {
    for (const Edge &e : g.edges())
      if (bc.color[e.u] == bc.color[e.v])
        fail("2-coloring");
    std::vector<Vertex> left, right;
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
      (bc.color[v] == 0 ? left : right).push_back(static_cast<Vertex>(v));
    out << "bipartite: yes coloring: " << join_labels(g, left) << " | " << join_labels(g, right)
        << '\n';
  } else {
    const auto &c = bc.odd_cycle;
    if (c.size() % 2 == 0)
      fail("odd cycle length");
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!g.has_edge(c[i], c[(i + 1) % c.size()]))
        fail("odd cycle");
    out << "bipartite: no odd-cycle: " << join_labels(g, c) << '\n';
  }

  // split
  if (auto sp = split_partition(g)) {
    SplitInstance si{g, {}, {}};
    for (Vertex v : sp->clique)
      si.clique_side.push_back(g.label(v));
    for (Vertex v : sp->independent)
      si.independent_side.push_back(g.label(v));
    if (!is_split_partition(si))
      fail("split partition");
    out << "split: yes clique: " << join_labels(g, sp->clique)
        << " | independent: " << join_labels(g, sp->independent) << '\n';
  } else {
    const auto obs = split_obstruction(g);
    if (!obs)
      fail("split obstruction");
    const char *kind = obs->size() == 5 ? "C5" : (g.has_edge((*obs)[1], (*obs)[2]) ? "C4" : "2K2");
    out << "split: no induced-" << kind << ": " << join_labels(g, *obs) << '\n';
  }
  return exit_ok;
}

int cmd_incompat(const std::string &path, std::ostream &out) {
  const Graph g = read_edge_list(path);
  out << format_edge_list(incompat_as_graph(g));
  return exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact maximum strong triadic closure solvers"};
  app.require_subcommand(1);

  std::string input, labeling, solver = "auto";
  std::size_t cap = 34;
  bool seedless = false;
  GenerateArgs gen;

  auto *solve = app.add_subcommand("solve", "Solve MaxSTC for an edge-list graph");
  solve->add_option("input", input, "Edge-list file, '-' for stdin")->required();
  solve->add_option("--solver", solver, "Solver to run")
      ->check(CLI::IsMember({"auto", "pig", "tp", "bip", "oracle"}))
      ->capture_default_str();
  solve->add_option("--oracle-cap", cap, "Largest edge count handed to the exact oracle")
      ->capture_default_str();
  solve->add_flag("--seedless", seedless, "Accepted for scripting; solving never draws randomness");

  auto *verify = app.add_subcommand("verify", "Check a labeling for strong triadic closure");
  verify->add_option("graph", input, "Edge-list file")->required();
  verify->add_option("labeling", labeling, "Result document (JSON)")->required();

  auto *generate = app.add_subcommand("generate", "Generate instances");
  generate->add_option("kind", gen.kind, "pig | tp | 3sp-reduction | stc-reduction")
      ->required()
      ->check(CLI::IsMember({"pig", "tp", "3sp-reduction", "stc-reduction"}));
  generate->add_option("--n", gen.n, "Vertex count for random graphs");
  generate->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  generate->add_option("--spread", gen.spread, "Endpoint range factor for pig (smaller is denser)")
      ->capture_default_str();
  generate->add_option("--universe", gen.universe, "3-Set Packing universe size");
  generate->add_option("--triplets", gen.triplets, "Triplets such as \"1,2,3;4,5,6\"");
  generate->add_option("--output", gen.output, "Edge-list destination (default stdout)");
  generate->add_option("--sidecar", gen.sidecar, "Threshold table destination");

  auto *recog = app.add_subcommand("recognize", "Report class memberships with witnesses");
  recog->add_option("input", input, "Edge-list file")->required();

  auto *incompat = app.add_subcommand("incompat", "Print the line-incompatibility graph");
  incompat->add_option("input", input, "Edge-list file")->required();

  std::vector<const char *> argv;
  for (const auto &a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return exit_parse_error;
  }

  try {
    if (*solve)
      return cmd_solve(input, solver, cap, out);
    if (*verify)
      return cmd_verify(input, labeling, out);
    if (*generate)
      return cmd_generate(gen, out);
    if (*recog)
      return cmd_recognize(input, out);
    if (*incompat)
      return cmd_incompat(input, out);
  } catch (const input_error &e) {
    err << "error: " << e.what() << '\n';
    return exit_parse_error;
  } catch (const wrong_class_error &e) {
    err << "wrong class: " << e.what() << '\n';
    return exit_wrong_class;
  } catch (const unsupported_error &e) {
    err << "unsupported: " << e.what() << '\n';
    return exit_unsupported;
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << '\n';
    return exit_internal;
  }
  return exit_parse_error;
}

} // namespace stc
