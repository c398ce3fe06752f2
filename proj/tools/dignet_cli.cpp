// dignet: command-line front end.
//
// Exit status: 0 found/true, 1 notfound/false, 2 inconclusive, 3 usage
// error, 4 unreadable or malformed input, 5 any other failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "dignet/dignet.hpp"

namespace {

using namespace dignet;
using nlohmann::ordered_json;

constexpr int kFound = 0, kNotFound = 1, kInconclusive = 2;
constexpr int kUsage = 3, kBadInput = 4, kFailure = 5;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An input file failed to parse; `what` carries the path and position.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_for(Verdict v) {
  return v == Verdict::Found ? kFound : v == Verdict::NotFound ? kNotFound : kInconclusive;
}

struct Global {
  bool json = false;
  std::size_t budget = 100'000'000;
  std::size_t max_factorizations = 1'000'000;
  std::size_t tree_budget = 200'000;
  std::size_t workers = 1;
  std::uint64_t seed = 1;
  bool alternate_roots = false;
  bool negation_symmetry = false;
};

// Reads a whole input ("-" is stdin) and hands it to `parse`, prefixing
// parse errors with the path.
template <class F>
auto parse_file(const std::string &path, F parse) {
  std::ifstream file;
  std::istream *in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file)
      throw InputError(path + ": cannot open");
    in = &file;
  }
  try {
    return parse(*in);
  } catch (const ParseError &e) {
    throw InputError(path + ": " + e.what());
  } catch (const DigraphError &e) {
    throw InputError(path + ": " + e.what());
  }
}

Digraph load_graph(const std::string &path) {
  return parse_file(path, [](std::istream &in) { return read_edge_list(in); });
}

Factorization load_factors(const std::string &path, const Digraph &host) {
  return parse_file(path, [&](std::istream &in) { return read_factorization(in, host); });
}

WordSet load_words(const std::string &path, std::size_t d) {
  return parse_file(path, [&](std::istream &in) { return read_wordset(in, d); });
}

GroupoidTable load_table(const std::string &path) {
  return parse_file(path, [](std::istream &in) { return read_groupoid_csv(in); });
}

// Writes to `path`, or to stdout when the path is "-". Empty path: nothing.
void emit(const std::string &path, const std::function<void(std::ostream &)> &write) {
  if (path.empty())
    return;
  if (path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error(path + ": cannot write");
  write(out);
  if (!out)
    throw std::runtime_error(path + ": write failed");
}

SpanningSearchOptions spanning_options(const Global &g, std::size_t degree) {
  SpanningSearchOptions o;
  o.node_budget = g.budget;
  o.max_factorizations = g.max_factorizations;
  o.tree_budget = g.tree_budget;
  o.workers = g.workers;
  o.seed = g.seed;
  if (g.alternate_roots) {
    std::size_t orders = 1;
    for (std::size_t k = 2; k <= degree && orders < 720; ++k)
      orders *= k;
    o.letter_orders = orders;
  }
  return o;
}

ordered_json stats_json(const SpanningSearchStats &s) {
  return {{"factorizations", s.factorizations}, {"wordsets", s.wordsets},
          {"nodes", s.nodes},                   {"tree_nodes", s.tree_nodes},
          {"incomplete", s.incomplete},         {"exhausted", s.exhausted}};
}

ordered_json words_json(const WordSet &ws) {
  ordered_json out = ordered_json::array();
  for (const Word &w : ws.words())
    out.push_back(w);
  return out;
}

ordered_json factors_json(const Factorization &f) {
  ordered_json out = ordered_json::array();
  for (const OneFactor &k : f.factors())
    out.push_back(k.succ);
  return out;
}

const char *certificate_name(TransitivityCertificate c) {
  switch (c) {
  case TransitivityCertificate::Theta:
    return "theta";
  case TransitivityCertificate::AutomorphismSearch:
    return "search";
  default:
    return "none";
  }
}

void print_json(const ordered_json &j) { std::cout << j.dump(2) << '\n'; }

// Schedule text format: "T <max time>", then one line per word, "-" for the
// empty word, otherwise "letter@time" entries.
void write_schedule(std::ostream &os, const WordSet &ws, const Schedule &s) {
  os << "T " << s.T << '\n';
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (ws[i].empty())
      os << '-';
    for (std::size_t pos = 0; pos < ws[i].size(); ++pos)
      os << (pos ? " " : "") << ws[i][pos] << '@' << s.times.at({i, pos});
    os << '\n';
  }
}

// gen
// ---

struct GenArgs {
  std::string name;
  std::string output = "-", factors_out, dot_out;
  std::uint32_t p = 5;
  std::size_t n = 0, d = 2, a = 0;
  std::string pi, v, params, spec;
  bool closed = false;
};

struct Built {
  Digraph graph;
  std::optional<Factorization> factors;
};

Factorization cycle_graph(std::size_t n) {
  if (n < 2)
    throw UsageError("cycle needs --n >= 2");
  OneFactor s;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    s.succ.push_back(static_cast<Vertex>((u + 1) % n));
    edges.push_back({u, s.succ.back()});
  }
  return Factorization(Digraph::validate(n, std::move(edges)), {std::move(s)});
}

// Union of d random fixed-point-free permutations, redrawn until strongly
// connected. Deterministic in the seed.
Factorization random_graph(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (n < 2 || d < 1)
    throw UsageError("random needs --n >= 2 and --d >= 1");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<OneFactor> factors;
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < d; ++k) {
      std::vector<Vertex> p(n);
      std::iota(p.begin(), p.end(), Vertex{0});
      auto fixes = [&] {
        for (Vertex u = 0; u < n; ++u)
          if (p[u] == u)
            return true;
        return false;
      };
      do
        std::shuffle(p.begin(), p.end(), rng);
      while (fixes());
      for (Vertex u = 0; u < n; ++u)
        edges.push_back({u, p[u]});
      factors.push_back({std::move(p)});
    }
    Digraph g = Digraph::regular(n, edges);
    if (g.strongly_connected())
      return Factorization(g, std::move(factors));
  }
  throw std::runtime_error("no strongly connected sample in 1000 draws");
}

DiffSetParams diffset_from_args(const GenArgs &args) {
  if (!args.params.empty())
    return parse_file(args.params, [](std::istream &in) { return read_diffset_params(in); });
  if (args.n == 0 || args.a == 0 || args.pi.empty() || args.v.empty())
    throw UsageError("diffset needs --params FILE, or --n, --a, --pi and --v");
  std::ostringstream text;
  text << args.n << ' ' << args.a << ' ' << args.n / args.a << "\npi: " << args.pi
       << "\nv: " << args.v << '\n';
  std::istringstream in(text.str());
  try {
    return read_diffset_params(in);
  } catch (const ParseError &e) {
    throw UsageError(std::string("diffset arguments: ") + e.what());
  }
}

Built build_named(const GenArgs &args, const Global &g) {
  const std::string &name = args.name;
  if (name == "kautz") {
    auto cg = cayley_graph(kautz_table());
    return {cg.graph, cg.factorization};
  }
  if (name == "hs")
    return {hoffman_singleton_graph(args.p), std::nullopt};
  if (name == "alegre") {
    auto f = alegre_graph();
    return {f.host(), f};
  }
  if (name == "petersen-coset") {
    if (args.closed) {
      auto cg = build_coset_graph(petersen_closed_spec());
      return {cg.digraph, coset_factorization(cg.spec)};
    }
    auto P = petersen_group();
    auto spec = petersen_spec();
    return {labeled_coset_digraph(P.group, spec.H, spec.S, petersen_reps(P)), std::nullopt};
  }
  if (name == "coset") {
    if (args.spec.empty())
      throw UsageError("coset needs --spec FILE");
    auto spec = parse_file(args.spec, [](std::istream &in) { return read_group_spec(in); });
    auto cg = build_coset_graph(spec);
    return {cg.digraph, coset_factorization(cg.spec)};
  }
  if (name == "diffset") {
    auto f = diffset_digraph(diffset_from_args(args));
    return {f.host(), f};
  }
  if (name == "cycle") {
    auto f = cycle_graph(args.n);
    return {f.host(), f};
  }
  if (name == "random") {
    auto f = random_graph(args.n, args.d, g.seed);
    return {f.host(), f};
  }
  throw UsageError("unknown construction \"" + name + "\"");
}

int cmd_gen(const GenArgs &args, const Global &g) {
  Built b = build_named(args, g);
  if (!args.factors_out.empty() && !b.factors)
    throw UsageError(args.name + " defines no factorization");
  std::string graph_out = g.json && args.output == "-" ? "" : args.output;
  emit(graph_out, [&](std::ostream &os) { write_edge_list(os, b.graph); });
  emit(args.factors_out, [&](std::ostream &os) { write_factorization(os, *b.factors); });
  emit(args.dot_out, [&](std::ostream &os) {
    if (b.factors)
      write_dot(os, *b.factors);
    else
      write_dot(os, b.graph);
  });
  if (g.json)
    print_json({{"graph", args.name},
                {"order", b.graph.order()},
                {"degree", b.graph.degree()},
                {"edges", b.graph.size()},
                {"factorization", b.factors.has_value()}});
  return kFound;
}

// factorize, spanning, schedule, check-vt, export-dot
// ---------------------------------------------------

int cmd_factorize(const std::string &graph, const std::string &output, const Global &g) {
  Digraph host = load_graph(graph);
  Factorization f = one_factorization(host);
  std::string out = g.json && output == "-" ? "" : output;
  emit(out, [&](std::ostream &os) { write_factorization(os, f); });
  if (g.json)
    print_json({{"verified", static_cast<bool>(verify_factorization(f))},
                {"factors", factors_json(f)}});
  return kFound;
}

int cmd_spanning(const std::string &graph, const std::string &factors_out,
                 const std::string &words_out, const Global &g) {
  Digraph host = load_graph(graph);
  auto result = find_spanning_factorization(host, spanning_options(g, host.degree()));
  if (result.witness) {
    emit(factors_out,
         [&](std::ostream &os) { write_factorization(os, result.witness->factorization); });
    emit(words_out, [&](std::ostream &os) { write_wordset(os, result.witness->wordset); });
  }
  if (g.json) {
    ordered_json j{{"verdict", to_string(result.verdict)}, {"stats", stats_json(result.stats)}};
    if (result.witness) {
      j["factors"] = factors_json(result.witness->factorization);
      j["words"] = words_json(result.witness->wordset);
    }
    print_json(j);
  } else {
    std::cout << to_string(result.verdict) << '\n';
  }
  return exit_for(result.verdict);
}

int cmd_schedule(const std::string &graph, const std::string &factors,
                 const std::string &words, const std::string &output, const Global &g) {
  Digraph host = load_graph(graph);
  std::optional<SpanningFactorization> sf;
  if (factors.empty() != words.empty())
    throw UsageError("give both --factors and --words, or neither");
  if (!factors.empty()) {
    Factorization f = load_factors(factors, host);
    sf = SpanningFactorization{f, load_words(words, f.size())};
    if (!is_spanning(sf->factorization, sf->wordset))
      throw InputError(words + ": word set is not spanning for this factorization");
  } else {
    auto result = find_spanning_factorization(host, spanning_options(g, host.degree()));
    if (!result.witness) {
      if (g.json)
        print_json({{"verdict", to_string(result.verdict)}});
      else
        std::cout << to_string(result.verdict) << '\n';
      return exit_for(result.verdict);
    }
    sf = result.witness;
  }
  Schedule s = greedy_schedule(sf->wordset);
  auto report = verify_schedule(*sf, s);
  std::string out = g.json && output == "-" ? "" : output;
  emit(out, [&](std::ostream &os) { write_schedule(os, sf->wordset, s); });
  if (g.json) {
    ordered_json times = ordered_json::array();
    for (std::size_t i = 0; i < sf->wordset.size(); ++i) {
      ordered_json row = ordered_json::array();
      for (std::size_t pos = 0; pos < sf->wordset[i].size(); ++pos)
        row.push_back(s.times.at({i, pos}));
      times.push_back(row);
    }
    ordered_json j{{"T", s.T},
                   {"verified", report.ok},
                   {"words", words_json(sf->wordset)},
                   {"times", times}};
    if (!report.ok)
      j["violation"] = report.violation;
    print_json(j);
  } else if (!report.ok) {
    std::cerr << "schedule check failed: " << report.violation << '\n';
  }
  return report.ok ? kFound : kNotFound;
}

int cmd_check_vt(const std::string &graph, bool via_groupoid, const std::string &maps_out,
                 const Global &g) {
  Digraph host = load_graph(graph);
  Verdict verdict;
  std::vector<VertexMap> generators;
  ordered_json j;
  if (via_groupoid) {
    GroupoidSearchOptions o;
    o.node_budget = g.budget;
    o.max_factorizations = g.max_factorizations;
    o.tree_budget = g.tree_budget;
    auto r = vt_check_via_groupoid(host, o);
    verdict = r.verdict;
    generators = r.generators;
    j = {{"verdict", to_string(verdict)},
         {"method", "groupoid"},
         {"stats", stats_json(r.stats)},
         {"neighbour_orbits", r.neighbour_orbits}};
  } else {
    auto r = is_vertex_transitive(host, spanning_options(g, host.degree()));
    verdict = r.verdict;
    generators = r.generators;
    j = {{"verdict", to_string(verdict)},
         {"method", "spanning"},
         {"certificate", certificate_name(r.certificate)},
         {"stats", stats_json(r.stats)}};
    if (r.witness) {
      j["factors"] = factors_json(r.witness->factorization);
      j["words"] = words_json(r.witness->wordset);
    }
  }
  ordered_json maps = ordered_json::array();
  for (const VertexMap &m : generators)
    maps.push_back(m.images());
  j["generators"] = maps;
  emit(maps_out, [&](std::ostream &os) {
    for (const VertexMap &m : generators) {
      for (std::size_t u = 0; u < m.size(); ++u)
        os << (u ? " " : "") << m(static_cast<Vertex>(u));
      os << '\n';
    }
  });
  if (g.json)
    print_json(j);
  else
    std::cout << to_string(verdict) << '\n';
  return exit_for(verdict);
}

int cmd_export_dot(const std::string &graph, const std::string &factors,
                   const std::string &output) {
  Digraph host = load_graph(graph);
  if (factors.empty()) {
    emit(output, [&](std::ostream &os) { write_dot(os, host); });
  } else {
    Factorization f = load_factors(factors, host);
    emit(output, [&](std::ostream &os) { write_dot(os, f); });
  }
  return kFound;
}

// groupoid
// --------

int cmd_groupoid_from_graph(const std::string &graph, const std::string &factors,
                            Vertex root, const std::string &output, const Global &g) {
  Digraph host = load_graph(graph);
  Factorization f = factors.empty() ? one_factorization(host) : load_factors(factors, host);
  if (root >= host.order())
    throw UsageError("--root out of range");
  auto fg = groupoid_from_factorization(f, root);
  std::string out = g.json && output == "-" ? "" : output;
  emit(out, [&](std::ostream &os) { write_groupoid_csv(os, fg.groupoid.table()); });
  if (g.json) {
    ordered_json labels = ordered_json::array();
    for (const Word &w : fg.labeling.labels)
      labels.push_back(w);
    print_json({{"order", fg.groupoid.order()},
                {"generators", fg.groupoid.gen_ids()},
                {"labels", labels},
                {"levels", fg.labeling.levels},
                {"vertex_of", fg.vertex_of.images()}});
  }
  return kFound;
}

int cmd_groupoid_extend(const std::string &table, const std::string &labels_path,
                        const std::string &output, const Global &g) {
  PartialGroupoid pg(load_table(table));
  std::vector<Word> labels;
  if (labels_path.empty()) {
    labels = tree_like_labeling(pg).labels;
  } else {
    WordSet ws = load_words(labels_path, pg.degree());
    labels = ws.words();
  }
  FullGroupoid full = canonical_extension(pg, labels);
  GroupoidTable t = full.table();
  t.labels = pg.table().labels;
  bool cancels = has_left_cancellation(full);
  std::string out = g.json && output == "-" ? "" : output;
  emit(out, [&](std::ostream &os) { write_groupoid_csv(os, t); });
  if (g.json)
    print_json({{"left_cancellation", cancels},
                {"columns_permutations", full.columns_are_permutations()}});
  return kFound;
}

int cmd_groupoid_axioms(const std::string &table, const Global &g) {
  GroupoidTable t = load_table(table);
  AxiomReport r = check_axioms(t);
  std::optional<bool> cancels;
  if (!t.partial && r.groupoid()) {
    FullGroupoid full(t.gen_ids, t.rows);
    cancels = has_left_cancellation(full);
  }
  if (g.json) {
    ordered_json j;
    for (int k = 1; k <= 4; ++k) {
      ordered_json a{{"pass", r[k].pass}};
      if (!r[k].pass)
        a["witness"] = r[k].witness;
      j["axiom" + std::to_string(k)] = a;
    }
    j["groupoid"] = r.groupoid();
    if (r.all_columns_permutations)
      j["all_columns_permutations"] = *r.all_columns_permutations;
    if (cancels)
      j["left_cancellation"] = *cancels;
    print_json(j);
  } else {
    for (int k = 1; k <= 4; ++k)
      std::cout << "axiom " << k << ": " << (r[k].pass ? "pass" : "fail: " + r[k].witness)
                << '\n';
    if (cancels)
      std::cout << "left cancellation: " << (*cancels ? "yes" : "no") << '\n';
  }
  return r.groupoid() ? kFound : kNotFound;
}

int cmd_groupoid_cayley(const std::string &table, const std::string &output,
                        const std::string &factors_out, const Global &g) {
  PartialGroupoid pg(load_table(table));
  CayleyGraph cg = cayley_graph(pg);
  std::string out = g.json && output == "-" ? "" : output;
  emit(out, [&](std::ostream &os) { write_edge_list(os, cg.graph); });
  emit(factors_out, [&](std::ostream &os) { write_factorization(os, cg.factorization); });
  if (g.json)
    print_json({{"order", cg.graph.order()},
                {"degree", cg.graph.degree()},
                {"factors", factors_json(cg.factorization)}});
  return kFound;
}

// search
// ------

struct SearchArgs {
  std::size_t n = 0, a = 0, b = 0;
  std::optional<std::size_t> target;
  bool unreduced = false;
  std::string params_out;
};

int cmd_search(const SearchArgs &args, const Global &g) {
  std::size_t b = args.b;
  if (b == 0 && args.a != 0)
    b = args.n / args.a;
  DiffSetSearchOptions o;
  o.reduce = !args.unreduced;
  o.negation_symmetry = g.negation_symmetry;
  o.target_diameter = args.target;
  o.max_candidates = g.budget;
  o.workers = g.workers;
  DiffSetSearchResult r;
  bool complete = true;
  try {
    r = search_diffsets(args.n, args.a, b, o);
  } catch (const DiffSetSearchBudgetExceeded &e) {
    r = e.partial();
    complete = false;
  }
  if (!r.argmin.empty())
    emit(args.params_out, [&](std::ostream &os) { write_diffset_params(os, r.argmin.front()); });
  int code = !complete                      ? kInconclusive
             : !r.best_diameter             ? kNotFound
             : args.target && !r.target_reached ? kNotFound
                                                : kFound;
  if (g.json) {
    ordered_json argmin = ordered_json::array();
    for (const auto &p : r.argmin)
      argmin.push_back(to_string(p));
    ordered_json j{{"n", args.n},
                   {"a", args.a},
                   {"b", b},
                   {"reduced", o.reduce},
                   {"reduced_space", r.reduced_space},
                   {"complete", complete},
                   {"examined", r.examined},
                   {"skipped_fixed_point", r.skipped_fixed_point},
                   {"skipped_symmetry", r.skipped_symmetry}};
    j["best_diameter"] = r.best_diameter ? ordered_json(*r.best_diameter) : ordered_json();
    if (args.target)
      j["target_reached"] = r.target_reached;
    j["argmin"] = argmin;
    print_json(j);
  } else {
    std::cout << "space " << r.reduced_space << ", examined " << r.examined << '\n';
    if (!complete)
      std::cout << "candidate budget exceeded\n";
    else if (r.best_diameter)
      std::cout << "best diameter " << *r.best_diameter << " (" << r.argmin.size()
                << " parameter sets)\n";
    else
      std::cout << "no valid parameters\n";
  }
  return code;
}

int run(int argc, char **argv) {
  CLI::App app{"Regular digraphs, factorizations and groupoids"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_flag("--json", g.json, "Print a JSON report on stdout");
  app.add_option("--budget", g.budget, "Search node budget (search: candidate budget)")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-factorizations", g.max_factorizations,
                 "Factorizations examined before giving up")
      ->check(CLI::PositiveNumber);
  app.add_option("--tree-budget", g.tree_budget,
                 "Exhaustive word-tree search nodes per factorization (0: breadth-first only)");
  app.add_option("--workers", g.workers, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for randomized steps");
  app.add_flag("--alternate-roots", g.alternate_roots,
               "Try every breadth-first letter order, not only the natural one");
  app.add_flag("--negation-symmetry", g.negation_symmetry,
               "search: identify parameters whose digraphs are converse");

  std::function<int()> action;

  GenArgs gen;
  auto *sub = app.add_subcommand("gen", "Build a named digraph");
  sub->add_option("name", gen.name,
                  "kautz, hs, alegre, petersen-coset, diffset, cycle, coset or random")
      ->required();
  sub->add_option("-o,--output", gen.output, "Edge list path (- for stdout)");
  sub->add_option("--factors-out", gen.factors_out, "Write the natural factorization");
  sub->add_option("--dot", gen.dot_out, "Write DOT");
  sub->add_option("--p", gen.p, "hs: prime modulus");
  sub->add_option("--n", gen.n, "cycle, random, diffset: vertex count");
  sub->add_option("--d", gen.d, "random: degree");
  sub->add_option("--a", gen.a, "diffset: index of U");
  sub->add_option("--pi", gen.pi, "diffset: pi in cycle notation");
  sub->add_option("--v", gen.v, "diffset: comma-separated offsets");
  sub->add_option("--params", gen.params, "diffset: parameter file");
  sub->add_option("--spec", gen.spec, "coset: group spec file");
  sub->add_flag("--closed", gen.closed, "petersen-coset: use the H-closed connection set");
  sub->callback([&] { action = [&] { return cmd_gen(gen, g); }; });

  std::string graph, output = "-", factors, words, factors_out, words_out, maps_out;
  sub = app.add_subcommand("factorize", "Split a regular digraph into 1-factors");
  sub->add_option("graph", graph, "Edge list")->required();
  sub->add_option("-o,--output", output, "Factorization path");
  sub->callback([&] { action = [&] { return cmd_factorize(graph, output, g); }; });

  sub = app.add_subcommand("spanning", "Search for a spanning factorization");
  sub->add_option("graph", graph, "Edge list")->required();
  sub->add_option("--factors-out", factors_out, "Write the witness factorization");
  sub->add_option("--words-out", words_out, "Write the witness word set");
  sub->callback([&] { action = [&] { return cmd_spanning(graph, factors_out, words_out, g); }; });

  sub = app.add_subcommand("schedule", "Greedy conflict-free schedule");
  sub->add_option("graph", graph, "Edge list")->required();
  sub->add_option("--factors", factors, "Factorization (default: search for one)");
  sub->add_option("--words", words, "Spanning word set");
  sub->add_option("-o,--output", output, "Schedule path");
  sub->callback([&] { action = [&] { return cmd_schedule(graph, factors, words, output, g); }; });

  bool via_groupoid = false;
  sub = app.add_subcommand("check-vt", "Decide vertex transitivity");
  sub->add_option("graph", graph, "Edge list")->required();
  sub->add_flag("--groupoid", via_groupoid, "Decide through groupoid labellings");
  sub->add_option("--maps-out", maps_out, "Write the certified automorphisms");
  sub->callback([&] { action = [&] { return cmd_check_vt(graph, via_groupoid, maps_out, g); }; });

  sub = app.add_subcommand("export-dot", "Render an edge list as DOT");
  sub->add_option("graph", graph, "Edge list")->required();
  sub->add_option("--factors", factors, "Colour edges by factor");
  sub->add_option("-o,--output", output, "DOT path");
  sub->callback([&] { action = [&] { return cmd_export_dot(graph, factors, output); }; });

  auto *grp = app.add_subcommand("groupoid", "Groupoid tables");
  grp->require_subcommand(1);
  std::string table, labels;
  Vertex root = 0;
  sub = grp->add_subcommand("from-graph", "Partial groupoid of a factorization");
  sub->add_option("graph", graph, "Edge list")->required();
  sub->add_option("--factors", factors, "Factorization (default: one_factorization)");
  sub->add_option("--root", root, "Vertex that becomes e");
  sub->add_option("-o,--output", output, "CSV path");
  sub->callback(
      [&] { action = [&] { return cmd_groupoid_from_graph(graph, factors, root, output, g); }; });

  sub = grp->add_subcommand("extend", "Canonical extension to a full table");
  sub->add_option("table", table, "Partial table (CSV)")->required();
  sub->add_option("--labels", labels, "Tree-like labels, one word per element");
  sub->add_option("-o,--output", output, "CSV path");
  sub->callback([&] { action = [&] { return cmd_groupoid_extend(table, labels, output, g); }; });

  sub = grp->add_subcommand("axioms", "Check the groupoid axioms");
  sub->add_option("table", table, "Table (CSV)")->required();
  sub->callback([&] { action = [&] { return cmd_groupoid_axioms(table, g); }; });

  sub = grp->add_subcommand("cayley", "Cayley digraph of a partial table");
  sub->add_option("table", table, "Table (CSV)")->required();
  sub->add_option("-o,--output", output, "Edge list path");
  sub->add_option("--factors-out", factors_out, "Write the generator factorization");
  sub->callback(
      [&] { action = [&] { return cmd_groupoid_cayley(table, output, factors_out, g); }; });

  SearchArgs search;
  sub = app.add_subcommand("search", "Search difference-set parameters");
  sub->add_option("--n", search.n, "Vertex count")->required();
  sub->add_option("--a", search.a, "Index of U")->required();
  sub->add_option("--b", search.b, "Order of U (default n/a)");
  sub->add_option("--target", search.target, "Stop reporting success above this diameter");
  sub->add_flag("--unreduced", search.unreduced, "Enumerate every parameter set");
  sub->add_option("--params-out", search.params_out, "Write the first optimal parameter set");
  sub->callback([&] { action = [&] { return cmd_search(search, g); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }
  return action();
}

} // namespace

int main(int argc, char **argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError &e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError &e) {
    std::cerr << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
}
