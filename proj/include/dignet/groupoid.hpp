#ifndef DIGNET_GROUPOID_HPP
#define DIGNET_GROUPOID_HPP

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "dignet/digraph.hpp"
#include "dignet/factorize.hpp"
#include "dignet/spanfact.hpp"

namespace dignet {

class GroupoidError : public Error {
public:
  enum class Kind { InvalidTable, NotGenerated, InvalidLabeling };

  GroupoidError(Kind kind, std::string msg, Vertex element = 0)
      : Error(std::move(msg)), kind_(kind), element_(element) {}

  Kind kind() const noexcept { return kind_; }
  Vertex element() const noexcept { return element_; }

private:
  Kind kind_;
  Vertex element_;
};

/// A raw multiplication table, not yet checked against the axioms.
///
/// Element 0 plays the part of e. A partial table has one column per
/// generator: rows[u][k] = u * gen_ids[k]. A full table has one column per
/// element: rows[u][w] = u * w.
struct GroupoidTable {
  std::vector<Vertex> gen_ids;
  std::vector<std::vector<Vertex>> rows;
  bool partial = true;
  std::vector<std::string> labels;  // optional element names

  std::size_t order() const noexcept { return rows.size(); }
  std::size_t generators() const noexcept { return gen_ids.size(); }

  /// u * s_k.
  Vertex by_generator(Vertex u, std::size_t k) const {
    return partial ? rows[u][k] : rows[u][gen_ids[k]];
  }

  std::string label(Vertex x) const {
    return x < labels.size() ? labels[x] : std::to_string(x);
  }
};

struct AxiomResult {
  bool pass = true;
  std::string witness;
};

/// Axioms 1-3 of a groupoid, plus left cancellation on S (axiom 4). For a
/// full table axiom 1 is the left identity on every element and
/// `all_columns_permutations` reports right cancellation in full.
struct AxiomReport {
  AxiomResult axiom1, axiom2, axiom3, axiom4;
  std::optional<bool> all_columns_permutations;

  /// Axioms 1-3, the groupoid requirements.
  bool groupoid() const { return axiom1.pass && axiom2.pass && axiom3.pass; }
  const AxiomResult &operator[](int k) const {
    return k == 1 ? axiom1 : k == 2 ? axiom2 : k == 3 ? axiom3 : axiom4;
  }
};

namespace detail {

inline std::string show(const GroupoidTable &t, Vertex x) { return t.label(x); }

inline void check_shape(const GroupoidTable &t) {
  const std::size_t n = t.order();
  if (n == 0)
    throw GroupoidError(GroupoidError::Kind::InvalidTable, "table has no rows");
  const std::size_t cols = t.partial ? t.generators() : n;
  for (std::size_t u = 0; u < n; ++u) {
    if (t.rows[u].size() != cols)
      throw GroupoidError(GroupoidError::Kind::InvalidTable,
                          "row " + std::to_string(u) + " has " +
                              std::to_string(t.rows[u].size()) + " entries, expected " +
                              std::to_string(cols),
                          static_cast<Vertex>(u));
    for (Vertex x : t.rows[u])
      if (x >= n)
        throw GroupoidError(GroupoidError::Kind::InvalidTable,
                            "entry out of range in row " + std::to_string(u),
                            static_cast<Vertex>(u));
  }
  for (Vertex g : t.gen_ids)
    if (g >= n)
      throw GroupoidError(GroupoidError::Kind::InvalidTable, "generator out of range", g);
}

// First repeated entry of a column, as (row a, row b, value).
inline std::optional<std::tuple<Vertex, Vertex, Vertex>>
column_collision(const GroupoidTable &t, std::size_t col) {
  std::vector<std::optional<Vertex>> first(t.order());
  for (Vertex u = 0; u < t.order(); ++u) {
    Vertex x = t.rows[u][col];
    if (first[x])
      return std::tuple{*first[x], u, x};
    first[x] = u;
  }
  return std::nullopt;
}

} // namespace detail

inline AxiomReport check_axioms(const GroupoidTable &t) {
  detail::check_shape(t);
  const std::size_t n = t.order(), d = t.generators();
  AxiomReport r;
  auto at = [&](Vertex u, std::size_t k) { return t.by_generator(u, k); };
  auto name = [&](Vertex x) { return detail::show(t, x); };

  if (t.partial) {
    for (std::size_t k = 0; k < d && r.axiom1.pass; ++k)
      if (at(0, k) != t.gen_ids[k])
        r.axiom1 = {false, name(0) + "*" + name(t.gen_ids[k]) + " = " + name(at(0, k))};
  } else {
    for (Vertex w = 0; w < n && r.axiom1.pass; ++w)
      if (t.rows[0][w] != w)
        r.axiom1 = {false, name(0) + "*" + name(w) + " = " + name(t.rows[0][w])};
  }

  for (Vertex u = 0; u < n && r.axiom2.pass; ++u)
    for (std::size_t k = 0; k < d; ++k)
      if (at(u, k) == u) {
        r.axiom2 = {false, name(u) + "*" + name(t.gen_ids[k]) + " = " + name(u)};
        break;
      }

  for (std::size_t k = 0; k < d && r.axiom3.pass; ++k)
    if (auto c = detail::column_collision(t, t.partial ? k : t.gen_ids[k])) {
      auto [a, b, x] = *c;
      r.axiom3 = {false, name(a) + "*" + name(t.gen_ids[k]) + " = " + name(b) + "*" +
                             name(t.gen_ids[k]) + " = " + name(x)};
    }

  for (Vertex u = 0; u < n && r.axiom4.pass; ++u)
    for (std::size_t k = 0; k < d && r.axiom4.pass; ++k)
      for (std::size_t j = k + 1; j < d; ++j)
        if (at(u, k) == at(u, j)) {
          r.axiom4 = {false, name(u) + "*" + name(t.gen_ids[k]) + " = " + name(u) + "*" +
                                 name(t.gen_ids[j]) + " = " + name(at(u, k))};
          break;
        }

  if (!t.partial) {
    bool all = true;
    for (std::size_t c = 0; c < n && all; ++c)
      all = !detail::column_collision(t, c);
    r.all_columns_permutations = all;
  }
  return r;
}

/// Generator columns that satisfy axioms 1-3: table[u][k] = u * s_k.
class PartialGroupoid {
public:
  PartialGroupoid() = default;

  /// Throws GroupoidError(InvalidTable) naming the first failing axiom.
  explicit PartialGroupoid(GroupoidTable t) : t_(std::move(t)) {
    if (!t_.partial) {
      GroupoidTable p;
      p.gen_ids = t_.gen_ids;
      p.labels = t_.labels;
      for (const auto &row : t_.rows) {
        std::vector<Vertex> r;
        for (Vertex g : t_.gen_ids)
          r.push_back(row[g]);
        p.rows.push_back(std::move(r));
      }
      t_ = std::move(p);
    }
    auto report = check_axioms(t_);
    for (int k = 1; k <= 3; ++k)
      if (!report[k].pass)
        throw GroupoidError(GroupoidError::Kind::InvalidTable,
                            "axiom " + std::to_string(k) + " fails: " + report[k].witness);
  }

  PartialGroupoid(std::vector<Vertex> gen_ids, std::vector<std::vector<Vertex>> table)
      : PartialGroupoid(GroupoidTable{std::move(gen_ids), std::move(table), true, {}}) {}

  std::size_t order() const noexcept { return t_.order(); }
  std::size_t degree() const noexcept { return t_.generators(); }
  const std::vector<Vertex> &gen_ids() const noexcept { return t_.gen_ids; }
  const GroupoidTable &table() const noexcept { return t_; }
  Vertex operator()(Vertex u, std::size_t k) const { return t_.rows[u][k]; }

  friend bool operator==(const PartialGroupoid &a, const PartialGroupoid &b) {
    return a.t_.gen_ids == b.t_.gen_ids && a.t_.rows == b.t_.rows;
  }

private:
  GroupoidTable t_;
};

/// A full n x n table: rows[u][w] = u * w.
class FullGroupoid {
public:
  FullGroupoid() = default;
  FullGroupoid(std::vector<Vertex> gen_ids, std::vector<std::vector<Vertex>> rows)
      : t_{std::move(gen_ids), std::move(rows), false, {}} {
    detail::check_shape(t_);
  }

  std::size_t order() const noexcept { return t_.order(); }
  const std::vector<Vertex> &gen_ids() const noexcept { return t_.gen_ids; }
  const GroupoidTable &table() const noexcept { return t_; }
  Vertex operator()(Vertex u, Vertex w) const { return t_.rows[u][w]; }
  const std::vector<Vertex> &row(Vertex u) const { return t_.rows[u]; }

  bool columns_are_permutations() const {
    for (std::size_t c = 0; c < order(); ++c)
      if (detail::column_collision(t_, c))
        return false;
    return true;
  }

private:
  GroupoidTable t_;
};

/// Labels (one word per element) and the levels L_0, L_1, ...
struct LabelingReport {
  std::vector<Word> labels;
  std::vector<std::vector<Vertex>> levels;
};

/// Level-by-level labelling. The pairs (u, s) with u in L_j are scanned in
/// (position of u in L_j, generator index) order and the first pair of each
/// class {(u, s) : u*s = x} labels x, unless x already has a label.
inline LabelingReport tree_like_labeling(const PartialGroupoid &pg) {
  const std::size_t n = pg.order();
  LabelingReport r;
  r.labels.assign(n, Word{});
  std::vector<bool> done(n, false);
  done[0] = true;
  r.levels.push_back({0});
  while (true) {
    std::vector<Vertex> next;
    for (Vertex u : r.levels.back())
      for (std::size_t k = 0; k < pg.degree(); ++k) {
        Vertex x = pg(u, k);
        if (done[x])
          continue;
        done[x] = true;
        r.labels[x] = r.labels[u];
        r.labels[x].push_back(static_cast<std::uint32_t>(k));
        next.push_back(x);
      }
    if (next.empty())
      break;
    r.levels.push_back(std::move(next));
  }
  for (Vertex x = 0; x < n; ++x)
    if (!done[x])
      throw GroupoidError(GroupoidError::Kind::NotGenerated,
                          "element " + pg.table().label(x) + " is not a product of generators",
                          x);
  return r;
}

/// u * w = u followed by the label of w, i.e. u*e = u and u*(z s) = (u*z)*s.
/// `labels[w]` must be a prefix-closed system of words whose value from e
/// is w.
inline FullGroupoid canonical_extension(const PartialGroupoid &pg,
                                        const std::vector<Word> &labels) {
  const std::size_t n = pg.order();
  if (labels.size() != n)
    throw GroupoidError(GroupoidError::Kind::InvalidLabeling, "one label per element required");
  // parent[w] = element labelled by labels[w] minus its last letter.
  std::map<Word, Vertex> by_word;
  for (Vertex w = 0; w < n; ++w) {
    Vertex x = 0;
    for (auto k : labels[w]) {
      if (k >= pg.degree())
        throw GroupoidError(GroupoidError::Kind::InvalidLabeling, "letter out of range", w);
      x = pg(x, k);
    }
    if (x != w)
      throw GroupoidError(GroupoidError::Kind::InvalidLabeling,
                          "label of " + pg.table().label(w) + " evaluates elsewhere", w);
    by_word.emplace(labels[w], w);
  }
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::ranges::sort(order, [&](Vertex a, Vertex b) {
    return shortlex_less(labels[a], labels[b]);
  });
  std::vector<std::vector<Vertex>> rows(n, std::vector<Vertex>(n));
  for (Vertex w : order) {
    if (labels[w].empty()) {
      for (Vertex u = 0; u < n; ++u)
        rows[u][w] = u;
      continue;
    }
    auto it = by_word.find(Word(labels[w].begin(), labels[w].end() - 1));
    if (it == by_word.end())
      throw GroupoidError(GroupoidError::Kind::InvalidLabeling,
                          "labels are not prefix-closed at " + pg.table().label(w), w);
    for (Vertex u = 0; u < n; ++u)
      rows[u][w] = pg(rows[u][it->second], labels[w].back());
  }
  FullGroupoid fg(pg.gen_ids(), std::move(rows));
  if (!fg.columns_are_permutations())
    throw Error("invariant violated: canonical extension lost right cancellation");
  return fg;
}

/// Every row injective.
inline bool has_left_cancellation(const FullGroupoid &fg) {
  const std::size_t n = fg.order();
  std::vector<bool> seen(n);
  for (Vertex u = 0; u < n; ++u) {
    std::fill(seen.begin(), seen.end(), false);
    for (Vertex x : fg.row(u)) {
      if (seen[x])
        return false;
      seen[x] = true;
    }
  }
  return true;
}

struct CayleyGraph {
  Digraph graph;
  Factorization factorization;  // factor k = column k
};

namespace detail {

inline CayleyGraph columns_digraph(const GroupoidTable &t) {
  const std::size_t n = t.order();
  std::vector<Edge> edges;
  std::vector<OneFactor> factors;
  for (std::size_t k = 0; k < t.generators(); ++k) {
    OneFactor f;
    for (Vertex u = 0; u < n; ++u) {
      f.succ.push_back(t.by_generator(u, k));
      edges.push_back({u, f.succ.back()});
    }
    factors.push_back(std::move(f));
  }
  Digraph g = Digraph::validate(n, std::move(edges));
  return {g, Factorization(g, std::move(factors))};
}

} // namespace detail

/// Edges (u, u*s) for every element u and generator s, with the generator
/// columns as the natural factorization.
inline CayleyGraph cayley_graph(const PartialGroupoid &pg) {
  tree_like_labeling(pg);  // throws NotGenerated
  return detail::columns_digraph(pg.table());
}

/// Edges (u, u*s) of a table that is not checked against the axioms, for
/// instance one whose e is not a left identity or whose generator columns
/// are not permutations. Throws DigraphError unless the edge multiset is a
/// regular digraph.
inline Digraph generator_digraph(const GroupoidTable &t) {
  detail::check_shape(t);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < t.order(); ++u)
    for (std::size_t k = 0; k < t.generators(); ++k)
      edges.push_back({u, t.by_generator(u, k)});
  return Digraph::validate(t.order(), std::move(edges));
}

struct FactorizationGroupoid {
  PartialGroupoid groupoid;
  LabelingReport labeling;
  VertexMap vertex_of;  // element -> vertex of the host
};

/// Element ids are vertex ids, except that the root and vertex 0 trade
/// places so that the root becomes e. Factor k is generator k.
inline FactorizationGroupoid groupoid_from_factorization(const Factorization &f,
                                                         Vertex root = 0) {
  const std::size_t n = f.host().order();
  std::vector<Vertex> swap(n);
  std::iota(swap.begin(), swap.end(), Vertex{0});
  std::swap(swap[0], swap[root]);
  VertexMap vertex_of(swap);  // an involution, so it is its own inverse
  std::vector<std::vector<Vertex>> rows(n);
  for (Vertex u = 0; u < n; ++u)
    for (std::size_t k = 0; k < f.size(); ++k)
      rows[u].push_back(vertex_of(f.step(vertex_of(u), k)));
  std::vector<Vertex> gens = rows[0];
  PartialGroupoid pg(std::move(gens), std::move(rows));
  auto labeling = tree_like_labeling(pg);
  return {std::move(pg), std::move(labeling), std::move(vertex_of)};
}

struct GroupoidVerdict {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<FactorizationGroupoid> witness;  // its canonical extension cancels on the left
  std::vector<VertexMap> generators;             // certified, when Found
  SpanningSearchStats stats;

  // Orbits of the stabilizer of vertex 0 on its out-neighbours; empty when
  // the stabilizer search ran out of budget.
  std::vector<std::vector<Vertex>> neighbour_orbits;
  // Per orbit: the orbital subgraph's edges are preserved by every certified
  // generator (only computed when Found).
  std::vector<bool> orbit_subgraph_invariant;
};

struct GroupoidSearchOptions {
  std::size_t max_factorizations = 1'000'000;
  std::size_t node_budget = 100'000'000;
  std::size_t stabilizer_limit = 100'000;
  std::size_t tree_budget = 200'000;  // exhaustive labelling search per factorization; 0 = BFS only
};

/// Vertex transitivity through groupoids: for each 1-factorization, build
/// the groupoid rooted at vertex 0, label it, extend canonically and look
/// for left cancellation, then try the other tree-like labellings. A
/// labelling that cancels is certified through automorphisms before the
/// answer is Found; when the certificate fails the digraph is not vertex
/// transitive, whatever the labelling says.
inline GroupoidVerdict vt_check_via_groupoid(const Digraph &g,
                                             GroupoidSearchOptions options = {}) {
  GroupoidVerdict out;
  const std::size_t n = g.order();

  std::vector<VertexMap> stabilizer;
  try {
    auto stab = stabilizer_automorphisms(g, 0, options.stabilizer_limit, options.node_budget);
    if (!stab.truncated)
      stabilizer = std::move(stab.maps);
  } catch (const SearchBudgetExceeded &) {
  }
  std::vector<Vertex> neighbours;
  for (Vertex v : g.out_neighbors(0))
    if (neighbours.empty() || neighbours.back() != v)
      neighbours.push_back(v);
  if (!stabilizer.empty()) {
    for (const auto &orbit : orbits(n, stabilizer))
      if (std::ranges::binary_search(neighbours, orbit.front()))
        out.neighbour_orbits.push_back(orbit);
  }

  bool found = false;
  auto stats = for_each_one_factorization(
      g, {.max_factorizations = options.max_factorizations, .node_budget = options.node_budget},
      [&](Factorization f) {
        ++out.stats.factorizations;
        ++out.stats.wordsets;
        auto fg = groupoid_from_factorization(f, 0);
        found = has_left_cancellation(canonical_extension(fg.groupoid, fg.labeling.labels));
        if (!found && options.tree_budget == 0)
          ++out.stats.incomplete;
        if (!found && options.tree_budget > 0) {
          // Other tree-like labellings: a spanning word tree is one.
          auto t = detail::exact_spanning_tree(f, options.tree_budget);
          out.stats.tree_nodes += t.nodes;
          out.stats.incomplete += t.complete ? 0 : 1;
          if (t.hit) {
            std::vector<Word> labels(n);
            for (const Word &w : t.hit->words())
              labels[walk(f, 0, w)] = w;
            found = has_left_cancellation(canonical_extension(fg.groupoid, labels));
            if (found) {
              fg.labeling.levels.clear();
              for (Vertex u = 0; u < n; ++u) {
                if (fg.labeling.levels.size() <= labels[u].size())
                  fg.labeling.levels.resize(labels[u].size() + 1);
                fg.labeling.levels[labels[u].size()].push_back(u);
              }
              fg.labeling.labels = std::move(labels);
            }
          }
        }
        if (found)
          out.witness = std::move(fg);
        return !found;
      });
  out.stats.nodes = stats.nodes;
  out.stats.exhausted = stats.exhausted && !found;
  if (!found) {
    out.verdict = stats.exhausted && out.stats.incomplete == 0 ? Verdict::NotFound
                                                               : Verdict::Inconclusive;
    return out;
  }

  // Certify with automorphisms, as is_vertex_transitive does. The root is
  // vertex 0, so element ids are vertex ids.
  const auto &w = *out.witness;
  Factorization f = cayley_graph(w.groupoid).factorization;
  SpanningFactorization sf{f, WordSet(w.labeling.labels, false)};
  std::vector<VertexMap> maps = theta_maps(sf);
  bool ok = std::ranges::all_of(maps, [&](const VertexMap &m) {
    return check_map_is_automorphism(f.host(), m);
  }) && orbits(n, maps).size() == 1;
  if (!ok) {
    maps.clear();
    try {
      for (Vertex v = 1; v < n; ++v) {
        auto m = automorphism_mapping(g, 0, v, options.node_budget);
        if (!m) {
          out.verdict = Verdict::NotFound;
          return out;
        }
        maps.push_back(std::move(*m));
      }
    } catch (const SearchBudgetExceeded &) {
      out.verdict = Verdict::Inconclusive;
      return out;
    }
  }
  out.verdict = Verdict::Found;
  out.generators = maps;

  // Orbital subgraphs: edges (x, a_x(o)) for o in the orbit, where a_x is
  // any certified automorphism taking 0 to x.
  if (!out.neighbour_orbits.empty()) {
    std::vector<std::optional<VertexMap>> to(n);
    to[0] = VertexMap::identity(n);
    std::vector<Vertex> queue{0};
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (const auto &m : maps) {
        Vertex y = m(queue[i]);
        if (!to[y]) {
          to[y] = to[queue[i]]->then(m);
          queue.push_back(y);
        }
      }
    for (const auto &orbit : out.neighbour_orbits) {
      std::vector<Edge> edges;
      for (Vertex x = 0; x < n; ++x)
        for (Vertex o : orbit)
          edges.push_back({x, (*to[x])(o)});
      bool invariant = true;
      try {
        Digraph sub = Digraph::regular(n, edges);
        for (const auto &m : maps)
          invariant = invariant && check_map_is_automorphism(sub, m);
      } catch (const DigraphError &) {
        invariant = false;
      }
      out.orbit_subgraph_invariant.push_back(invariant);
    }
  }
  return out;
}

// Groupoid table CSV
// ------------------
//   *,<column labels>
//   <row label>,<entries as labels>
//   ...
// Rows list every element, e first. A table with fewer columns than rows is
// partial and its column labels are the generators; a full table names its
// generators on a line "# generators: <labels>".

inline void write_groupoid_csv(std::ostream &os, const GroupoidTable &t) {
  const std::size_t n = t.order();
  if (!t.partial) {
    os << "# generators:";
    for (Vertex g : t.gen_ids)
      os << ' ' << t.label(g);
    os << '\n';
  }
  os << '*';
  if (t.partial)
    for (Vertex g : t.gen_ids)
      os << ',' << t.label(g);
  else
    for (Vertex w = 0; w < n; ++w)
      os << ',' << t.label(w);
  os << '\n';
  for (Vertex u = 0; u < n; ++u) {
    os << t.label(u);
    for (Vertex x : t.rows[u])
      os << ',' << t.label(x);
    os << '\n';
  }
}

inline GroupoidTable read_groupoid_csv(std::istream &is) {
  struct Cell {
    std::string text;
    std::size_t column;
  };
  auto split = [](const std::string &line) {
    std::vector<Cell> cells;
    std::size_t start = 0;
    for (;;) {
      std::size_t comma = line.find(',', start);
      std::string raw = line.substr(start, comma == std::string::npos ? std::string::npos
                                                                      : comma - start);
      std::size_t lead = raw.find_first_not_of(" \t\r");
      std::size_t trail = raw.find_last_not_of(" \t\r");
      cells.push_back({lead == std::string::npos ? "" : raw.substr(lead, trail - lead + 1),
                       start + (lead == std::string::npos ? 0 : lead) + 1});
      if (comma == std::string::npos)
        break;
      start = comma + 1;
    }
    return cells;
  };

  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> generator_names;
  std::size_t generator_line = 0;
  std::vector<Cell> header;
  std::size_t header_line = 0;
  std::vector<std::pair<std::size_t, std::vector<Cell>>> body;
  while (std::getline(is, line)) {
    ++line_no;
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos)
      continue;
    if (line[pos] == '#') {
      const std::string key = "generators:";
      auto k = line.find(key, pos);
      if (k != std::string::npos) {
        std::istringstream names(line.substr(k + key.size()));
        for (std::string s; names >> s;)
          for (auto &c : split(s))
            if (!c.text.empty())
              generator_names.push_back(c.text);
        generator_line = line_no;
      }
      continue;
    }
    if (header.empty()) {
      header = split(line);
      header_line = line_no;
    } else {
      body.emplace_back(line_no, split(line));
    }
  }
  if (header.empty())
    throw ParseError(1, 1, "missing header row");

  GroupoidTable t;
  std::map<std::string, Vertex> id;
  for (auto &[ln, cells] : body) {
    if (id.contains(cells[0].text))
      throw ParseError(ln, cells[0].column, "duplicate row label '" + cells[0].text + "'");
    id.emplace(cells[0].text, static_cast<Vertex>(t.labels.size()));
    t.labels.push_back(cells[0].text);
  }
  const std::size_t n = t.labels.size(), cols = header.size() - 1;
  if (n == 0)
    throw ParseError(header_line, 1, "table has no rows");
  auto lookup = [&](const Cell &c, std::size_t ln) {
    auto it = id.find(c.text);
    if (it == id.end())
      throw ParseError(ln, c.column, "unknown element '" + c.text + "'");
    return it->second;
  };
  std::vector<Vertex> column_ids;
  for (std::size_t c = 1; c < header.size(); ++c)
    column_ids.push_back(lookup(header[c], header_line));
  t.partial = cols < n;
  if (t.partial) {
    t.gen_ids = column_ids;
  } else {
    if (cols != n)
      throw ParseError(header_line, 1, "more columns than rows");
    for (Vertex w = 0; w < n; ++w)
      if (column_ids[w] != w)
        throw ParseError(header_line, header[w + 1].column,
                         "full table columns must list the elements in row order");
    if (generator_names.empty())
      throw ParseError(header_line, 1, "full table needs a '# generators:' line");
    for (const auto &name : generator_names)
      t.gen_ids.push_back(lookup({name, 1}, generator_line));
  }
  for (auto &[ln, cells] : body) {
    if (cells.size() != header.size())
      throw ParseError(ln, 1, "row has " + std::to_string(cells.size() - 1) +
                                  " entries, header has " + std::to_string(cols));
    std::vector<Vertex> row;
    for (std::size_t c = 1; c < cells.size(); ++c)
      row.push_back(lookup(cells[c], ln));
    t.rows.push_back(std::move(row));
  }
  return t;
}

} // namespace dignet

#endif // DIGNET_GROUPOID_HPP
