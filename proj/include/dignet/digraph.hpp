#ifndef DIGNET_DIGRAPH_HPP
#define DIGNET_DIGRAPH_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <istream>
#include <limits>
#include <memory>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dignet {

using Vertex = std::uint32_t;

inline constexpr std::size_t unreachable = std::numeric_limits<std::size_t>::max();

struct Edge {
  Vertex from = 0;
  Vertex to = 0;

  friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DigraphError : public Error {
public:
  enum class Kind { InvalidInput, LoopEdge, DegreeMismatch, NotStronglyConnected };

  DigraphError(Kind kind, std::string what, Vertex vertex = 0,
               std::size_t in_degree = 0, std::size_t out_degree = 0,
               Vertex witness = 0)
      : Error(std::move(what)), kind_(kind), vertex_(vertex),
        in_degree_(in_degree), out_degree_(out_degree), witness_(witness) {}

  Kind kind() const noexcept { return kind_; }
  Vertex vertex() const noexcept { return vertex_; }
  std::size_t in_degree() const noexcept { return in_degree_; }
  std::size_t out_degree() const noexcept { return out_degree_; }
  // For NotStronglyConnected: no directed path vertex() -> witness().
  Vertex witness() const noexcept { return witness_; }

private:
  Kind kind_;
  Vertex vertex_;
  std::size_t in_degree_;
  std::size_t out_degree_;
  Vertex witness_;
};

class SearchBudgetExceeded : public Error {
public:
  SearchBudgetExceeded(std::string what, std::size_t nodes)
      : Error(std::move(what)), nodes_(nodes) {}
  std::size_t nodes() const noexcept { return nodes_; }

private:
  std::size_t nodes_;
};

class ParseError : public Error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string &message)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line), column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// A permutation of 0..n-1, used for automorphisms and isomorphisms.
class VertexMap {
public:
  VertexMap() = default;

  explicit VertexMap(std::vector<Vertex> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Vertex v : images_) {
      if (v >= images_.size() || seen[v])
        throw Error("VertexMap: images are not a permutation");
      seen[v] = true;
    }
  }

  static VertexMap identity(std::size_t n) {
    std::vector<Vertex> images(n);
    std::iota(images.begin(), images.end(), Vertex{0});
    return VertexMap(std::move(images));
  }

  std::size_t size() const noexcept { return images_.size(); }
  Vertex operator()(Vertex v) const { return images_[v]; }
  const std::vector<Vertex> &images() const noexcept { return images_; }

  /// Apply *this first, then `next`.
  VertexMap then(const VertexMap &next) const {
    std::vector<Vertex> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      out[i] = next(images_[i]);
    return VertexMap(std::move(out));
  }

  VertexMap inverse() const {
    std::vector<Vertex> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      out[images_[i]] = static_cast<Vertex>(i);
    return VertexMap(std::move(out));
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i)
        return false;
    return true;
  }

  friend bool operator==(const VertexMap &, const VertexMap &) = default;
  friend auto operator<=>(const VertexMap &a, const VertexMap &b) {
    return a.images_ <=> b.images_;
  }

private:
  std::vector<Vertex> images_;
};

/// Loop-free directed multigraph in which every vertex has in- and
/// out-degree d. Immutable; copies share storage.
///
/// `validate` additionally demands strong connectivity (a "regular digraph").
/// `regular` drops that requirement; it is used for the pieces produced by
/// splitting a connection set, which need not be connected.
class Digraph {
public:
  Digraph() = default;

  static Digraph validate(std::size_t n, std::vector<Edge> edges) {
    Digraph g = build(n, std::move(edges));
    if (!g.strongly_connected()) {
      auto [from, to] = g.disconnection_witness();
      throw DigraphError(DigraphError::Kind::NotStronglyConnected,
                         "digraph is not strongly connected: no path " +
                             std::to_string(from) + " -> " + std::to_string(to),
                         from, 0, 0, to);
    }
    return g;
  }

  static Digraph regular(std::size_t n, std::vector<Edge> edges) {
    return build(n, std::move(edges));
  }

  std::size_t order() const noexcept { return data_ ? data_->n : 0; }
  std::size_t degree() const noexcept { return data_ ? data_->d : 0; }
  std::size_t size() const noexcept { return data_ ? data_->edges.size() : 0; }

  /// Sorted edge list; parallel edges appear once per occurrence.
  std::span<const Edge> edges() const { return data_->edges; }

  /// Heads of u's out-edges, ascending, with repetition.
  std::span<const Vertex> out_neighbors(Vertex u) const {
    return {data_->out.data() + u * data_->d, data_->d};
  }
  std::span<const Vertex> in_neighbors(Vertex v) const {
    return {data_->in.data() + v * data_->d, data_->d};
  }

  std::size_t multiplicity(Vertex u, Vertex v) const {
    auto heads = out_neighbors(u);
    auto [lo, hi] = std::equal_range(heads.begin(), heads.end(), v);
    return static_cast<std::size_t>(hi - lo);
  }

  bool strongly_connected() const noexcept { return data_ && data_->connected; }

  friend bool operator==(const Digraph &a, const Digraph &b) {
    if (a.order() != b.order())
      return false;
    if (!a.data_ || !b.data_)
      return a.data_ == b.data_;
    return a.data_->edges == b.data_->edges;
  }

private:
  struct Data {
    std::size_t n = 0;
    std::size_t d = 0;
    std::vector<Edge> edges;
    std::vector<Vertex> out;
    std::vector<Vertex> in;
    bool connected = false;
  };

  static Digraph build(std::size_t n, std::vector<Edge> edges) {
    if (n < 2)
      throw DigraphError(DigraphError::Kind::InvalidInput,
                         "digraph needs at least 2 vertices");
    if (edges.empty())
      throw DigraphError(DigraphError::Kind::InvalidInput, "edge list is empty");
    std::vector<std::size_t> outdeg(n, 0), indeg(n, 0);
    for (const Edge &e : edges) {
      if (e.from >= n || e.to >= n)
        throw DigraphError(DigraphError::Kind::InvalidInput,
                           "edge (" + std::to_string(e.from) + "," +
                               std::to_string(e.to) + ") out of range");
      if (e.from == e.to)
        throw DigraphError(DigraphError::Kind::LoopEdge,
                           "loop at vertex " + std::to_string(e.from), e.from);
      ++outdeg[e.from];
      ++indeg[e.to];
    }
    const std::size_t d = outdeg[0];
    for (Vertex v = 0; v < n; ++v) {
      if (outdeg[v] != d || indeg[v] != d)
        throw DigraphError(DigraphError::Kind::DegreeMismatch,
                           "vertex " + std::to_string(v) + " has in-degree " +
                               std::to_string(indeg[v]) + " and out-degree " +
                               std::to_string(outdeg[v]) + ", expected " +
                               std::to_string(d),
                           v, indeg[v], outdeg[v]);
    }
    std::sort(edges.begin(), edges.end());

    auto data = std::make_shared<Data>();
    data->n = n;
    data->d = d;
    data->out.reserve(edges.size());
    for (const Edge &e : edges)
      data->out.push_back(e.to);
    std::vector<Edge> reversed;
    reversed.reserve(edges.size());
    for (const Edge &e : edges)
      reversed.push_back({e.to, e.from});
    std::sort(reversed.begin(), reversed.end());
    data->in.reserve(edges.size());
    for (const Edge &e : reversed)
      data->in.push_back(e.to);
    data->edges = std::move(edges);

    Digraph g;
    g.data_ = data;
    data->connected = g.reaches_all(true) && g.reaches_all(false);
    return g;
  }

  bool reaches_all(bool forward) const {
    return std::ranges::all_of(reach_from_zero(forward), [](bool b) { return b; });
  }

  std::vector<bool> reach_from_zero(bool forward) const {
    std::vector<bool> seen(order(), false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex v : forward ? out_neighbors(u) : in_neighbors(u))
        if (!seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
    }
    return seen;
  }

  std::pair<Vertex, Vertex> disconnection_witness() const {
    auto fwd = reach_from_zero(true);
    for (Vertex v = 0; v < order(); ++v)
      if (!fwd[v])
        return {0, v};
    auto back = reach_from_zero(false);
    for (Vertex v = 0; v < order(); ++v)
      if (!back[v])
        return {v, 0};
    return {0, 0};
  }

  std::shared_ptr<const Data> data_;
};

/// Breadth-first hop counts from `source`; `unreachable` where no path exists.
inline std::vector<std::size_t> distances_from(const Digraph &g, Vertex source) {
  std::vector<std::size_t> dist(g.order(), unreachable);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex v : g.out_neighbors(u))
      if (dist[v] == unreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

inline std::size_t eccentricity(const Digraph &g, Vertex source) {
  auto dist = distances_from(g, source);
  return *std::ranges::max_element(dist);
}

inline std::size_t diameter(const Digraph &g) {
  std::size_t best = 0;
  for (Vertex s = 0; s < g.order(); ++s)
    best = std::max(best, eccentricity(g, s));
  return best;
}

/// Girth of the underlying simple graph, intended for symmetric digraphs
/// (undirected graphs). Returns `unreachable` for a forest.
inline std::size_t undirected_girth(const Digraph &g) {
  // BFS from every vertex over the underlying simple graph.
  std::size_t best = unreachable;
  const std::size_t n = g.order();
  for (Vertex s = 0; s < n; ++s) {
    std::vector<std::size_t> dist(n, unreachable);
    std::vector<Vertex> parent(n, s);
    std::deque<Vertex> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      Vertex last = static_cast<Vertex>(n);
      for (Vertex v : g.out_neighbors(u)) {
        if (v == last)
          continue;
        last = v;
        if (dist[v] == unreachable) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else if (parent[u] != v) {
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      }
    }
  }
  return best;
}

/// True iff the edge multiset is closed under reversal.
inline bool is_symmetric(const Digraph &g) {
  for (const Edge &e : g.edges())
    if (g.multiplicity(e.from, e.to) != g.multiplicity(e.to, e.from))
      return false;
  return true;
}

inline bool check_map_is_automorphism(const Digraph &g, const VertexMap &m) {
  if (m.size() != g.order())
    return false;
  auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size();) {
    std::size_t j = i;
    while (j < edges.size() && edges[j] == edges[i])
      ++j;
    if (g.multiplicity(m(edges[i].from), m(edges[i].to)) != j - i)
      return false;
    i = j;
  }
  return true;
}

/// Orbits of the group generated by `maps` acting on 0..n-1; each orbit is
/// sorted and orbits are ordered by their smallest member.
inline std::vector<std::vector<Vertex>> orbits(std::size_t n,
                                               std::span<const VertexMap> maps) {
  std::vector<std::size_t> label(n, unreachable);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] != unreachable)
      continue;
    std::vector<Vertex> orbit{s};
    label[s] = out.size();
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (const VertexMap &m : maps) {
        Vertex t = m(orbit[k]);
        if (label[t] == unreachable) {
          label[t] = out.size();
          orbit.push_back(t);
        }
      }
    std::ranges::sort(orbit);
    out.push_back(std::move(orbit));
  }
  return out;
}

struct IsomorphismSearchOptions {
  std::size_t limit = std::numeric_limits<std::size_t>::max();
  std::size_t node_budget = 50'000'000;
};

struct IsomorphismSearchResult {
  std::vector<VertexMap> maps;
  bool truncated = false;
  std::size_t nodes = 0;
};

namespace detail {

// Backtracking over vertices of `g` in BFS order of the underlying graph,
// seeded by the pinned vertices. Candidates for a vertex are the unused
// neighbours (in the matching direction) of its parent's image, filtered by
// cheap vertex invariants, in increasing index order.
class IsomorphismSearch {
public:
  IsomorphismSearch(const Digraph &g, const Digraph &h,
                    std::span<const std::pair<Vertex, Vertex>> pinned,
                    IsomorphismSearchOptions options)
      : g_(g), h_(h), options_(options), n_(g.order()) {
    if (g.order() != h.order() || g.degree() != h.degree() || g.size() != h.size()) {
      compatible_ = false;
      return;
    }
    mult_g_ = matrix(g);
    mult_h_ = matrix(h);
    inv_g_ = invariants(g, mult_g_, pinned, true);
    inv_h_ = invariants(h, mult_h_, pinned, false);
    order_vertices(pinned);
  }

  IsomorphismSearchResult run() {
    IsomorphismSearchResult result;
    if (!compatible_)
      return result;
    image_.assign(n_, kUnset);
    used_.assign(n_, false);
    for (auto [a, b] : pins_) {
      if (image_[a] != kUnset || used_[b] || inv_g_[a] != inv_h_[b])
        return result;
      image_[a] = b;
      used_[b] = true;
    }
    for (auto [a, b] : pins_)
      if (!consistent(a, b))
        return result;
    extend(pins_.size(), result);
    return result;
  }

private:
  static constexpr Vertex kUnset = std::numeric_limits<Vertex>::max();

  std::vector<std::uint16_t> matrix(const Digraph &g) const {
    std::vector<std::uint16_t> m(n_ * n_, 0);
    for (const Edge &e : g.edges())
      ++m[e.from * n_ + e.to];
    return m;
  }

  std::vector<std::vector<std::size_t>>
  invariants(const Digraph &g, const std::vector<std::uint16_t> &mult,
             std::span<const std::pair<Vertex, Vertex>> pinned, bool left) const {
    std::vector<std::vector<std::size_t>> inv(n_);
    for (Vertex u = 0; u < n_; ++u) {
      std::size_t distinct = 0, digons = 0;
      for (Vertex v = 0; v < n_; ++v)
        if (mult[u * n_ + v] > 0) {
          ++distinct;
          if (mult[v * n_ + u] > 0)
            ++digons;
        }
      inv[u] = {distinct, digons};
    }
    for (auto [a, b] : pinned) {
      auto dist = distances_from(g, left ? a : b);
      for (Vertex u = 0; u < n_; ++u)
        inv[u].push_back(dist[u]);
    }
    return inv;
  }

  void order_vertices(std::span<const std::pair<Vertex, Vertex>> pinned) {
    pins_.assign(pinned.begin(), pinned.end());
    std::vector<bool> placed(n_, false);
    parent_.assign(n_, kUnset);
    forward_.assign(n_, true);
    std::deque<Vertex> queue;
    for (auto [a, b] : pins_)
      if (!placed[a]) {
        placed[a] = true;
        order_.push_back(a);
        queue.push_back(a);
      }
    auto drain = [&] {
      while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (int pass = 0; pass < 2; ++pass)
          for (Vertex v : pass == 0 ? g_.out_neighbors(u) : g_.in_neighbors(u))
            if (!placed[v]) {
              placed[v] = true;
              parent_[v] = u;
              forward_[v] = pass == 0;
              order_.push_back(v);
              queue.push_back(v);
            }
      }
    };
    drain();
    for (Vertex s = 0; s < n_; ++s)
      if (!placed[s]) {
        placed[s] = true;
        order_.push_back(s);
        queue.push_back(s);
        drain();
      }
  }

  bool consistent(Vertex x, Vertex fx) const {
    for (Vertex y = 0; y < n_; ++y) {
      Vertex fy = image_[y];
      if (fy == kUnset)
        continue;
      if (mult_g_[x * n_ + y] != mult_h_[fx * n_ + fy] ||
          mult_g_[y * n_ + x] != mult_h_[fy * n_ + fx])
        return false;
    }
    return true;
  }

  // Returns false once the caller should stop.
  bool extend(std::size_t depth, IsomorphismSearchResult &result) {
    if (++result.nodes > options_.node_budget)
      throw SearchBudgetExceeded("isomorphism search exhausted its node budget",
                                 result.nodes);
    if (depth == order_.size()) {
      if (result.maps.size() >= options_.limit) {
        result.truncated = true;
        return false;
      }
      result.maps.emplace_back(image_);
      return true;
    }
    Vertex x = order_[depth];
    auto try_candidate = [&](Vertex c) {
      if (used_[c] || inv_g_[x] != inv_h_[c] || !consistent(x, c))
        return true;
      image_[x] = c;
      used_[c] = true;
      bool go_on = extend(depth + 1, result);
      image_[x] = kUnset;
      used_[c] = false;
      return go_on;
    };
    if (parent_[x] != kUnset) {
      Vertex fp = image_[parent_[x]];
      auto cands = forward_[x] ? h_.out_neighbors(fp) : h_.in_neighbors(fp);
      Vertex last = kUnset;
      for (Vertex c : cands) {
        if (c == last)
          continue;
        last = c;
        if (!try_candidate(c))
          return false;
      }
    } else {
      for (Vertex c = 0; c < n_; ++c)
        if (!try_candidate(c))
          return false;
    }
    return true;
  }

  const Digraph &g_;
  const Digraph &h_;
  IsomorphismSearchOptions options_;
  std::size_t n_;
  bool compatible_ = true;
  std::vector<std::uint16_t> mult_g_, mult_h_;
  std::vector<std::vector<std::size_t>> inv_g_, inv_h_;
  std::vector<std::pair<Vertex, Vertex>> pins_;
  std::vector<Vertex> order_;
  std::vector<Vertex> parent_;
  std::vector<bool> forward_;
  std::vector<Vertex> image_;
  std::vector<bool> used_;
};

} // namespace detail

/// All isomorphisms g -> h that send each pinned pair's first vertex to its
/// second, in deterministic order. Throws SearchBudgetExceeded when the node
/// budget runs out.
inline IsomorphismSearchResult
isomorphisms(const Digraph &g, const Digraph &h,
             std::span<const std::pair<Vertex, Vertex>> pinned = {},
             IsomorphismSearchOptions options = {}) {
  return detail::IsomorphismSearch(g, h, pinned, options).run();
}

inline std::optional<VertexMap> find_isomorphism(const Digraph &g, const Digraph &h) {
  auto result = isomorphisms(g, h, {}, {.limit = 1});
  if (result.maps.empty())
    return std::nullopt;
  return result.maps.front();
}

/// Automorphisms fixing `fixed`, at most `limit` of them.
inline IsomorphismSearchResult
stabilizer_automorphisms(const Digraph &g, Vertex fixed,
                         std::size_t limit = std::numeric_limits<std::size_t>::max(),
                         std::size_t node_budget = 50'000'000) {
  std::pair<Vertex, Vertex> pin{fixed, fixed};
  return isomorphisms(g, g, std::span(&pin, 1),
                      {.limit = limit, .node_budget = node_budget});
}

/// One automorphism sending `from` to `to`, if any exists.
inline std::optional<VertexMap> automorphism_mapping(const Digraph &g, Vertex from,
                                                     Vertex to,
                                                     std::size_t node_budget = 50'000'000) {
  std::pair<Vertex, Vertex> pin{from, to};
  auto result = isomorphisms(g, g, std::span(&pin, 1),
                             {.limit = 1, .node_budget = node_budget});
  if (result.maps.empty())
    return std::nullopt;
  return result.maps.front();
}

// Edge-list text format
// ---------------------
//   n d
//   u v        (one line per edge occurrence)
// Lines starting with '#' and blank lines are ignored.

inline void write_edge_list(std::ostream &os, const Digraph &g) {
  os << g.order() << ' ' << g.degree() << '\n';
  for (const Edge &e : g.edges())
    os << e.from << ' ' << e.to << '\n';
}

namespace detail {

struct LineReader {
  explicit LineReader(std::istream &in) : is(in) {}

  std::istream &is;
  std::size_t line_no = 0;
  std::string line;

  // Next non-blank, non-comment line.
  bool next() {
    while (std::getline(is, line)) {
      ++line_no;
      auto pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos || line[pos] == '#')
        continue;
      return true;
    }
    return false;
  }

  std::vector<std::pair<std::uint64_t, std::size_t>> integers() const {
    std::vector<std::pair<std::uint64_t, std::size_t>> out;
    std::size_t i = 0;
    while (i < line.size()) {
      char c = line[i];
      if (c == ' ' || c == '\t' || c == '\r' || c == ',') {
        ++i;
        continue;
      }
      if (c < '0' || c > '9')
        throw ParseError(line_no, i + 1, std::string("unexpected character '") + c + "'");
      std::size_t start = i;
      std::uint64_t value = 0;
      while (i < line.size() && line[i] >= '0' && line[i] <= '9') {
        value = value * 10 + static_cast<std::uint64_t>(line[i] - '0');
        if (value > std::numeric_limits<Vertex>::max())
          throw ParseError(line_no, start + 1, "integer too large");
        ++i;
      }
      out.emplace_back(value, start + 1);
    }
    return out;
  }
};

} // namespace detail

inline Digraph read_edge_list(std::istream &is) {
  detail::LineReader reader{is};
  if (!reader.next())
    throw ParseError(1, 1, "missing \"n d\" header");
  auto header = reader.integers();
  if (header.size() != 2)
    throw ParseError(reader.line_no, 1, "header must be \"n d\"");
  const std::size_t n = header[0].first, d = header[1].first;
  const std::size_t header_line = reader.line_no;
  std::vector<Edge> edges;
  while (reader.next()) {
    auto fields = reader.integers();
    if (fields.size() != 2)
      throw ParseError(reader.line_no, 1, "edge line must be \"u v\"");
    for (auto [value, col] : fields)
      if (value >= n)
        throw ParseError(reader.line_no, col, "vertex " + std::to_string(value) +
                                                  " out of range");
    edges.push_back({static_cast<Vertex>(fields[0].first),
                     static_cast<Vertex>(fields[1].first)});
  }
  if (edges.size() != n * d)
    throw ParseError(header_line, 1,
                     "header promises " + std::to_string(n * d) + " edges, found " +
                         std::to_string(edges.size()));
  return Digraph::validate(n, std::move(edges));
}

/// Edge attribute hook for DOT output: receives the edge and the index of the
/// occurrence among its parallel copies; returns an attribute list body such
/// as `color="red"`, or an empty string.
using DotEdgeAttributes = std::function<std::string(const Edge &, std::size_t)>;

inline void write_dot(std::ostream &os, const Digraph &g,
                      const DotEdgeAttributes &attributes = {},
                      const std::string &name = "G") {
  os << "digraph " << name << " {\n";
  for (Vertex v = 0; v < g.order(); ++v)
    os << "  " << v << ";\n";
  auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::size_t occurrence = 0;
    while (occurrence < i && edges[i - occurrence - 1] == edges[i])
      ++occurrence;
    os << "  " << edges[i].from << " -> " << edges[i].to;
    if (attributes) {
      std::string attr = attributes(edges[i], occurrence);
      if (!attr.empty())
        os << " [" << attr << "]";
    }
    os << ";\n";
  }
  os << "}\n";
}

} // namespace dignet

#endif // DIGNET_DIGRAPH_HPP
