#ifndef DIGNET_FACTORIZE_HPP
#define DIGNET_FACTORIZE_HPP

#include <algorithm>
#include <cstddef>
#include <deque>
#include <istream>
#include <ostream>
#include <span>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "dignet/digraph.hpp"

namespace dignet {

/// One edge out of and one edge into every vertex: a fixed-point-free
/// successor permutation whose pairs (u, succ[u]) are host edges.
struct OneFactor {
  std::vector<Vertex> succ;

  Vertex operator()(Vertex u) const { return succ[u]; }
  std::size_t size() const noexcept { return succ.size(); }

  friend bool operator==(const OneFactor &, const OneFactor &) = default;
  friend auto operator<=>(const OneFactor &, const OneFactor &) = default;
};

/// An ordered list of 1-factors of `host`. Construction does not check the
/// partition property; use verify_factorization.
class Factorization {
public:
  Factorization() = default;
  Factorization(Digraph host, std::vector<OneFactor> factors)
      : host_(std::move(host)), factors_(std::move(factors)) {}

  const Digraph &host() const noexcept { return host_; }
  const std::vector<OneFactor> &factors() const noexcept { return factors_; }
  std::size_t size() const noexcept { return factors_.size(); }
  const OneFactor &operator[](std::size_t k) const { return factors_[k]; }

  Vertex step(Vertex u, std::size_t factor) const { return factors_[factor].succ[u]; }

  friend bool operator==(const Factorization &a, const Factorization &b) {
    return a.host_ == b.host_ && a.factors_ == b.factors_;
  }

private:
  Digraph host_;
  std::vector<OneFactor> factors_;
};

struct FactorizationReport {
  bool ok = true;
  std::string violation;

  explicit operator bool() const noexcept { return ok; }
};

inline FactorizationReport verify_factorization(const Factorization &f) {
  const Digraph &g = f.host();
  const std::size_t n = g.order();
  auto fail = [](std::string why) { return FactorizationReport{false, std::move(why)}; };
  if (f.size() != g.degree())
    return fail("expected " + std::to_string(g.degree()) + " factors, got " +
                std::to_string(f.size()));
  std::vector<Edge> used;
  used.reserve(g.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    const auto &succ = f[k].succ;
    if (succ.size() != n)
      return fail("factor " + std::to_string(k) + " has length " +
                  std::to_string(succ.size()));
    std::vector<bool> hit(n, false);
    for (Vertex u = 0; u < n; ++u) {
      Vertex v = succ[u];
      if (v >= n)
        return fail("factor " + std::to_string(k) + ": image out of range at " +
                    std::to_string(u));
      if (v == u)
        return fail("factor " + std::to_string(k) + " fixes vertex " + std::to_string(u));
      if (hit[v])
        return fail("factor " + std::to_string(k) + " is not a permutation: " +
                    std::to_string(v) + " has two preimages");
      hit[v] = true;
      if (g.multiplicity(u, v) == 0)
        return fail("factor " + std::to_string(k) + " uses (" + std::to_string(u) +
                    "," + std::to_string(v) + "), not an edge of the host");
      used.push_back({u, v});
    }
  }
  std::ranges::sort(used);
  auto host = g.edges();
  for (std::size_t i = 0; i < used.size(); ++i)
    if (used[i] != host[i])
      return fail("factors do not partition the edge multiset: edge (" +
                  std::to_string(used[i].from) + "," + std::to_string(used[i].to) +
                  ") is used more often than it occurs");
  return {};
}

namespace detail {

// Perfect matchings in the bipartite double cover of a regular multigraph.
// Left vertex u' is joined to right vertex v'' once per occurrence of (u, v).
class DoubleCover {
public:
  explicit DoubleCover(const Digraph &g) : n_(g.order()) {
    adjacency_.resize(n_);
    for (const Edge &e : g.edges())
      adjacency_[e.from].push_back(e.to);
  }

  // Any regular bipartite multigraph, given as out-lists.
  DoubleCover(std::size_t n, std::vector<std::vector<Vertex>> adjacency)
      : n_(n), adjacency_(std::move(adjacency)) {}

  // Kuhn's augmenting paths, free left vertices scanned in index order.
  // Removes and returns the matching as a successor permutation.
  std::vector<Vertex> extract_perfect_matching() {
    std::vector<Vertex> match_right(n_, kFree);
    for (Vertex u = 0; u < n_; ++u) {
      std::vector<bool> visited(n_, false);
      if (!augment(u, visited, match_right))
        throw Error("invariant violated: regular double cover has no perfect matching");
    }
    std::vector<Vertex> succ(n_);
    for (Vertex v = 0; v < n_; ++v)
      succ[match_right[v]] = v;
    for (Vertex u = 0; u < n_; ++u) {
      auto &adj = adjacency_[u];
      adj.erase(std::ranges::find(adj, succ[u]));
    }
    return succ;
  }

private:
  static constexpr Vertex kFree = std::numeric_limits<Vertex>::max();

  bool augment(Vertex u, std::vector<bool> &visited, std::vector<Vertex> &match_right) {
    for (Vertex v : adjacency_[u]) {
      if (visited[v])
        continue;
      visited[v] = true;
      if (match_right[v] == kFree || augment(match_right[v], visited, match_right)) {
        match_right[v] = u;
        return true;
      }
    }
    return false;
  }

  std::size_t n_;
  std::vector<std::vector<Vertex>> adjacency_;
};

} // namespace detail

/// Splits a regular digraph into d edge-disjoint 1-factors by peeling
/// perfect matchings off the bipartite double cover. Deterministic.
inline Factorization one_factorization(const Digraph &g) {
  detail::DoubleCover cover(g);
  std::vector<OneFactor> factors;
  factors.reserve(g.degree());
  for (std::size_t k = 0; k < g.degree(); ++k)
    factors.push_back({cover.extract_perfect_matching()});
  Factorization f(g, std::move(factors));
  if (auto report = verify_factorization(f); !report)
    throw Error("invariant violated in one_factorization: " + report.violation);
  return f;
}

/// Factor order used for deduplication: lexicographic on the successor
/// vectors, hence primarily by the image of vertex 0.
inline Factorization normalized(const Factorization &f) {
  auto factors = f.factors();
  std::ranges::sort(factors);
  return Factorization(f.host(), std::move(factors));
}

struct EnumerationLimits {
  std::size_t max_factorizations = std::numeric_limits<std::size_t>::max();
  std::size_t node_budget = 100'000'000;
};

struct EnumerationStats {
  std::size_t produced = 0;
  std::size_t nodes = 0;
  bool exhausted = false;  // the whole search tree was explored
};

namespace detail {

// Proper d-edge-colouring of the double cover, edge occurrences processed in
// an order where each edge touches an earlier one whenever possible. Vertex
// 0's out-edges get colours 0..d-1 in head order; parallel occurrences get
// increasing colours; ties left at vertex 0 are resolved by a canonical-order
// test at the leaves. Each unordered factorization is produced exactly once.
class FactorizationEnumerator {
public:
  FactorizationEnumerator(const Digraph &g, EnumerationLimits limits)
      : g_(g), limits_(limits), n_(g.order()), d_(g.degree()) {
    order_edges();
    color_.assign(edges_.size(), kNone);
    out_used_.assign(n_ * d_, false);
    in_used_.assign(n_ * d_, false);
  }

  template <class Visitor> EnumerationStats run(Visitor &&visit) {
    EnumerationStats stats;
    // Vertex 0's edges are the first d in the order and get fixed colours.
    for (std::size_t k = 0; k < d_; ++k)
      if (!assign(k, k)) {
        stats.exhausted = true;
        return stats;
      }
    stopped_ = false;
    recurse(d_, stats, visit);
    stats.exhausted = !stopped_;
    return stats;
  }

private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  struct Occurrence {
    Edge edge;
    std::size_t twin_before = kNone;  // previous parallel occurrence, if any
  };

  void order_edges() {
    std::vector<std::vector<std::size_t>> out_ids(n_), in_ids(n_);
    std::vector<Occurrence> all;
    auto edges = g_.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      Occurrence occ{edges[i]};
      if (i > 0 && edges[i - 1] == edges[i])
        occ.twin_before = i - 1;
      all.push_back(occ);
      out_ids[edges[i].from].push_back(i);
      in_ids[edges[i].to].push_back(i);
    }
    std::vector<std::size_t> position(all.size(), kNone);
    std::vector<bool> seen(n_, false);
    std::deque<Vertex> queue{0};
    seen[0] = true;
    auto take = [&](std::size_t id) {
      if (position[id] != kNone)
        return;
      position[id] = order_.size();
      order_.push_back(id);
      for (Vertex w : {all[id].edge.from, all[id].edge.to})
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
    };
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (std::size_t id : out_ids[u])
        take(id);
      for (std::size_t id : in_ids[u])
        take(id);
      if (queue.empty())
        for (Vertex v = 0; v < n_; ++v)
          if (!seen[v]) {
            seen[v] = true;
            queue.push_back(v);
            break;
          }
    }
    for (std::size_t id : order_) {
      Occurrence occ = all[id];
      if (occ.twin_before != kNone)
        occ.twin_before = position[occ.twin_before];
      edges_.push_back(occ);
    }
  }

  bool assign(std::size_t slot, std::size_t c) {
    const Edge &e = edges_[slot].edge;
    if (out_used_[e.from * d_ + c] || in_used_[e.to * d_ + c])
      return false;
    if (edges_[slot].twin_before != kNone) {
      std::size_t twin = color_[edges_[slot].twin_before];
      if (twin != kNone && twin >= c)
        return false;
    }
    color_[slot] = c;
    out_used_[e.from * d_ + c] = true;
    in_used_[e.to * d_ + c] = true;
    return true;
  }

  void unassign(std::size_t slot) {
    const Edge &e = edges_[slot].edge;
    std::size_t c = color_[slot];
    out_used_[e.from * d_ + c] = false;
    in_used_[e.to * d_ + c] = false;
    color_[slot] = kNone;
  }

  template <class Visitor> void recurse(std::size_t slot, EnumerationStats &stats, Visitor &visit) {
    if (stopped_)
      return;
    if (++stats.nodes > limits_.node_budget) {
      stopped_ = true;
      return;
    }
    if (slot == edges_.size()) {
      emit(stats, visit);
      return;
    }
    for (std::size_t c = 0; c < d_ && !stopped_; ++c) {
      if (!assign(slot, c))
        continue;
      recurse(slot + 1, stats, visit);
      unassign(slot);
    }
  }

  template <class Visitor> void emit(EnumerationStats &stats, Visitor &visit) {
    std::vector<OneFactor> factors(d_, OneFactor{std::vector<Vertex>(n_)});
    for (std::size_t slot = 0; slot < edges_.size(); ++slot)
      factors[color_[slot]].succ[edges_[slot].edge.from] = edges_[slot].edge.to;
    if (!std::ranges::is_sorted(factors))
      return;
    if (stats.produced >= limits_.max_factorizations) {
      stopped_ = true;
      return;
    }
    ++stats.produced;
    if (!visit(Factorization(g_, std::move(factors))))
      stopped_ = true;
  }

  const Digraph &g_;
  EnumerationLimits limits_;
  std::size_t n_, d_;
  std::vector<Occurrence> edges_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> color_;
  std::vector<bool> out_used_, in_used_;
  bool stopped_ = false;
};

} // namespace detail

/// Streams every distinct 1-factorization (factors in normalized order) to
/// `visit`, which returns false to stop early.
template <class Visitor>
EnumerationStats for_each_one_factorization(const Digraph &g, EnumerationLimits limits,
                                            Visitor &&visit) {
  return detail::FactorizationEnumerator(g, limits).run(visit);
}

struct FactorizationEnumeration {
  std::vector<Factorization> factorizations;
  bool exhausted = false;
  std::size_t nodes = 0;
};

inline FactorizationEnumeration enumerate_one_factorizations(const Digraph &g,
                                                             std::size_t budget) {
  FactorizationEnumeration out;
  auto stats = for_each_one_factorization(
      g, {.max_factorizations = budget}, [&](Factorization f) {
        out.factorizations.push_back(std::move(f));
        return true;
      });
  out.exhausted = stats.exhausted;
  out.nodes = stats.nodes;
  return out;
}

// Factorization text format: d lines, line k holding factor k's n successor
// images separated by spaces.

inline void write_factorization(std::ostream &os, const Factorization &f) {
  for (const OneFactor &factor : f.factors()) {
    for (std::size_t u = 0; u < factor.size(); ++u)
      os << (u ? " " : "") << factor.succ[u];
    os << '\n';
  }
}

inline Factorization read_factorization(std::istream &is, const Digraph &host) {
  detail::LineReader reader{is};
  std::vector<OneFactor> factors;
  while (reader.next()) {
    auto fields = reader.integers();
    if (fields.size() != host.order())
      throw ParseError(reader.line_no, 1,
                       "factor line must hold " + std::to_string(host.order()) +
                           " images, found " + std::to_string(fields.size()));
    OneFactor factor;
    for (auto [value, col] : fields) {
      if (value >= host.order())
        throw ParseError(reader.line_no, col, "vertex out of range");
      factor.succ.push_back(static_cast<Vertex>(value));
    }
    factors.push_back(std::move(factor));
  }
  Factorization f(host, std::move(factors));
  if (auto report = verify_factorization(f); !report)
    throw ParseError(reader.line_no, 1, "not a 1-factorization: " + report.violation);
  return f;
}

inline void write_dot(std::ostream &os, const Factorization &f,
                      std::span<const std::string> palette = {}) {
  static const std::vector<std::string> kDefault = {
      "black", "red", "blue", "darkgreen", "orange", "purple", "brown", "cyan"};
  auto colors = palette.empty() ? std::span<const std::string>(kDefault) : palette;
  os << "digraph G {\n";
  for (Vertex v = 0; v < f.host().order(); ++v)
    os << "  " << v << ";\n";
  for (std::size_t k = 0; k < f.size(); ++k)
    for (Vertex u = 0; u < f.host().order(); ++u)
      os << "  " << u << " -> " << f[k].succ[u] << " [color=\""
         << colors[k % colors.size()] << "\", label=\"" << k << "\"];\n";
  os << "}\n";
}

} // namespace dignet

#endif // DIGNET_FACTORIZE_HPP
