#ifndef DIGNET_COSET_HPP
#define DIGNET_COSET_HPP

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dignet/digraph.hpp"
#include "dignet/factorize.hpp"
#include "dignet/spanfact.hpp"

namespace dignet {

using Permutation = std::vector<Vertex>;

class CosetError : public Error {
public:
  enum class Kind { ClosureBudgetExceeded, NotSubgroup, ConditionViolated, NotIrreducible, Defect };

  CosetError(Kind kind, std::string msg, int condition = 0)
      : Error(std::move(msg)), kind_(kind), condition_(condition) {}

  Kind kind() const noexcept { return kind_; }
  /// 1, 2 or 3 for ConditionViolated.
  int condition() const noexcept { return condition_; }

private:
  Kind kind_;
  int condition_;
};

/// g then h: (g*h)[x] = h[g[x]].
inline Permutation compose(const Permutation &g, const Permutation &h) {
  Permutation out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x)
    out[x] = h[g[x]];
  return out;
}

/// The closure of a set of permutations. Element 0 is the identity; the
/// others follow in breadth-first order, generators scanned by index.
class PermGroup {
public:
  PermGroup() = default;

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation> &generators() const noexcept { return generators_; }
  const Permutation &element(std::size_t i) const { return elements_[i]; }

  std::optional<std::size_t> index_of(const Permutation &p) const {
    auto it = index_.find(p);
    if (it == index_.end())
      return std::nullopt;
    return it->second;
  }

  std::size_t multiply(std::size_t g, std::size_t h) const {
    return index_.at(compose(elements_[g], elements_[h]));
  }

  std::size_t inverse(std::size_t g) const {
    Permutation inv(degree_);
    for (Vertex x = 0; x < degree_; ++x)
      inv[elements_[g][x]] = x;
    return index_.at(inv);
  }

  /// Product of generators, left to right.
  std::size_t evaluate(const std::vector<std::size_t> &word) const {
    std::size_t g = 0;
    for (std::size_t k : word)
      g = multiply(g, gen_index_.at(k));
    return g;
  }

  /// A shortest word for element i, in generator names.
  std::string word(std::size_t i) const {
    std::vector<std::string> letters;
    for (; i != 0; i = parent_[i].first)
      letters.push_back(names_[parent_[i].second]);
    if (letters.empty())
      return "e";
    std::string out;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
      out += (out.empty() ? "" : " ") + *it;
    return out;
  }

  void set_names(std::vector<std::string> names) {
    if (names.size() == generators_.size())
      names_ = std::move(names);
  }

  friend PermGroup closure(std::vector<Permutation> generators, std::size_t degree,
                           std::size_t limit);

private:
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<std::size_t> gen_index_;
  std::vector<std::string> names_;
  std::vector<Permutation> elements_;
  std::vector<std::pair<std::size_t, std::size_t>> parent_;  // (element, generator)
  std::map<Permutation, std::size_t> index_;
};

inline PermGroup closure(std::vector<Permutation> generators, std::size_t degree,
                         std::size_t limit = 100'000) {
  for (const auto &g : generators) {
    std::vector<bool> hit(degree, false);
    bool ok = g.size() == degree;
    for (Vertex x : g) {
      ok = ok && x < degree && !hit[x];
      if (ok)
        hit[x] = true;
    }
    if (!ok)
      throw Error("generator is not a permutation of 0.." + std::to_string(degree - 1));
  }
  PermGroup G;
  G.degree_ = degree;
  G.generators_ = std::move(generators);
  for (std::size_t k = 0; k < G.generators_.size(); ++k)
    G.names_.push_back("g" + std::to_string(k));
  Permutation id(degree);
  std::iota(id.begin(), id.end(), Vertex{0});
  G.elements_.push_back(id);
  G.parent_.push_back({0, 0});
  G.index_[id] = 0;
  for (std::size_t i = 0; i < G.elements_.size(); ++i)
    for (std::size_t k = 0; k < G.generators_.size(); ++k) {
      Permutation p = compose(G.elements_[i], G.generators_[k]);
      if (G.index_.count(p))
        continue;
      if (G.elements_.size() >= limit)
        throw CosetError(CosetError::Kind::ClosureBudgetExceeded,
                         "group closure exceeds " + std::to_string(limit) + " elements");
      G.index_[p] = G.elements_.size();
      G.elements_.push_back(std::move(p));
      G.parent_.push_back({i, k});
    }
  for (const auto &g : G.generators_)
    G.gen_index_.push_back(G.index_.at(g));
  return G;
}

/// Left cosets gH, numbered by their least element index (H itself is 0).
struct CosetIndex {
  std::vector<std::size_t> coset_of;            // element -> coset
  std::vector<std::vector<std::size_t>> members;  // coset -> sorted elements

  std::size_t size() const noexcept { return members.size(); }
};

inline CosetIndex left_cosets(const PermGroup &G, const std::vector<std::size_t> &H) {
  CosetIndex ci;
  ci.coset_of.assign(G.order(), G.order());
  for (std::size_t g = 0; g < G.order(); ++g) {
    if (ci.coset_of[g] != G.order())
      continue;
    std::vector<std::size_t> coset;
    for (std::size_t h : H)
      coset.push_back(G.multiply(g, h));
    std::ranges::sort(coset);
    for (std::size_t x : coset)
      ci.coset_of[x] = ci.members.size();
    ci.members.push_back(std::move(coset));
  }
  return ci;
}

struct CosetSpec {
  PermGroup group;
  std::vector<std::size_t> H;  // sorted element indices
  std::vector<std::size_t> S;  // element indices
};

namespace detail {

inline std::string coset_name(const PermGroup &G, std::size_t g) {
  return "(" + G.word(g) + ")H";
}

// Throws on the first violated requirement. Generation in (i) is skipped
// for the parts of a split connection set.
inline void check_spec(const CosetSpec &spec, bool require_generation) {
  const PermGroup &G = spec.group;
  auto violated = [&](int cond, const std::string &why) {
    throw CosetError(CosetError::Kind::ConditionViolated,
                     "condition (" + std::string(cond == 1 ? "i" : cond == 2 ? "ii" : "iii") +
                         ") violated: " + why,
                     cond);
  };
  std::vector<bool> inH(G.order(), false);
  for (std::size_t h : spec.H) {
    if (h >= G.order())
      throw CosetError(CosetError::Kind::NotSubgroup, "H element out of range");
    inH[h] = true;
  }
  if (!inH[0])
    throw CosetError(CosetError::Kind::NotSubgroup, "H does not contain the identity");
  for (std::size_t a : spec.H)
    for (std::size_t b : spec.H)
      if (!inH[G.multiply(a, b)])
        throw CosetError(CosetError::Kind::NotSubgroup,
                         "H is not closed: " + G.word(a) + " * " + G.word(b));
  if (spec.S.empty())
    violated(1, "S is empty");
  for (std::size_t s : spec.S) {
    if (s >= G.order())
      throw Error("S element out of range");
    if (inH[s])
      violated(1, "S meets H at " + G.word(s));
  }
  if (require_generation) {
    std::vector<Permutation> gens;
    for (std::size_t x : spec.S)
      gens.push_back(G.element(x));
    for (std::size_t x : spec.H)
      gens.push_back(G.element(x));
    if (closure(gens, G.degree(), G.order() + 1).order() != G.order())
      violated(1, "S and H do not generate the group");
  }
  CosetIndex ci = left_cosets(G, spec.H);
  std::vector<bool> sh(ci.size(), false);
  for (std::size_t s : spec.S)
    sh[ci.coset_of[s]] = true;
  for (std::size_t h : spec.H)
    for (std::size_t s : spec.S)
      if (!sh[ci.coset_of[G.multiply(h, s)]])
        violated(2, "(" + G.word(h) + ")(" + G.word(s) + ") is not in SH");
  std::vector<std::optional<std::size_t>> owner(ci.size());
  for (std::size_t s : spec.S) {
    auto &o = owner[ci.coset_of[s]];
    if (o)
      violated(3, G.word(*o) + " and " + G.word(s) + " lie in the same coset");
    o = s;
  }
}

} // namespace detail

/// Throws ConditionViolated (or NotSubgroup) unless the spec is valid.
inline void check_conditions(const CosetSpec &spec) { detail::check_spec(spec, true); }

struct CosetGraph {
  CosetSpec spec;
  CosetIndex cosets;
  Digraph digraph;
};

namespace detail {

// Edges (cH, f s H) from the least element f of each coset.
inline std::vector<Edge> coset_edges(const CosetSpec &spec, const CosetIndex &ci) {
  std::vector<Edge> edges;
  for (std::size_t c = 0; c < ci.size(); ++c) {
    std::size_t f = ci.members[c].front();
    for (std::size_t s : spec.S)
      edges.push_back({static_cast<Vertex>(c),
                       static_cast<Vertex>(ci.coset_of[spec.group.multiply(f, s)])});
  }
  return edges;
}

} // namespace detail

inline CosetGraph build_coset_graph(CosetSpec spec) {
  std::ranges::sort(spec.H);
  check_conditions(spec);
  CosetIndex ci = left_cosets(spec.group, spec.H);
  auto edges = detail::coset_edges(spec, ci);
  Digraph g = Digraph::validate(ci.size(), std::move(edges));
  return {std::move(spec), std::move(ci), std::move(g)};
}

/// Left multiplication by g on the cosets.
inline VertexMap coset_action(const CosetGraph &cg, std::size_t g) {
  std::vector<Vertex> images(cg.cosets.size());
  for (std::size_t c = 0; c < cg.cosets.size(); ++c)
    images[c] = static_cast<Vertex>(
        cg.cosets.coset_of[cg.spec.group.multiply(g, cg.cosets.members[c].front())]);
  return VertexMap(std::move(images));
}

/// True iff H acts transitively on SH.
inline bool is_irreducible(const CosetSpec &spec) {
  const PermGroup &G = spec.group;
  CosetIndex ci = left_cosets(G, spec.H);
  for (std::size_t t : spec.S) {
    std::vector<bool> reached(ci.size(), false);
    for (std::size_t h : spec.H)
      reached[ci.coset_of[G.multiply(h, t)]] = true;
    for (std::size_t s : spec.S)
      if (!reached[ci.coset_of[s]])
        return false;
  }
  return true;
}

inline bool is_edge_transitive(const CosetSpec &spec) { return is_irreducible(spec); }

/// S split by s ~ t iff hsH = tH for some h in H, parts in order of their
/// first member in S.
inline std::vector<CosetSpec> decompose_S(const CosetSpec &spec) {
  const PermGroup &G = spec.group;
  CosetIndex ci = left_cosets(G, spec.H);
  std::vector<std::optional<std::size_t>> part_of(spec.S.size());
  std::vector<CosetSpec> parts;
  for (std::size_t i = 0; i < spec.S.size(); ++i) {
    if (part_of[i])
      continue;
    std::vector<bool> orbit(ci.size(), false);
    for (std::size_t h : spec.H)
      orbit[ci.coset_of[G.multiply(h, spec.S[i])]] = true;
    CosetSpec part{G, spec.H, {}};
    for (std::size_t j = i; j < spec.S.size(); ++j)
      if (!part_of[j] && orbit[ci.coset_of[spec.S[j]]]) {
        part_of[j] = parts.size();
        part.S.push_back(spec.S[j]);
      }
    parts.push_back(std::move(part));
  }
  return parts;
}

/// F_s = {(gH, gsH) : g in reps}, with the first collision if two reps of
/// distinct cosets are sent to the same coset.
struct CosetFactorReport {
  bool ok = true;
  OneFactor factor;  // meaningful when ok
  struct Collision {
    std::size_t u, v;  // representatives (elements) with uH != vH
    std::size_t image; // the coset usH = vsH
  };
  std::optional<Collision> collision;
  std::string violation;

  explicit operator bool() const noexcept { return ok; }
};

inline CosetFactorReport coset_factor_from_reps(const PermGroup &G, const CosetIndex &ci,
                                                const std::vector<std::size_t> &reps,
                                                std::size_t s) {
  CosetFactorReport r;
  const std::size_t n = ci.size();
  r.factor.succ.assign(n, static_cast<Vertex>(n));
  std::vector<std::optional<std::size_t>> source(n);
  std::vector<bool> covered(n, false);
  for (std::size_t g : reps) {
    std::size_t c = ci.coset_of[g], image = ci.coset_of[G.multiply(g, s)];
    if (covered[c]) {
      r.ok = false;
      r.violation = "two representatives of " + detail::coset_name(G, g);
      return r;
    }
    covered[c] = true;
    if (source[image]) {
      r.ok = false;
      r.collision = CosetFactorReport::Collision{*source[image], g, image};
      r.violation = "(" + G.word(*source[image]) + ")(" + G.word(s) + ")H = (" + G.word(g) +
                    ")(" + G.word(s) + ")H";
      return r;
    }
    source[image] = g;
    r.factor.succ[c] = static_cast<Vertex>(image);
  }
  if (std::ranges::count(covered, false)) {
    r.ok = false;
    r.violation = "representatives do not cover every coset";
  } else {
    for (std::size_t c = 0; c < n; ++c)
      if (r.factor.succ[c] == c) {
        r.ok = false;
        r.violation = "fixed point at coset " + std::to_string(c);
      }
  }
  return r;
}

/// Edges (rH, rsH) over a chosen transversal, whether or not HS is inside
/// SH. Throws DigraphError if the result is not a regular digraph.
inline Digraph labeled_coset_digraph(const PermGroup &G, const std::vector<std::size_t> &H,
                                     const std::vector<std::size_t> &S,
                                     const std::vector<std::size_t> &reps) {
  CosetIndex ci = left_cosets(G, H);
  if (reps.size() != ci.size())
    throw Error("need one representative per coset");
  std::vector<Edge> edges;
  for (std::size_t r : reps)
    for (std::size_t s : S)
      edges.push_back({static_cast<Vertex>(ci.coset_of[r]),
                       static_cast<Vertex>(ci.coset_of[G.multiply(r, s)])});
  return Digraph::validate(ci.size(), std::move(edges));
}

struct Theorem1Result {
  std::vector<std::size_t> reps;  // R, one per coset, indexed by coset
  std::vector<OneFactor> factors; // F_s in the order of spec.S
};

/// Representatives R with D = F_r = {g(H, rH) : g in R}, then F_s = h_s F_r
/// for sH = h_s r H. The factors are checked to partition the edges.
inline Theorem1Result theorem1_factors(const CosetSpec &spec, const OneFactor &D,
                                       std::size_t r_pos = 0) {
  if (!is_irreducible(spec))
    throw CosetError(CosetError::Kind::NotIrreducible, "connection set is not irreducible");
  const PermGroup &G = spec.group;
  CosetIndex ci = left_cosets(G, spec.H);
  const std::size_t n = ci.size(), r = spec.S.at(r_pos);
  if (D.succ.size() != n)
    throw Error("D has the wrong number of vertices");

  Theorem1Result out;
  out.reps.resize(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::optional<std::size_t> pick;
    for (std::size_t g : ci.members[c])
      if (ci.coset_of[G.multiply(g, r)] == D.succ[c]) {
        pick = g;
        break;
      }
    if (!pick)
      throw CosetError(CosetError::Kind::Defect,
                       "D's edge from coset " + std::to_string(c) + " is not g(H, rH)");
    out.reps[c] = *pick;
  }

  std::vector<std::pair<Vertex, Vertex>> seen;
  for (std::size_t s : spec.S) {
    std::optional<std::size_t> hs;
    for (std::size_t h : spec.H)
      if (ci.coset_of[G.multiply(h, r)] == ci.coset_of[s]) {
        hs = h;
        break;
      }
    if (!hs)
      throw CosetError(CosetError::Kind::NotIrreducible, "no h with sH = hrH");
    std::vector<std::size_t> moved;
    for (std::size_t g : out.reps)
      moved.push_back(G.multiply(*hs, g));
    auto report = coset_factor_from_reps(G, ci, moved, r);
    if (!report)
      throw CosetError(CosetError::Kind::Defect, "F_s is not a 1-factor: " + report.violation);
    out.factors.push_back(std::move(report.factor));
  }
  std::vector<Edge> edges;
  for (const auto &f : out.factors)
    for (Vertex u = 0; u < n; ++u)
      edges.push_back({u, f.succ[u]});
  auto expected = detail::coset_edges(spec, ci);
  std::ranges::sort(edges);
  std::ranges::sort(expected);
  if (edges != expected)
    throw CosetError(CosetError::Kind::Defect, "factors do not partition the coset digraph");
  return out;
}

namespace detail {

// Results of the representative construction over seeds D (the part's first
// 1-factor, then every other 1-factor found) and positions of r, keeping
// those that partition the edges, distinct, at most `cap` of them. The
// construction does not succeed for every seed, and for some irreducible
// parts for none.
inline std::vector<Theorem1Result> theorem1_candidates(const CosetSpec &part, const Digraph &pg,
                                                       std::size_t factorization_budget,
                                                       std::size_t cap) {
  std::vector<Theorem1Result> out;
  std::set<std::vector<std::vector<Vertex>>> kept;
  auto attempt = [&](const OneFactor &D, std::size_t r_pos) {
    try {
      auto r = theorem1_factors(part, D, r_pos);
      std::vector<std::vector<Vertex>> key;
      for (const auto &f : r.factors)
        key.push_back(f.succ);
      if (kept.insert(std::move(key)).second)
        out.push_back(std::move(r));
    } catch (const CosetError &e) {
      if (e.kind() != CosetError::Kind::Defect)
        throw;
    }
    return out.size() >= cap;
  };
  if (attempt(one_factorization(pg)[0], 0))
    return out;
  auto all = enumerate_one_factorizations(pg, factorization_budget);
  std::set<std::vector<Vertex>> tried;
  for (const auto &f : all.factorizations)
    for (const auto &D : f.factors())
      if (tried.insert(D.succ).second)
        for (std::size_t r_pos = 0; r_pos < part.S.size(); ++r_pos)
          if (attempt(D, r_pos))
            return out;
  if (out.empty())
    throw CosetError(CosetError::Kind::Defect,
                     std::string(all.exhausted ? "no" : "within budget, no") +
                         " 1-factor of an irreducible part yields coset-labelled factors");
  return out;
}

struct CosetParts {
  CosetGraph cg;
  std::vector<CosetSpec> parts;
  std::vector<std::vector<Theorem1Result>> candidates;
};

inline CosetParts coset_parts(const CosetSpec &spec, std::size_t factorization_budget,
                              std::size_t cap) {
  CosetParts out{build_coset_graph(spec), {}, {}};
  out.parts = decompose_S(out.cg.spec);
  for (const CosetSpec &part : out.parts) {
    Digraph pg = Digraph::regular(out.cg.cosets.size(), coset_edges(part, out.cg.cosets));
    out.candidates.push_back(theorem1_candidates(part, pg, factorization_budget, cap));
  }
  return out;
}

// Factor list in S's order from one candidate per part.
inline Factorization assemble(const CosetParts &cp, const std::vector<std::size_t> &pick) {
  std::vector<OneFactor> factors(cp.cg.spec.S.size());
  for (std::size_t p = 0; p < cp.parts.size(); ++p) {
    const auto &part = cp.parts[p];
    const auto &t1 = cp.candidates[p][pick[p]];
    for (std::size_t i = 0; i < part.S.size(); ++i) {
      auto pos = std::ranges::find(cp.cg.spec.S, part.S[i]) - cp.cg.spec.S.begin();
      factors[static_cast<std::size_t>(pos)] = t1.factors[i];
    }
  }
  Factorization f(cp.cg.digraph, std::move(factors));
  if (auto report = verify_factorization(f); !report)
    throw CosetError(CosetError::Kind::Defect, "coset factorization: " + report.violation);
  return f;
}

} // namespace detail

/// One factor per element of S, in S's order. Each irreducible part is
/// factorized by the representative construction, seeded from the part's
/// first 1-factor and then from the others until the edges are partitioned.
/// Throws CosetError(Defect) when no seed works.
inline Factorization coset_factorization(const CosetSpec &spec,
                                         std::size_t factorization_budget = 10000) {
  auto cp = detail::coset_parts(spec, factorization_budget, 1);
  return detail::assemble(cp, std::vector<std::size_t>(cp.parts.size(), 0));
}

/// A coset factorization whose breadth-first word tree from H spans. The
/// first working seed per part does not always give one, so combinations of
/// up to `per_part` seeds per part are tried, at most `combinations` in all.
/// Throws CosetError(Defect) when none spans.
inline SpanningFactorization coset_spanning_factorization(const CosetSpec &spec,
                                                          std::size_t per_part = 64,
                                                          std::size_t combinations = 4096,
                                                          std::size_t factorization_budget = 10000) {
  auto cp = detail::coset_parts(spec, factorization_budget, per_part);
  std::vector<std::size_t> pick(cp.parts.size(), 0);
  for (std::size_t tried = 0; tried < combinations; ++tried) {
    Factorization f = detail::assemble(cp, pick);
    std::vector<std::uint32_t> letters(f.size());
    std::iota(letters.begin(), letters.end(), 0u);
    WordSet ws = tree_wordset(f, 0, letters);
    if (is_spanning(f, ws))
      return {std::move(f), std::move(ws)};
    std::size_t p = 0;
    while (p < pick.size() && ++pick[p] == cp.candidates[p].size())
      pick[p++] = 0;
    if (p == pick.size())
      break;
  }
  throw CosetError(CosetError::Kind::Defect, "no coset-labelled factorization found spans");
}

// The order-20 group of x -> 2x, x -> x+1 on Z_5
// ---------------------------------------------

struct PetersenGroup {
  PermGroup group;
  std::size_t theta, alpha;  // element indices
};

inline PetersenGroup petersen_group() {
  Permutation theta{1, 2, 3, 4, 0}, alpha{0, 2, 4, 1, 3};
  PermGroup G = closure({theta, alpha}, 5);
  G.set_names({"t", "a"});
  return {G, *G.index_of(theta), *G.index_of(alpha)};
}

/// H = {1, a^2}, S = {t, a}. Condition (ii) fails for this S.
inline CosetSpec petersen_spec() {
  auto P = petersen_group();
  std::size_t a2 = P.group.multiply(P.alpha, P.alpha);
  return {P.group, {0, a2}, {P.theta, P.alpha}};
}

/// S closed under H: {t, a, a^2 t}. Gives the undirected Petersen graph.
inline CosetSpec petersen_closed_spec() {
  auto P = petersen_group();
  CosetSpec spec = petersen_spec();
  std::size_t a2 = P.group.multiply(P.alpha, P.alpha);
  spec.S.push_back(P.group.multiply(a2, P.theta));
  return spec;
}

/// Representatives t^i and t^i a (i = 0..4), indexed by coset.
inline std::vector<std::size_t> petersen_reps(const PetersenGroup &P) {
  CosetSpec spec = petersen_spec();
  CosetIndex ci = left_cosets(P.group, spec.H);
  std::vector<std::size_t> reps(ci.size());
  std::size_t t = 0;
  for (int i = 0; i < 5; ++i) {
    reps[ci.coset_of[t]] = t;
    std::size_t ta = P.group.multiply(t, P.alpha);
    reps[ci.coset_of[ta]] = ta;
    t = P.group.multiply(t, P.theta);
  }
  return reps;
}

// Group spec file
// ---------------
//   <degree>
//   <image list>          one line per generator
//   ...
//   H: <word>; <word>     generators of H, words of generator indices
//   S: <word>; <word>     connection set
// "e" (or an empty word) is the identity.

inline CosetSpec read_group_spec(std::istream &is, std::size_t closure_limit = 100'000) {
  detail::LineReader reader(is);
  if (!reader.next())
    throw ParseError(1, 1, "missing degree line");
  auto head = reader.integers();
  if (head.size() != 1)
    throw ParseError(reader.line_no, 1, "first line must be the degree");
  const std::size_t degree = head[0].first;
  std::vector<Permutation> gens;
  std::optional<std::pair<std::string, std::size_t>> h_text, s_text;
  while (reader.next()) {
    auto pos = reader.line.find_first_not_of(" \t");
    if (reader.line.compare(pos, 2, "H:") == 0) {
      h_text = {reader.line.substr(pos + 2), reader.line_no};
      continue;
    }
    if (reader.line.compare(pos, 2, "S:") == 0) {
      s_text = {reader.line.substr(pos + 2), reader.line_no};
      continue;
    }
    if (h_text || s_text)
      throw ParseError(reader.line_no, pos + 1, "generator after H:/S: section");
    auto fields = reader.integers();
    if (fields.size() != degree)
      throw ParseError(reader.line_no, 1,
                       "expected " + std::to_string(degree) + " images, got " +
                           std::to_string(fields.size()));
    Permutation p;
    std::vector<bool> hit(degree, false);
    for (auto [v, col] : fields) {
      if (v >= degree || hit[v])
        throw ParseError(reader.line_no, col, "not a permutation");
      hit[v] = true;
      p.push_back(static_cast<Vertex>(v));
    }
    gens.push_back(std::move(p));
  }
  if (!s_text)
    throw ParseError(reader.line_no, 1, "missing \"S:\" line");
  PermGroup G = closure(gens, degree, closure_limit);

  auto words = [&](const std::pair<std::string, std::size_t> &text) {
    std::vector<std::size_t> out;
    std::stringstream all(text.first);
    std::string item;
    while (std::getline(all, item, ';')) {
      std::stringstream ws(item);
      std::vector<std::size_t> word;
      std::string tok;
      while (ws >> tok) {
        if (tok == "e")
          continue;
        std::size_t k = 0;
        try {
          std::size_t used = 0;
          k = std::stoul(tok, &used);
          if (used != tok.size())
            throw std::invalid_argument(tok);
        } catch (const std::exception &) {
          throw ParseError(text.second, 1, "bad generator index \"" + tok + "\"");
        }
        if (k >= gens.size())
          throw ParseError(text.second, 1, "generator index " + tok + " out of range");
        word.push_back(k);
      }
      out.push_back(G.evaluate(word));
    }
    return out;
  };
  CosetSpec spec{G, {0}, s_text ? words(*s_text) : std::vector<std::size_t>{}};
  if (h_text) {
    std::vector<Permutation> hgens;
    for (std::size_t x : words(*h_text))
      hgens.push_back(G.element(x));
    PermGroup Hg = closure(hgens, degree, closure_limit);
    spec.H.clear();
    for (std::size_t i = 0; i < Hg.order(); ++i)
      spec.H.push_back(*G.index_of(Hg.element(i)));
    std::ranges::sort(spec.H);
  }
  return spec;
}

} // namespace dignet

#endif
