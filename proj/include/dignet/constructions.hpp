#ifndef DIGNET_CONSTRUCTIONS_HPP
#define DIGNET_CONSTRUCTIONS_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <deque>
#include <istream>
#include <limits>
#include <mutex>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "dignet/digraph.hpp"
#include "dignet/factorize.hpp"
#include "dignet/groupoid.hpp"

namespace dignet {

class ConstructionError : public Error {
public:
  enum class Kind { NonPrimeModulus, InvalidParams, FixedPointProduced };

  ConstructionError(Kind kind, std::string msg, Vertex vertex = 0)
      : Error(std::move(msg)), kind_(kind), vertex_(vertex) {}

  Kind kind() const noexcept { return kind_; }
  /// The fixed point, for FixedPointProduced.
  Vertex vertex() const noexcept { return vertex_; }

private:
  Kind kind_;
  Vertex vertex_;
};

// Kautz G(2,3) and its two tables on Z_2 x Z_3
// ---------------------------------------------

namespace detail {

inline std::vector<std::string> z2z3_labels() { return {"00", "01", "02", "10", "11", "12"}; }

} // namespace detail

/// The full 6 x 6 table whose generator columns (01 and 10) give the Kautz
/// digraph. Rows are not permutations.
inline GroupoidTable example1_full_table() {
  GroupoidTable t;
  t.partial = false;
  t.gen_ids = {1, 3};
  t.labels = detail::z2z3_labels();
  t.rows = {{0, 1, 2, 3, 4, 5}, {1, 2, 3, 5, 0, 1}, {2, 3, 4, 1, 2, 3},
            {3, 4, 5, 0, 1, 2}, {4, 5, 0, 2, 3, 4}, {5, 0, 1, 4, 5, 0}};
  return t;
}

inline PartialGroupoid kautz_table() {
  GroupoidTable t = example1_full_table();
  std::vector<std::vector<Vertex>> cols(t.order());
  for (Vertex u = 0; u < t.order(); ++u)
    cols[u] = {t.rows[u][1], t.rows[u][3]};
  return PartialGroupoid(GroupoidTable{t.gen_ids, std::move(cols), true, t.labels});
}

/// Right identity but not left identity: axiom 1 fails, 2 and 3 hold.
inline GroupoidTable example2_table() {
  GroupoidTable t;
  t.partial = false;
  t.gen_ids = {1, 3};
  t.labels = detail::z2z3_labels();
  t.rows = {{0, 1, 2, 4, 5, 3}, {1, 2, 0, 3, 4, 5}, {2, 0, 1, 5, 3, 4},
            {3, 4, 5, 1, 2, 0}, {4, 5, 3, 0, 1, 2}, {5, 3, 4, 2, 0, 1}};
  return t;
}

// Hoffman-Singleton on Z_2 x Z_p x Z_p
// ------------------------------------

struct Triple {
  std::uint32_t a = 0, b = 0, c = 0;
  friend bool operator==(const Triple &, const Triple &) = default;
};

inline bool is_prime(std::uint32_t p) {
  if (p < 2)
    return false;
  for (std::uint32_t q = 2; q * q <= p; ++q)
    if (p % q == 0)
      return false;
  return true;
}

/// (a,b,c) * (x,y,z) = (a+x, b - bx + y, c + (-1)^a by + 2^a z), with a and x
/// read in {0,1} and the other coordinates mod p.
inline Triple hs_product(std::uint32_t p, Triple u, Triple s) {
  const std::int64_t P = p;
  auto mod = [&](std::int64_t v) { return static_cast<std::uint32_t>(((v % P) + P) % P); };
  const std::int64_t sign = u.a ? -1 : 1, twos = u.a ? 2 : 1;
  return {(u.a + s.a) % 2, mod(std::int64_t(u.b) - std::int64_t(u.b) * s.a + s.b),
          mod(std::int64_t(u.c) + sign * u.b * s.b + twos * s.c)};
}

inline Vertex hs_index(std::uint32_t p, Triple t) { return (t.a * p + t.b) * p + t.c; }

inline Triple hs_element(std::uint32_t p, Vertex i) { return {i / (p * p), (i / p) % p, i % p}; }

inline std::vector<Triple> hs_default_generators() {
  return {{0, 0, 1}, {0, 0, 4}, {1, 0, 0}, {1, 1, 0}, {1, 2, 0}, {1, 3, 0}, {1, 4, 0}};
}

/// Generator columns u * s of the Z_2 x Z_p x Z_p product. The table is
/// returned unchecked: for the listed S at p = 5 the columns of the x = 1
/// generators are not permutations, though the edge multiset {(u, u*s)} is
/// the Hoffman-Singleton graph (see hoffman_singleton_graph).
inline GroupoidTable hoffman_singleton_table(std::uint32_t p = 5,
                                             std::vector<Triple> generators = {}) {
  if (!is_prime(p))
    throw ConstructionError(ConstructionError::Kind::NonPrimeModulus,
                            std::to_string(p) + " is not prime");
  if (generators.empty()) {
    if (p != 5)
      throw ConstructionError(ConstructionError::Kind::InvalidParams,
                              "no default generator set for p = " + std::to_string(p));
    generators = hs_default_generators();
  }
  GroupoidTable t;
  const std::size_t n = 2 * p * p;
  for (const Triple &s : generators) {
    if (s.a > 1 || s.b >= p || s.c >= p)
      throw ConstructionError(ConstructionError::Kind::InvalidParams,
                              "generator outside Z_2 x Z_p x Z_p");
    t.gen_ids.push_back(hs_index(p, s));
  }
  t.rows.resize(n);
  for (Vertex u = 0; u < n; ++u) {
    Triple x = hs_element(p, u);
    for (const Triple &s : generators)
      t.rows[u].push_back(hs_index(p, hs_product(p, x, s)));
    t.labels.push_back(std::to_string(x.a) + "." + std::to_string(x.b) + "." +
                       std::to_string(x.c));
  }
  return t;
}

inline Digraph hoffman_singleton_graph(std::uint32_t p = 5, std::vector<Triple> generators = {}) {
  return generator_digraph(hoffman_singleton_table(p, std::move(generators)));
}

// Permutations in cycle notation
// ------------------------------

/// "(0 5 10)(3 8)" or "(0,2,4)" on 0..size-1; unlisted points are fixed.
inline std::vector<Vertex> parse_cycles(const std::string &text, std::size_t size) {
  std::vector<Vertex> image(size);
  std::iota(image.begin(), image.end(), Vertex{0});
  std::vector<bool> seen(size, false);
  std::size_t i = 0;
  auto bad = [&](const std::string &why) {
    throw ParseError(1, i + 1, why + " in \"" + text + "\"");
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (c != '(')
      bad("expected '('");
    ++i;
    std::vector<Vertex> cycle;
    for (;;) {
      while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == '\t'))
        ++i;
      if (i == text.size())
        bad("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] < '0' || text[i] > '9')
        bad(std::string("unexpected character '") + text[i] + "'");
      const std::size_t start = i;
      std::uint64_t v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9' && v < size)
        v = v * 10 + static_cast<std::uint64_t>(text[i++] - '0');
      if (v >= size || seen[v]) {
        i = start;
        bad("point " + text.substr(start, text.find_first_not_of("0123456789", start) - start) +
            (v >= size ? " out of range" : " repeated"));
      }
      seen[v] = true;
      cycle.push_back(static_cast<Vertex>(v));
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      image[cycle[k]] = cycle[(k + 1) % cycle.size()];
  }
  return image;
}

struct CycleStructure {
  std::vector<std::vector<Vertex>> cycles;  // each starts at its least point
};

/// Cycles in order of their least point.
inline CycleStructure cycle_structure(std::span<const Vertex> perm) {
  CycleStructure out;
  std::vector<bool> seen(perm.size(), false);
  for (Vertex s = 0; s < perm.size(); ++s) {
    if (seen[s])
      continue;
    std::vector<Vertex> cycle;
    for (Vertex x = s; !seen[x]; x = perm[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

inline std::string cycle_notation(std::span<const Vertex> perm, bool include_fixed = false) {
  std::ostringstream os;
  for (const auto &c : cycle_structure(perm).cycles) {
    if (c.size() == 1 && !include_fixed)
      continue;
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i)
      os << (i ? " " : "") << c[i];
    os << ')';
  }
  return os.str();
}

/// Cycle `a` equals cycle `b` up to rotation.
inline bool same_cycle(const std::vector<Vertex> &a, const std::vector<Vertex> &b) {
  if (a.size() != b.size())
    return false;
  if (a.empty())
    return true;
  auto it = std::ranges::find(b, a[0]);
  if (it == b.end())
    return false;
  std::size_t off = static_cast<std::size_t>(it - b.begin());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[(i + off) % b.size()])
      return false;
  return true;
}

// Alegre digraph
// --------------

/// The t-factor as printed, one string per cycle. The third cycle is printed
/// with 13 of its 15 points.
inline std::vector<std::string> alegre_printed_cycles() {
  return {"(0 5 10 15 20)", "(3 23 18 13 8)", "(1 17 24 21 12 19 16 7 14 11 2 9 6)"};
}

/// 25 vertices; factor 0 is s = +1 (mod 25), factor 1 is t. The 15-cycle is
/// completed with 22 and 4 after 6, as the difference-set parameters give.
inline Factorization alegre_graph() {
  const std::size_t n = 25;
  std::vector<Vertex> s(n);
  for (Vertex u = 0; u < n; ++u)
    s[u] = (u + 1) % n;
  auto t = parse_cycles("(0 5 10 15 20)(3 23 18 13 8)"
                        "(1 17 24 21 12 19 16 7 14 11 2 9 6 22 4)",
                        n);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    edges.push_back({u, s[u]});
    edges.push_back({u, t[u]});
  }
  return Factorization(Digraph::validate(n, std::move(edges)),
                       {OneFactor{std::move(s)}, OneFactor{std::move(t)}});
}

// Cyclic difference sets
// ----------------------

/// Y(pi, v) on Z_n with U = {0, a, 2a, ...}: Y(i + u) = pi(i) + u + v_i for
/// 0 <= i < a, u in U.
struct DiffSetParams {
  std::size_t n = 0, a = 0, b = 0;
  std::vector<Vertex> pi;       // images of 0..a-1
  std::vector<std::size_t> v;   // v_i in U, as residues mod n

  friend auto operator<=>(const DiffSetParams &, const DiffSetParams &) = default;
  friend bool operator==(const DiffSetParams &, const DiffSetParams &) = default;
};

inline void validate(const DiffSetParams &p) {
  auto fail = [](const std::string &why) {
    throw ConstructionError(ConstructionError::Kind::InvalidParams, why);
  };
  if (p.a == 0 || p.b == 0 || p.n != p.a * p.b)
    fail("n must equal a*b");
  if (p.pi.size() != p.a || p.v.size() != p.a)
    fail("pi and v must have a entries");
  std::vector<bool> hit(p.a, false);
  for (Vertex x : p.pi) {
    if (x >= p.a || hit[x])
      fail("pi is not a permutation of 0..a-1");
    hit[x] = true;
  }
  for (std::size_t x : p.v)
    if (x >= p.n || x % p.a != 0)
      fail("v_i = " + std::to_string(x) + " is not in U");
}

inline std::string to_string(const DiffSetParams &p) {
  std::ostringstream os;
  os << "n=" << p.n << " a=" << p.a << " b=" << p.b << " pi=" << cycle_notation(p.pi)
     << " v=(";
  for (std::size_t i = 0; i < p.v.size(); ++i)
    os << (i ? "," : "") << p.v[i];
  os << ')';
  return os.str();
}

/// Throws FixedPointProduced when some pi(i) + v_i = i.
inline OneFactor diffset_Y(const DiffSetParams &p) {
  validate(p);
  OneFactor y;
  y.succ.resize(p.n);
  for (std::size_t i = 0; i < p.a; ++i)
    for (std::size_t u = 0; u < p.n; u += p.a) {
      Vertex from = static_cast<Vertex>(i + u);
      Vertex to = static_cast<Vertex>((p.pi[i] + u + p.v[i]) % p.n);
      if (from == to)
        throw ConstructionError(ConstructionError::Kind::FixedPointProduced,
                                "Y fixes " + std::to_string(from), from);
      y.succ[from] = to;
    }
  return y;
}

/// alpha * c, where c is the length of pi's cycle through start mod a and
/// alpha the additive order in U of the sum of v over that cycle.
inline std::size_t predicted_cycle_length(const DiffSetParams &p, Vertex start) {
  validate(p);
  std::size_t i = start % p.a, c = 0, sum = 0, j = i;
  do {
    sum += p.v[j];
    j = p.pi[j];
    ++c;
  } while (j != i);
  sum %= p.n;
  std::size_t alpha = 1;
  while (alpha * sum % p.n != 0)
    ++alpha;
  return alpha * c;
}

/// Parameters of the digraph renamed by j -> j+1.
inline DiffSetParams shift_params(const DiffSetParams &p) {
  validate(p);
  const std::size_t a = p.a, n = p.n;
  DiffSetParams q = p;
  for (std::size_t i = 0; i < a; ++i) {
    std::size_t prev = (i + a - 1) % a;
    q.pi[i] = static_cast<Vertex>((p.pi[prev] + 1) % a);
    std::size_t w = p.v[prev] + n;
    if (p.pi[prev] == a - 1)
      w += a;
    if (prev == a - 1)
      w -= a;
    q.v[i] = w % n;
  }
  return q;
}

/// Parameters of the converse digraph renamed by j -> -j: Z stays +1.
inline DiffSetParams negate_params(const DiffSetParams &p) {
  validate(p);
  const std::size_t a = p.a, n = p.n;
  auto neg = [a](std::size_t x) { return (a - x) % a; };
  DiffSetParams q = p;
  for (std::size_t i = 0; i < a; ++i) {
    std::size_t j = p.pi[i], r = neg(j);
    q.pi[r] = static_cast<Vertex>(neg(i));
    std::size_t w = p.v[i] + n;
    if (j != 0)
      w += a;
    if (i != 0)
      w -= a;
    q.v[r] = w % n;
  }
  return q;
}

/// Factor 0 is Z = +1 (mod n), factor 1 is Y.
inline Factorization diffset_digraph(const DiffSetParams &p) {
  OneFactor y = diffset_Y(p);
  OneFactor z;
  z.succ.resize(p.n);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < p.n; ++u) {
    z.succ[u] = static_cast<Vertex>((u + 1) % p.n);
    edges.push_back({u, z.succ[u]});
    edges.push_back({u, y.succ[u]});
  }
  return Factorization(Digraph::validate(p.n, std::move(edges)), {std::move(z), std::move(y)});
}

namespace detail {

// Largest distance from any of the a coset representatives, on the
// successor arrays Z = +1 and Y.
inline std::size_t diffset_diameter_of(const std::vector<Vertex> &y, std::size_t a,
                                       std::vector<std::size_t> &dist,
                                       std::vector<Vertex> &queue) {
  const std::size_t n = y.size();
  std::size_t best = 0;
  for (Vertex s = 0; s < a; ++s) {
    std::ranges::fill(dist, std::numeric_limits<std::size_t>::max());
    queue.clear();
    queue.push_back(s);
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex x = queue[head];
      for (Vertex w : {static_cast<Vertex>((x + 1) % n), y[x]})
        if (dist[w] == std::numeric_limits<std::size_t>::max()) {
          dist[w] = dist[x] + 1;
          queue.push_back(w);
        }
    }
    best = std::max(best, dist[queue.back()]);
  }
  return best;
}

} // namespace detail

/// Maximum eccentricity over the sources 0..a-1, which is the diameter since
/// the translations by U are automorphisms.
inline std::size_t diffset_diameter(const DiffSetParams &p) {
  OneFactor y = diffset_Y(p);
  std::vector<std::size_t> dist(p.n);
  std::vector<Vertex> queue;
  return detail::diffset_diameter_of(y.succ, p.a, dist, queue);
}

// Params file: "n a b", "pi: <cycles>", "v: <comma-separated>".
inline DiffSetParams read_diffset_params(std::istream &is) {
  detail::LineReader reader(is);
  DiffSetParams p;
  if (!reader.next())
    throw ParseError(1, 1, "missing \"n a b\" line");
  auto head = reader.integers();
  if (head.size() != 3)
    throw ParseError(reader.line_no, 1, "expected \"n a b\"");
  p.n = head[0].first;
  p.a = head[1].first;
  p.b = head[2].first;
  bool have_pi = false, have_v = false;
  while (reader.next()) {
    auto pos = reader.line.find_first_not_of(" \t");
    auto colon = reader.line.find(':', pos);
    if (colon == std::string::npos)
      throw ParseError(reader.line_no, pos + 1, "expected \"pi:\" or \"v:\"");
    std::string key = reader.line.substr(pos, colon - pos);
    std::string rest = reader.line.substr(colon + 1);
    if (key == "pi") {
      try {
        p.pi = parse_cycles(rest, p.a);
      } catch (const ParseError &e) {
        throw ParseError(reader.line_no, colon + 1 + e.column(), e.what());
      }
      have_pi = true;
    } else if (key == "v") {
      detail::LineReader inner(is);
      inner.line = rest;
      inner.line_no = reader.line_no;
      try {
        for (auto [value, column] : inner.integers())
          p.v.push_back(value);
      } catch (const ParseError &e) {
        throw ParseError(reader.line_no, colon + 1 + e.column(), e.what());
      }
      have_v = true;
    } else {
      throw ParseError(reader.line_no, pos + 1, "unknown key \"" + key + "\"");
    }
  }
  if (!have_pi || !have_v)
    throw ParseError(reader.line_no, 1, "params need both \"pi:\" and \"v:\"");
  try {
    validate(p);
  } catch (const ConstructionError &e) {
    throw ParseError(1, 1, e.what());
  }
  return p;
}

inline void write_diffset_params(std::ostream &os, const DiffSetParams &p) {
  os << p.n << ' ' << p.a << ' ' << p.b << '\n';
  os << "pi: " << cycle_notation(p.pi) << '\n';
  os << "v: ";
  for (std::size_t i = 0; i < p.v.size(); ++i)
    os << (i ? "," : "") << p.v[i];
  os << '\n';
}

// Parameter search
// ----------------

struct DiffSetSearchOptions {
  bool reduce = true;             // pi(0) = 0 and v_0 = a only
  bool negation_symmetry = false; // also identify converse digraphs
  std::optional<std::size_t> target_diameter{};
  std::size_t max_candidates = 100'000'000;
  std::size_t workers = 1;
};

struct DiffSetSearchResult {
  std::size_t examined = 0;            // candidates generated
  std::size_t skipped_fixed_point = 0;
  std::size_t skipped_symmetry = 0;
  std::optional<std::size_t> best_diameter;
  std::vector<DiffSetParams> argmin;   // sorted
  std::size_t reduced_space = 0;       // (a-1)! b^(a-1), or a! b^a unreduced
  bool target_reached = false;
};

class DiffSetSearchBudgetExceeded : public SearchBudgetExceeded {
public:
  DiffSetSearchBudgetExceeded(DiffSetSearchResult partial)
      : SearchBudgetExceeded("difference-set space exceeds the candidate budget", 0),
        partial_(std::move(partial)) {}
  const DiffSetSearchResult &partial() const noexcept { return partial_; }

private:
  DiffSetSearchResult partial_;
};

inline std::size_t search_space_size(std::size_t a, std::size_t b, bool reduce) {
  std::size_t k = reduce ? a - 1 : a, size = 1;
  for (std::size_t i = 2; i <= k; ++i)
    size *= i;
  for (std::size_t i = 0; i < k; ++i)
    size *= b;
  return size;
}

namespace detail {

inline bool in_reduced_family(const DiffSetParams &p) {
  return p.pi[0] == 0 && p.v[0] == p.a % p.n;
}

// A reduced candidate is skipped when a lexicographically smaller member of
// the reduced family is a shift of its negation.
inline bool negation_dominated(const DiffSetParams &p) {
  DiffSetParams q = negate_params(p);
  for (std::size_t k = 0; k < p.a; ++k) {
    if (in_reduced_family(q) && q < p)
      return true;
    q = shift_params(q);
  }
  return false;
}

} // namespace detail

/// Enumerates difference-set parameters, in the reduced family by default,
/// and reports the least diameter with all parameters attaining it.
inline DiffSetSearchResult search_diffsets(std::size_t n, std::size_t a, std::size_t b,
                                           DiffSetSearchOptions options = {}) {
  if (a == 0 || b == 0 || n != a * b)
    throw ConstructionError(ConstructionError::Kind::InvalidParams, "n must equal a*b");
  DiffSetSearchResult result;
  result.reduced_space = search_space_size(a, b, options.reduce);
  if (result.reduced_space > options.max_candidates)
    throw DiffSetSearchBudgetExceeded(result);

  // Work items: the permutations pi, in lexicographic order.
  std::vector<std::vector<Vertex>> perms;
  std::vector<Vertex> pi(a);
  std::iota(pi.begin(), pi.end(), Vertex{0});
  do {
    if (!options.reduce || pi[0] == 0)
      perms.push_back(pi);
  } while (std::next_permutation(pi.begin(), pi.end()));

  struct Partial {
    std::size_t examined = 0, fixed = 0, symmetric = 0;
    std::optional<std::size_t> best;
    std::vector<DiffSetParams> argmin;
  };
  std::vector<Partial> partials(perms.size());

  auto work = [&](std::size_t item) {
    Partial &out = partials[item];
    DiffSetParams p{n, a, b, perms[item], std::vector<std::size_t>(a, 0)};
    const std::size_t first = options.reduce ? 1 : 0;
    if (options.reduce)
      p.v[0] = a % n;
    std::vector<std::size_t> digits(a, 0), dist(n);
    std::vector<Vertex> queue;
    std::vector<Vertex> y(n);
    for (;;) {
      for (std::size_t i = first; i < a; ++i)
        p.v[i] = digits[i] * a;
      ++out.examined;
      bool fixed = false;
      for (std::size_t i = 0; i < a && !fixed; ++i)
        fixed = (p.pi[i] + p.v[i]) % n == i;
      if (fixed) {
        ++out.fixed;
      } else if (options.negation_symmetry && options.reduce &&
                 detail::negation_dominated(p)) {
        ++out.symmetric;
      } else {
        for (std::size_t i = 0; i < a; ++i)
          for (std::size_t u = 0; u < n; u += a)
            y[i + u] = static_cast<Vertex>((p.pi[i] + u + p.v[i]) % n);
        std::size_t d = detail::diffset_diameter_of(y, a, dist, queue);
        if (!out.best || d < *out.best) {
          out.best = d;
          out.argmin.clear();
        }
        if (d == *out.best)
          out.argmin.push_back(p);
      }
      std::size_t i = first;
      while (i < a && ++digits[i] == b)
        digits[i++] = 0;
      if (i == a)
        break;
    }
  };

  const std::size_t workers = std::clamp<std::size_t>(options.workers, 1, perms.size());
  if (workers == 1) {
    for (std::size_t i = 0; i < perms.size(); ++i)
      work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < perms.size();)
          work(i);
      });
    for (auto &t : pool)
      t.join();
  }

  for (auto &part : partials) {
    result.examined += part.examined;
    result.skipped_fixed_point += part.fixed;
    result.skipped_symmetry += part.symmetric;
    if (!part.best)
      continue;
    if (!result.best_diameter || *part.best < *result.best_diameter) {
      result.best_diameter = part.best;
      result.argmin.clear();
    }
    if (*part.best == *result.best_diameter)
      result.argmin.insert(result.argmin.end(), part.argmin.begin(), part.argmin.end());
  }
  std::ranges::sort(result.argmin);
  if (options.target_diameter && result.best_diameter)
    result.target_reached = *result.best_diameter <= *options.target_diameter;
  return result;
}

} // namespace dignet

#endif
