#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "dignet/constructions.hpp"
#include "dignet/groupoid.hpp"
#include "oracles.hpp"

using namespace dignet;

namespace {

PartialGroupoid z3() { return PartialGroupoid({1}, {{1}, {2}, {0}}); }

std::vector<std::vector<Vertex>> columns(const Factorization &f) {
  std::vector<std::vector<Vertex>> out;
  for (const auto &k : f.factors())
    out.push_back(k.succ);
  return out;
}

Factorization random_factorization(std::size_t n, std::size_t d, std::mt19937_64 &rng) {
  auto perms = oracle::random_regular_perms(n, d, rng);
  std::vector<OneFactor> factors;
  for (auto &p : perms)
    factors.push_back({p});
  return Factorization(Digraph::validate(n, oracle::edges_of(perms)), std::move(factors));
}

} // namespace

TEST(Axioms, Example1GeneratorColumnsPass) {
  auto r = check_axioms(example1_full_table());
  EXPECT_TRUE(r.groupoid());
  EXPECT_TRUE(r.axiom1.pass);
  ASSERT_TRUE(r.all_columns_permutations.has_value());
  EXPECT_TRUE(*r.all_columns_permutations);
}

TEST(Axioms, Example2FailsOnlyTheLeftIdentity) {
  auto r = check_axioms(example2_table());
  EXPECT_FALSE(r.axiom1.pass);
  EXPECT_TRUE(r.axiom2.pass);
  EXPECT_TRUE(r.axiom3.pass);
  EXPECT_EQ(r.axiom1.witness, "00*10 = 11");
  EXPECT_THROW(PartialGroupoid{example2_table()}, GroupoidError);
}

TEST(Axioms, RepeatedColumnEntryNamesThePair) {
  GroupoidTable t{{1}, {{1}, {2}, {1}}, true, {}};
  auto r = check_axioms(t);
  EXPECT_FALSE(r.axiom3.pass);
  EXPECT_EQ(r.axiom3.witness, "0*1 = 2*1 = 1");
}

TEST(Axioms, FixedPointFailsAxiomTwo) {
  GroupoidTable t{{1}, {{1}, {1}, {0}}, true, {}};
  auto r = check_axioms(t);
  EXPECT_FALSE(r.axiom2.pass);
}

TEST(Axioms, LeftCancellationOnS) {
  GroupoidTable t{{1, 2}, {{1, 2}, {2, 0}, {0, 0}}, true, {}};
  auto r = check_axioms(t);
  EXPECT_FALSE(r.axiom3.pass);
  EXPECT_FALSE(r.axiom4.pass);
  EXPECT_TRUE(check_axioms(kautz_table().table()).axiom4.pass);
}

TEST(Axioms, MalformedShapeThrows) {
  GroupoidTable t{{1}, {{1}, {2, 0}, {0}}, true, {}};
  EXPECT_THROW(check_axioms(t), GroupoidError);
}

TEST(Labeling, Z3) {
  auto r = tree_like_labeling(z3());
  EXPECT_EQ(r.labels, (std::vector<Word>{{}, {0}, {0, 0}}));
  EXPECT_EQ(r.levels.size(), 3u);
}

TEST(Labeling, KautzLevelSizes) {
  auto r = tree_like_labeling(kautz_table());
  ASSERT_EQ(r.levels.size(), 3u);
  EXPECT_EQ(r.levels[0].size(), 1u);
  EXPECT_EQ(r.levels[1].size(), 2u);
  EXPECT_EQ(r.levels[2].size(), 3u);
}

TEST(Labeling, UngeneratedElementThrows) {
  // Two 2-cycles: elements 2 and 3 are not reachable from e.
  PartialGroupoid pg({1}, {{1}, {0}, {3}, {2}});
  try {
    tree_like_labeling(pg);
    FAIL();
  } catch (const GroupoidError &e) {
    EXPECT_EQ(e.kind(), GroupoidError::Kind::NotGenerated);
    EXPECT_EQ(e.element(), 2u);
  }
  EXPECT_THROW(cayley_graph(pg), GroupoidError);
}

TEST(Labeling, EveryElementLabelled) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto f = random_factorization(2 + rng() % 7, 1 + rng() % 3, rng);
    auto fg = groupoid_from_factorization(f, 0);
    EXPECT_EQ(fg.labeling.labels.size(), f.host().order());
    std::size_t total = 0;
    for (const auto &level : fg.labeling.levels)
      total += level.size();
    EXPECT_EQ(total, f.host().order());
  }
}

TEST(Extension, Z3IsTheAdditionTable) {
  auto pg = z3();
  auto fg = canonical_extension(pg, tree_like_labeling(pg).labels);
  for (Vertex u = 0; u < 3; ++u)
    for (Vertex w = 0; w < 3; ++w)
      EXPECT_EQ(fg(u, w), (u + w) % 3);
  EXPECT_TRUE(has_left_cancellation(fg));
}

TEST(Extension, KautzWithTreeLabelsReproducesExample1) {
  // Generators s = 01 (column 0) and t = 10 (column 1); 12 labelled t s s.
  auto pg = kautz_table();
  std::vector<Word> labels{{}, {0}, {0, 0}, {1}, {1, 0}, {1, 0, 0}};
  auto fg = canonical_extension(pg, labels);
  EXPECT_EQ(fg.table().rows, example1_full_table().rows);
  EXPECT_FALSE(has_left_cancellation(fg));
}

TEST(Extension, KautzBreadthFirstLabelsDifferInColumn12) {
  auto pg = kautz_table();
  auto labeling = tree_like_labeling(pg);
  EXPECT_EQ(labeling.labels[5], (Word{0, 1}));
  auto fg = canonical_extension(pg, labeling.labels);
  auto printed = example1_full_table();
  for (Vertex u = 0; u < 6; ++u)
    for (Vertex w = 0; w < 6; ++w)
      if (w != 5 || (u != 2 && u != 5)) {
        EXPECT_EQ(fg(u, w), printed.rows[u][w]) << u << "*" << w;
      }
  EXPECT_EQ(fg(2, 5), 0u);
  EXPECT_EQ(printed.rows[2][5], 3u);
}

TEST(Extension, Example1RowOneRepeatsAnEntry) {
  auto t = example1_full_table();
  FullGroupoid fg(t.gen_ids, t.rows);
  EXPECT_EQ(fg.row(1), (std::vector<Vertex>{1, 2, 3, 5, 0, 1}));
  EXPECT_FALSE(has_left_cancellation(fg));
  EXPECT_TRUE(fg.columns_are_permutations());
}

TEST(Extension, BadLabelsRejected) {
  auto pg = z3();
  EXPECT_THROW(canonical_extension(pg, {{}, {0}}), GroupoidError);
  EXPECT_THROW(canonical_extension(pg, {{}, {0, 0}, {0}}), GroupoidError);
  // 0000 does evaluate to 1, but its prefix 000 labels nothing.
  EXPECT_THROW(canonical_extension(pg, {{}, {0, 0, 0, 0}, {0, 0}}), GroupoidError);
}

TEST(Extension, RandomColumnsArePermutationsAndRowZeroIsIdentity) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto f = random_factorization(2 + rng() % 7, 1 + rng() % 3, rng);
    auto fg = groupoid_from_factorization(f, 0);
    auto ext = canonical_extension(fg.groupoid, fg.labeling.labels);
    const std::size_t n = ext.order();
    for (Vertex w = 0; w < n; ++w) {
      std::set<Vertex> col;
      for (Vertex u = 0; u < n; ++u)
        col.insert(ext(u, w));
      EXPECT_EQ(col.size(), n);
      EXPECT_EQ(ext(0, w), w);
    }
  }
}

TEST(Extension, LeftCancellationMatchesSpanning) {
  std::mt19937_64 rng(7);
  int cancelling = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto f = random_factorization(2 + rng() % 7, 1 + rng() % 3, rng);
    auto fg = groupoid_from_factorization(f, 0);
    auto ext = canonical_extension(fg.groupoid, fg.labeling.labels);
    auto cg = cayley_graph(fg.groupoid);
    bool spans = oracle::spans(columns(cg.factorization), fg.labeling.labels);
    EXPECT_EQ(has_left_cancellation(ext), spans);
    cancelling += spans;
  }
  EXPECT_GT(cancelling, 0);
}

TEST(Cayley, Z3IsTheThreeCycle) {
  auto cg = cayley_graph(z3());
  EXPECT_EQ(cg.graph, Digraph::validate(3, oracle::cycle(3)));
}

TEST(Cayley, KautzTFactorHasTwoAndFourCycles) {
  auto cg = cayley_graph(kautz_table());
  EXPECT_EQ(cg.graph.order(), 6u);
  EXPECT_EQ(cg.graph.degree(), 2u);
  EXPECT_EQ(diameter(cg.graph), 2u);
  const auto &t = cg.factorization[1].succ;
  EXPECT_EQ(t[0], 3u);  // e*t = t
  EXPECT_EQ(t[3], 0u);  // H = {e, t} is a 2-cycle
  std::vector<Vertex> cycle{1};
  for (Vertex x = t[1]; x != 1; x = t[x])
    cycle.push_back(x);
  EXPECT_EQ(cycle, (std::vector<Vertex>{1, 5, 4, 2}));  // 01 12 11 02
}

TEST(Cayley, Example2ColumnsGiveTheKautzDigraph) {
  auto g = generator_digraph(example2_table());
  auto kautz = cayley_graph(kautz_table()).graph;
  EXPECT_TRUE(find_isomorphism(g, kautz).has_value());
}

TEST(Cayley, UncheckedTableMustBeRegular) {
  GroupoidTable t{{1}, {{1}, {2}, {1}}, true, {}};
  EXPECT_THROW(generator_digraph(t), DigraphError);
}

TEST(FromFactorization, ThreeCycleGivesZ3) {
  auto g = Digraph::validate(3, oracle::cycle(3));
  auto fg = groupoid_from_factorization(Factorization(g, {OneFactor{{1, 2, 0}}}), 0);
  EXPECT_EQ(fg.groupoid, z3());
}

TEST(FromFactorization, KautzRecoversExample1Columns) {
  auto f = cayley_graph(kautz_table()).factorization;
  auto fg = groupoid_from_factorization(f, 0);
  EXPECT_EQ(fg.groupoid, kautz_table());
}

TEST(FromFactorization, AlegreRoundTrip) {
  auto f = alegre_graph();
  auto fg = groupoid_from_factorization(f, 0);
  EXPECT_EQ(fg.groupoid.order(), 25u);
  auto back = cayley_graph(fg.groupoid);
  EXPECT_EQ(back.graph, f.host());
  EXPECT_EQ(back.factorization.factors(), f.factors());
}

TEST(FromFactorization, OtherRootSwapsWithZero) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    auto f = random_factorization(3 + rng() % 6, 1 + rng() % 3, rng);
    Vertex root = static_cast<Vertex>(rng() % f.host().order());
    auto fg = groupoid_from_factorization(f, root);
    EXPECT_EQ(fg.vertex_of(0), root);
    auto back = cayley_graph(fg.groupoid);
    for (std::size_t k = 0; k < f.size(); ++k)
      for (Vertex u = 0; u < f.host().order(); ++u)
        EXPECT_EQ(fg.vertex_of(back.factorization.step(u, k)), f.step(fg.vertex_of(u), k));
  }
}

TEST(FromFactorization, RandomRoundTripIsEdgeIdentical) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    auto f = random_factorization(2 + rng() % 9, 1 + rng() % 4, rng);
    auto back = cayley_graph(groupoid_from_factorization(f, 0).groupoid);
    EXPECT_EQ(back.graph, f.host());
    EXPECT_EQ(back.factorization.factors(), f.factors());
  }
}

TEST(HoffmanSingleton, TableFailsRightCancellation) {
  auto r = check_axioms(hoffman_singleton_table());
  EXPECT_TRUE(r.axiom1.pass);
  EXPECT_TRUE(r.axiom2.pass);
  EXPECT_FALSE(r.axiom3.pass);
  EXPECT_THROW(PartialGroupoid{hoffman_singleton_table()}, GroupoidError);
}

TEST(HoffmanSingleton, GroupoidFromSpanningWitnessCancels) {
  auto g = hoffman_singleton_graph();
  auto search = find_spanning_factorization(g);
  ASSERT_EQ(search.verdict, Verdict::Found);
  auto fg = groupoid_from_factorization(search.witness->factorization, 0);
  EXPECT_EQ(cayley_graph(fg.groupoid).graph, g);
  auto ext = canonical_extension(fg.groupoid, fg.labeling.labels);
  EXPECT_TRUE(has_left_cancellation(ext));
}

TEST(VtCheck, DirectedCycle) {
  auto r = vt_check_via_groupoid(Digraph::validate(5, oracle::cycle(5)));
  EXPECT_EQ(r.verdict, Verdict::Found);
}

TEST(VtCheck, KautzFound) {
  auto g = cayley_graph(kautz_table()).graph;
  auto r = vt_check_via_groupoid(g);
  EXPECT_EQ(r.verdict, Verdict::Found);
  EXPECT_EQ(is_vertex_transitive(g).verdict, Verdict::Found);
  for (const auto &m : r.generators)
    EXPECT_TRUE(check_map_is_automorphism(g, m));
  EXPECT_EQ(orbits(6, r.generators).size(), 1u);
}

TEST(VtCheck, LopsidedGraphNotFound) {
  auto edges = oracle::lopsided_six();
  ASSERT_FALSE(oracle::vertex_transitive(6, edges));
  auto r = vt_check_via_groupoid(Digraph::validate(6, edges));
  EXPECT_EQ(r.verdict, Verdict::NotFound);
  // A cancelling labelling exists; only the automorphism check rejects it.
  ASSERT_TRUE(r.witness);
  EXPECT_TRUE(has_left_cancellation(
      canonical_extension(r.witness->groupoid, r.witness->labeling.labels)));
}

TEST(VtCheck, BreadthFirstLabelsOnlyAreNotConclusive) {
  auto edges = oracle::lopsided_six();
  auto r = vt_check_via_groupoid(Digraph::validate(6, edges), {.tree_budget = 0});
  EXPECT_NE(r.verdict, Verdict::Found);
}

TEST(VtCheck, AgreesWithBruteForceOnSmallCayleyDigraphs) {
  for (auto [n, edges] : oracle::small_cayley_digraphs()) {
    auto r = vt_check_via_groupoid(Digraph::validate(n, edges));
    EXPECT_EQ(r.verdict, Verdict::Found) << "n=" << n;
  }
}

TEST(VtCheck, AgreesWithBruteForceOnRandomDigraphs) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 3 + rng() % 4, d = 1 + rng() % 2;
    auto perms = oracle::random_regular_perms(n, d, rng);
    auto edges = oracle::edges_of(perms);
    auto r = vt_check_via_groupoid(Digraph::validate(n, edges));
    EXPECT_EQ(r.verdict == Verdict::Found, oracle::vertex_transitive(n, edges));
    EXPECT_NE(r.verdict, Verdict::Inconclusive);
  }
}

TEST(VtCheck, NeighbourOrbitsOfPetersenLikeGraph) {
  // Undirected 5-cycle: the stabilizer of 0 swaps its two neighbours.
  auto g = Digraph::validate(5, oracle::both_ways(oracle::cycle(5)));
  auto r = vt_check_via_groupoid(g);
  ASSERT_EQ(r.verdict, Verdict::Found);
  ASSERT_EQ(r.neighbour_orbits.size(), 1u);
  EXPECT_EQ(r.neighbour_orbits[0].size(), 2u);
  EXPECT_EQ(r.orbit_subgraph_invariant, (std::vector<bool>{true}));
}

TEST(VtCheck, BudgetGivesInconclusive) {
  auto g = hoffman_singleton_graph();
  auto r = vt_check_via_groupoid(g, {.max_factorizations = 1, .node_budget = 1000,
                                     .stabilizer_limit = 10});
  EXPECT_EQ(r.verdict, Verdict::Inconclusive);
}

TEST(Csv, PartialRoundTrip) {
  std::stringstream ss;
  write_groupoid_csv(ss, kautz_table().table());
  auto t = read_groupoid_csv(ss);
  EXPECT_TRUE(t.partial);
  EXPECT_EQ(PartialGroupoid(t), kautz_table());
  EXPECT_EQ(t.labels, kautz_table().table().labels);
}

TEST(Csv, FullRoundTrip) {
  std::stringstream ss;
  write_groupoid_csv(ss, example2_table());
  auto t = read_groupoid_csv(ss);
  EXPECT_FALSE(t.partial);
  EXPECT_EQ(t.rows, example2_table().rows);
  EXPECT_EQ(t.gen_ids, example2_table().gen_ids);
}

TEST(Csv, UnknownLabelReportsPosition) {
  std::istringstream in("*,1\n0,1\n1,7\n");
  try {
    read_groupoid_csv(in);
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 3u);
  }
}
