#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "oracles.hpp"
#include "qspectra/bounds.hpp"
#include "qspectra/families.hpp"
#include "qspectra/verify.hpp"

using namespace qspectra;

namespace {

BoundResult eval(const Graph& g, const char* id) { return evaluate_bound(g, bound_from_string(id)); }

Graph rook4() { return cartesian_product(complete_graph(4), complete_graph(4)); }

void expect_sandwich(const GraphAnalysis& a) {
  for (const BoundResult& b : all_bounds(a)) {
    if (!b.applicable) continue;
    ASSERT_FALSE(b.violated(a.qe)) << to_graph6(a.g) << " " << to_string(b.id) << " gap " << b.gap;
    ASSERT_GE(b.gap, -1e-6 * std::max(1.0, a.qe));
  }
}

bool degrees_at_most_one(const Graph& g) {
  for (auto d : g.degrees())
    if (d > 1) return false;
  return true;
}

// Mismatches between a tight bound and its stated extremal family that are
// known gaps in the stated characterizations rather than evaluation bugs.
bool documented_mismatch(const GraphAnalysis& a, const BoundResult& b) {
  const std::string_view id = to_string(b.id);
  const bool tight = b.equality.tight;
  if (tight && a.shape.regular && (id == "L-GAN1" || id == "L-GAN4" || id == "L-GAN5")) return true;
  if (tight && id == "L-THM1" && degrees_at_most_one(a.g)) return true;
  if (!tight && id == "L-GAN4") {
    return a.g.order() <= 4 && (is_complete_bipartite(a.g, 1, 2) || is_complete_bipartite(a.g, 2, 2));
  }
  return false;
}

}  // namespace

TEST(Catalog, IdsRoundTrip) {
  std::set<std::string_view> seen;
  for (BoundId id : kAllBounds) {
    EXPECT_EQ(bound_from_string(to_string(id)), id);
    EXPECT_TRUE(seen.insert(to_string(id)).second);
  }
  EXPECT_EQ(seen.size(), 18u);
  EXPECT_EQ(to_string(kAllBounds.front()), "L-GAN1");
  EXPECT_EQ(to_string(kAllBounds.back()), "U-COR7");
}

TEST(Catalog, UnknownId) {
  EXPECT_THROW(bound_from_string("L-GAN9"), UnknownBoundError);
  EXPECT_THROW(bound_from_string(""), UnknownBoundError);
}

TEST(Catalog, AllBoundsInOrder) {
  const auto results = all_bounds(complete_graph(4));
  ASSERT_EQ(results.size(), kAllBounds.size());
  for (std::size_t i = 0; i < results.size(); ++i) EXPECT_EQ(results[i].id, kAllBounds[i]);
}

TEST(Catalog, Directions) {
  const auto results = all_bounds(build_family(FamilySpec::star(5)));
  for (const auto& r : results) {
    const bool upper = to_string(r.id).front() == 'U';
    EXPECT_EQ(r.direction, upper ? Direction::Upper : Direction::Lower);
  }
}

TEST(Examples, StarLGan1) {
  const BoundResult r = eval(build_family(FamilySpec::star(4)), "L-GAN1");
  ASSERT_TRUE(r.applicable);
  EXPECT_NEAR(r.value, 5.0, 1e-12);
  EXPECT_NEAR(r.gap, 0.0, 1e-9);
  EXPECT_TRUE(r.equality.tight);
  EXPECT_EQ(r.equality.condition_met, std::optional<bool>(true));
  EXPECT_TRUE(r.equality.consistent);
}

TEST(Examples, TriangleLCor4) {
  const BoundResult r = eval(complete_graph(3), "L-COR4");
  ASSERT_TRUE(r.applicable);
  EXPECT_NEAR(r.value, 4.0, 1e-9);
  EXPECT_TRUE(r.equality.tight);
  EXPECT_EQ(r.equality.condition_met, std::optional<bool>(true));
}

TEST(Examples, C4LThm2) {
  const BoundResult r = eval(build_family(FamilySpec::cycle(4)), "L-THM2");
  ASSERT_TRUE(r.applicable);
  EXPECT_NEAR(r.value, 4.0, 1e-9);
  EXPECT_TRUE(r.equality.tight);
  EXPECT_EQ(r.equality.condition_met, std::optional<bool>(true));
}

TEST(Examples, CrownLThm1) {
  const BoundResult r = eval(build_family(FamilySpec::crown(3)), "L-THM1");
  ASSERT_TRUE(r.applicable);
  EXPECT_NEAR(r.value, 12.0, 1e-9);
  EXPECT_TRUE(r.equality.tight);
  EXPECT_TRUE(r.equality.consistent);
}

TEST(Examples, K4UThm3IsTight) {
  // q(K_4) = {6,2,2,2}, M1 = 36: 3 + sqrt(3 * (12 - 9)) = 6 = QE.
  const BoundResult r = eval(complete_graph(4), "U-THM3");
  ASSERT_TRUE(r.applicable);
  EXPECT_EQ(r.case_label, "n<=8m^2/(2m+M1)");
  EXPECT_EQ(r.strictness, Strictness::NonStrict);
  EXPECT_NEAR(r.value, 6.0, 1e-9);
  EXPECT_TRUE(r.equality.tight);
  EXPECT_EQ(r.equality.condition_met, std::optional<bool>(true));
}

TEST(Examples, MatchingUThm3) {
  const BoundResult r = eval(build_family(FamilySpec::matching(3)), "U-THM3");
  ASSERT_TRUE(r.applicable);
  EXPECT_NEAR(r.value, 6.0, 1e-9);
  EXPECT_TRUE(r.equality.tight);
  EXPECT_EQ(r.equality.condition_met, std::optional<bool>(true));
}

TEST(Examples, RookUThm3) {
  const GraphAnalysis a(rook4());
  EXPECT_NEAR(a.qe, 36.0, 1e-8);
  const BoundResult r = evaluate_bound(a, BoundId::UpperThm3);
  EXPECT_NEAR(r.value, 36.0, 1e-8);
  EXPECT_TRUE(r.equality.tight);
  EXPECT_EQ(r.equality.condition_met, std::optional<bool>(true));
  EXPECT_TRUE(evaluate_bound(a, BoundId::UpperCor7).equality.tight);
}

TEST(Applicability, EdgelessGraph) {
  for (const BoundResult& r : all_bounds(empty_graph(4))) {
    if (r.id == BoundId::UpperAbr1) {
      EXPECT_TRUE(r.applicable);
      EXPECT_EQ(r.value, 0.0);
    } else {
      EXPECT_FALSE(r.applicable) << to_string(r.id);
      EXPECT_FALSE(r.reason.empty());
    }
  }
}

TEST(Applicability, DisconnectedGraph) {
  const Graph g = disjoint_union(complete_graph(3), build_family(FamilySpec::path(3)));
  for (const char* id : {"L-GAN1", "L-GAN5", "L-COR4", "L-COR5", "L-THM2", "U-ABR2", "U-GAN", "U-COR6"}) {
    const BoundResult r = eval(g, id);
    EXPECT_FALSE(r.applicable) << id;
    EXPECT_NE(r.reason.find("connected"), std::string::npos) << id;
  }
  EXPECT_TRUE(eval(g, "U-ABR1").applicable);
  EXPECT_TRUE(eval(g, "U-THM3").applicable);
}

TEST(Applicability, GammaHypotheses) {
  // C_4 has a zero gamma; K_3 does not.
  const Graph c4 = build_family(FamilySpec::cycle(4));
  EXPECT_FALSE(eval(c4, "L-THM1").applicable);
  EXPECT_TRUE(eval(c4, "L-COR2").applicable);
  EXPECT_EQ(eval(c4, "L-COR3").case_label, "gamma_n=0");
  const Graph k3 = complete_graph(3);
  EXPECT_TRUE(eval(k3, "L-THM1").applicable);
  EXPECT_FALSE(eval(k3, "L-THM2").applicable);
  EXPECT_EQ(eval(k3, "L-COR3").case_label, "gamma_n>0");
  EXPECT_FALSE(eval(build_family(FamilySpec::star(4)), "L-COR3").applicable);
  EXPECT_FALSE(eval(complete_graph(4), "U-COR6").applicable);
  EXPECT_FALSE(eval(build_family(FamilySpec::star(4)), "U-COR7").applicable);
}

TEST(Applicability, StrictnessAsStated) {
  const Graph p4 = build_family(FamilySpec::path(4));
  EXPECT_EQ(eval(p4, "U-COR6").strictness, Strictness::Strict);
  EXPECT_EQ(eval(p4, "L-GAN1").strictness, Strictness::NonStrict);
  const BoundResult cor5 = eval(complete_graph(5), "L-COR5");
  if (cor5.applicable) {
    EXPECT_EQ(cor5.strictness, Strictness::Strict);
  }
}

TEST(CParameter, ExactAndNonNegative) {
  for (std::size_t n = 1; n <= 60; ++n) {
    for (std::size_t m = 0; m <= n * (n - 1) / 2; ++m) {
      const CParameter c = c_parameter(n, m);
      const Int128 N = static_cast<Int128>(n), M = static_cast<Int128>(m);
      ASSERT_EQ(c.c, M * (N * N * N - N * N - 2 * M * N + 4 * M));
      ASSERT_GE(c.c, 0) << "n=" << n << " m=" << m;
      EXPECT_NEAR(c.sqrt_c_over_2n * 2.0 * static_cast<double>(n), c.sqrt_c, 1e-9 * std::max(1.0, c.sqrt_c));
    }
  }
  EXPECT_EQ(int128_to_string(c_parameter(3, 3).c), "36");
  EXPECT_EQ(int128_to_string(-Int128{120}), "-120");
  EXPECT_EQ(int128_to_string(0), "0");
}

TEST(Properties, UThm3FirstCaseOnRegularGraphs) {
  for (std::size_t n = 2; n <= 6; ++n) {
    oracle::for_each_labeled_graph(n, [](const Graph& g) {
      if (g.size() == 0 || !structure(g).regular) return;
      EXPECT_EQ(eval(g, "U-THM3").case_label, "n<=8m^2/(2m+M1)") << to_graph6(g);
    });
  }
}

TEST(Properties, LCor3AgreesWithLThm1) {
  std::size_t compared = 0;
  const Graph extra[] = {build_family(FamilySpec::prism(5)), build_family(FamilySpec::cycle(7)),
                         rook4(), complete_graph(6)};
  auto check = [&](const Graph& g) {
    const GraphAnalysis a(g);
    const BoundResult cor3 = evaluate_bound(a, BoundId::LowerCor3);
    const BoundResult thm1 = evaluate_bound(a, BoundId::LowerThm1);
    if (!cor3.applicable || !thm1.applicable) return;
    ++compared;
    EXPECT_NEAR(cor3.value, thm1.value, 1e-9 * std::max(1.0, thm1.value)) << to_graph6(g);
  };
  for (const Graph& g : extra) check(g);
  for (std::size_t n = 3; n <= 6; ++n) oracle::for_each_labeled_graph(n, check);
  EXPECT_GT(compared, 20u);
}

TEST(Properties, SandwichAllGraphsUpToSix) {
  for (std::size_t n = 1; n <= 6; ++n)
    oracle::for_each_labeled_graph(n, [](const Graph& g) { expect_sandwich(GraphAnalysis(g)); });
}

TEST(Properties, SandwichRandomGraphs) {
  for (const Graph& g : random_graphs(500, 2024, 7, 12)) expect_sandwich(GraphAnalysis(g));
}

TEST(Properties, QeAgreesWithOracle) {
  for (const Graph& g : random_graphs(100, 99, 1, 14)) EXPECT_NEAR(GraphAnalysis(g).qe, oracle::qe(g), 1e-8);
}

TEST(Equality, TightnessMatchesStatedFamiliesUpToSix) {
  std::size_t documented = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    oracle::for_each_labeled_graph(n, [&](const Graph& g) {
      const GraphAnalysis a(g);
      for (const BoundResult& b : all_bounds(a)) {
        if (!b.applicable || b.equality.consistent || !b.equality.condition_met) continue;
        if (documented_mismatch(a, b)) {
          ++documented;
          continue;
        }
        ADD_FAILURE() << to_graph6(g) << " " << to_string(b.id) << " tight=" << b.equality.tight
                      << " condition_met=" << *b.equality.condition_met;
      }
    });
  }
  EXPECT_GT(documented, 0u);
}

TEST(Equality, StarsMeetGan1To3) {
  for (std::size_t n = 4; n <= 10; ++n) {
    const GraphAnalysis a(build_family(FamilySpec::star(n)));
    for (BoundId id : {BoundId::LowerGan1, BoundId::LowerGan2, BoundId::LowerGan3}) {
      const BoundResult r = evaluate_bound(a, id);
      EXPECT_NEAR(r.value, a.qe, 1e-8) << to_string(id) << " n=" << n;
      EXPECT_TRUE(r.equality.tight);
      EXPECT_TRUE(r.equality.consistent);
    }
  }
}

TEST(Equality, BalancedCompleteBipartiteMeetsThm2AndCor2) {
  for (std::size_t n : {4, 6, 8, 10}) {
    const GraphAnalysis a(build_family(FamilySpec::complete_bipartite(n / 2, n / 2)));
    EXPECT_NEAR(a.qe, static_cast<double>(n), 1e-9);
    for (BoundId id : {BoundId::LowerThm2, BoundId::LowerCor2}) {
      const BoundResult r = evaluate_bound(a, id);
      ASSERT_TRUE(r.applicable);
      EXPECT_TRUE(r.equality.tight) << to_string(id) << " n=" << n;
      EXPECT_EQ(r.equality.condition_met, std::optional<bool>(true));
    }
  }
}

TEST(Equality, LThm1Families) {
  std::vector<Graph> graphs;
  for (std::size_t k = 1; k <= 5; ++k) graphs.push_back(build_family(FamilySpec::matching(k)));
  for (std::size_t r = 2; r <= 4; ++r) {
    for (std::size_t g = 0; g <= 2; ++g) {
      for (std::size_t h = 0; g + h <= 2; ++h) {
        if (g + h == 0) continue;
        std::vector<Graph> parts(g, complete_graph(r + 1));
        for (std::size_t i = 0; i < h; ++i) parts.push_back(build_family(FamilySpec::crown(r)));
        graphs.push_back(disjoint_union(parts));
      }
    }
  }
  for (const Graph& g : graphs) {
    const BoundResult r = evaluate_bound(g, BoundId::LowerThm1);
    ASSERT_TRUE(r.applicable) << to_graph6(g);
    EXPECT_TRUE(r.equality.tight) << to_graph6(g);
    EXPECT_EQ(r.equality.condition_met, std::optional<bool>(true)) << to_graph6(g);
  }
}

TEST(Equality, UThm3AndUCor7Families) {
  std::vector<Graph> graphs{rook4()};
  for (std::size_t n = 2; n <= 8; ++n) graphs.push_back(complete_graph(n));
  for (std::size_t k = 1; k <= 5; ++k) graphs.push_back(build_family(FamilySpec::matching(k)));
  for (const Graph& g : graphs) {
    const GraphAnalysis a(g);
    for (BoundId id : {BoundId::UpperThm3, BoundId::UpperCor7}) {
      const BoundResult r = evaluate_bound(a, id);
      ASSERT_TRUE(r.applicable);
      EXPECT_TRUE(r.equality.tight) << to_string(id) << " " << to_graph6(g);
      EXPECT_TRUE(r.equality.consistent);
    }
  }
}

TEST(Equality, TriangleOnlyMeetsCor4) {
  for (std::size_t n = 4; n <= 8; ++n) {
    const BoundResult r = eval(complete_graph(n), "L-COR4");
    if (r.applicable) {
      EXPECT_FALSE(r.equality.tight);
    }
  }
}

TEST(VertexPairs, DeterministicPairAndRange) {
  // Degrees 3,3,2,2,2: two max-degree vertices that are not adjacent.
  const Graph g = graph_from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  const BoundResult r = eval(g, "L-GAN4");
  ASSERT_TRUE(r.applicable);
  ASSERT_TRUE(r.selected_pair.has_value());
  EXPECT_EQ(*r.selected_pair, (VertexPair{0, 1}));
  EXPECT_EQ(r.case_label, "v1!~v2");
  ASSERT_TRUE(r.pair_min && r.pair_max);
  EXPECT_LE(*r.pair_min, r.value + 1e-12);
  EXPECT_GE(*r.pair_max, r.value - 1e-12);
}

TEST(VertexPairs, RangeCoversEveryChoice) {
  for (const Graph& g : random_graphs(200, 7, 3, 10)) {
    const GraphAnalysis a(g);
    for (BoundId id : {BoundId::LowerGan4, BoundId::LowerGan5}) {
      const BoundResult r = evaluate_bound(a, id);
      if (!r.applicable || !r.pair_min) continue;
      if (id == BoundId::LowerGan5 && r.case_label == "bipartite") continue;
      EXPECT_LE(*r.pair_min, r.value + 1e-9);
      EXPECT_GE(*r.pair_max, r.value - 1e-9);
    }
  }
}

TEST(Variants, Gan5BipartiteKeepsGeneralReading) {
  const BoundResult r = eval(build_family(FamilySpec::cycle(6)), "L-GAN5");
  ASSERT_TRUE(r.applicable);
  EXPECT_EQ(r.case_label, "bipartite");
  EXPECT_NEAR(r.value, 8.0 * 6 / 6 - 4.0, 1e-12);
  ASSERT_FALSE(r.variants.empty());
  EXPECT_EQ(r.variants.front().first, "general");
}

TEST(Determinism, SameInputSameResults) {
  const Graph g = random_graphs(1, 5, 12, 12).front();
  const auto a = all_bounds(g);
  const auto b = all_bounds(g);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].applicable, b[i].applicable);
    EXPECT_EQ(a[i].value, b[i].value);
    EXPECT_EQ(a[i].gap, b[i].gap);
  }
}
