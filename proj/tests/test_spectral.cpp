#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "qspectra/spectral.hpp"
#include "qspectra/verify.hpp"

using namespace qspectra;

namespace {

const FactCheck& find(const SpectralFactReport& r, SpectralFact f) {
  for (const auto& c : r.checks)
    if (c.fact == f) return c;
  throw std::logic_error("fact missing");
}

double sum(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

}  // namespace

TEST(Spectrum, CompleteGraphClosedForm) {
  for (std::size_t n = 2; n <= 20; ++n)
    EXPECT_LE(oracle::max_abs_diff(q_spectrum(complete_graph(n)).values, oracle::q_complete(n)), 1e-9);
}

TEST(Spectrum, CycleClosedForm) {
  for (std::size_t n = 3; n <= 30; ++n)
    EXPECT_LE(oracle::max_abs_diff(q_spectrum(build_family(FamilySpec::cycle(n))).values,
                                   oracle::q_cycle(n)),
              1e-9);
}

TEST(Spectrum, CompleteBipartiteClosedForm) {
  for (std::size_t a = 1; a <= 6; ++a)
    for (std::size_t b = 1; b <= 6; ++b)
      EXPECT_LE(oracle::max_abs_diff(
                    q_spectrum(build_family(FamilySpec::complete_bipartite(a, b))).values,
                    oracle::q_complete_bipartite(a, b)),
                1e-9);
}

TEST(Spectrum, CrownClosedForm) {
  for (std::size_t r = 1; r <= 8; ++r)
    EXPECT_LE(oracle::max_abs_diff(q_spectrum(build_family(FamilySpec::crown(r))).values,
                                   oracle::q_crown(r)),
              1e-9);
}

TEST(Spectrum, GroupsOfK4) {
  const Spectrum q = q_spectrum(complete_graph(4));
  ASSERT_EQ(q.distinct_count(), 2u);
  EXPECT_NEAR(q.groups[0].value, 6.0, 1e-12);
  EXPECT_EQ(q.groups[0].multiplicity, 1u);
  EXPECT_EQ(q.groups[1].multiplicity, 3u);
  EXPECT_EQ(q.multiplicity_near(2.0), 3u);
  EXPECT_EQ(q.zero_multiplicity(), 0u);
}

TEST(Spectrum, MatchesEigenOracle) {
  for (const Graph& g : random_graphs(100, 41, 1, 25)) {
    EXPECT_LE(oracle::max_abs_diff(q_spectrum(g).values, oracle::spectrum(g, oracle::Matrix::Q)), 1e-9);
    EXPECT_LE(oracle::max_abs_diff(l_spectrum(g).values, oracle::spectrum(g, oracle::Matrix::L)), 1e-9);
    EXPECT_LE(oracle::max_abs_diff(a_spectrum(g).values, oracle::spectrum(g, oracle::Matrix::A)), 1e-9);
  }
}

TEST(Spectrum, TraceIdentitiesAndPsd) {
  for (const Graph& g : random_graphs(200, 43, 1, 20)) {
    const DegreeStats s = degree_stats(g);
    const Spectrum q = q_spectrum(g);
    const Spectrum l = l_spectrum(g);
    const Spectrum a = a_spectrum(g);
    const double m = static_cast<double>(s.m);
    EXPECT_NEAR(sum(q.values), 2.0 * m, 1e-8);
    EXPECT_NEAR(sum(l.values), 2.0 * m, 1e-8);
    EXPECT_NEAR(sum(a.values), 0.0, 1e-8);
    double q2 = 0.0;
    for (double x : q.values) q2 += x * x;
    EXPECT_NEAR(q2, 2.0 * m + static_cast<double>(s.zagreb_m1), 1e-7 * std::max(1.0, q2));
    EXPECT_GE(q.smallest(), -1e-9);
    EXPECT_GE(l.smallest(), -1e-9);
    EXPECT_NEAR(l.smallest(), 0.0, 1e-9);
  }
}

TEST(Spectrum, BipartiteQAndLAgree) {
  for (const Graph& g : random_graphs(200, 47, 2, 14)) {
    if (!structure(g).bipartite()) continue;
    EXPECT_LE(oracle::max_abs_diff(q_spectrum(g).values, l_spectrum(g).values), 1e-9);
  }
}

TEST(Grouping, Basics) {
  const std::vector<double> v{5.0, 5.0 + 1e-9, 3.0, 1.0, 1.0};
  const std::vector<double> desc = oracle::descending(v);
  const auto groups = group_eigenvalues(desc, 1e-6);
  ASSERT_EQ(groups.size(), 3u);
  EXPECT_EQ(groups[0].multiplicity, 2u);
  EXPECT_EQ(groups[2].multiplicity, 2u);
  EXPECT_TRUE(multiset_equal(std::vector<double>{1.0, 2.0}, std::vector<double>{2.0, 1.0 + 1e-10}, 1e-9));
  EXPECT_FALSE(multiset_equal(std::vector<double>{1.0, 2.0}, std::vector<double>{2.0, 1.1}, 1e-9));
  EXPECT_FALSE(multiset_equal(std::vector<double>{1.0}, std::vector<double>{1.0, 1.0}, 1e-9));
}

TEST(Lemmas, C5) {
  const SpectralFactReport r = check_spectral_lemmas(build_family(FamilySpec::cycle(5)));
  EXPECT_TRUE(r.all_hold());
  EXPECT_TRUE(r.all_consistent());
  const FactCheck& radius = find(r, SpectralFact::SpectralRadiusLower);
  EXPECT_TRUE(radius.equality_observed);
  EXPECT_EQ(radius.equality_expected, std::optional<bool>(true));
  const FactCheck& zeros = find(r, SpectralFact::ZeroMultiplicity);
  EXPECT_EQ(zeros.lhs, 0.0);
  const FactCheck& smallest = find(r, SpectralFact::SmallestUpper);
  EXPECT_FALSE(smallest.equality_observed);
}

TEST(Lemmas, K4AttainsSmallestBound) {
  const SpectralFactReport r = check_spectral_lemmas(complete_graph(4));
  EXPECT_TRUE(r.all_hold());
  EXPECT_TRUE(r.all_consistent());
  const FactCheck& smallest = find(r, SpectralFact::SmallestUpper);
  EXPECT_TRUE(smallest.equality_observed);
  EXPECT_NEAR(smallest.lhs, 2.0, 1e-9);
  EXPECT_NEAR(smallest.rhs, 2.0, 1e-9);
}

TEST(Lemmas, ZeroMultiplicityCountsBipartiteComponents) {
  const Graph g = disjoint_union(build_family(FamilySpec::complete_bipartite(3, 3)),
                                 build_family(FamilySpec::cycle(6)));
  const SpectralFactReport r = check_spectral_lemmas(g);
  EXPECT_TRUE(r.all_hold());
  const FactCheck& zeros = find(r, SpectralFact::ZeroMultiplicity);
  EXPECT_EQ(zeros.lhs, 2.0);
  EXPECT_EQ(zeros.rhs, 2.0);
  EXPECT_FALSE(find(r, SpectralFact::SmallestUpper).applicable);
}

TEST(Lemmas, AllGraphsUpToSix) {
  for (std::size_t n = 1; n <= 6; ++n) {
    oracle::for_each_labeled_graph(n, [](const Graph& g) {
      const SpectralFactReport r = check_spectral_lemmas(g);
      ASSERT_TRUE(r.all_hold()) << to_graph6(g);
      ASSERT_TRUE(r.all_consistent()) << to_graph6(g);
    });
  }
}

TEST(ProductSpectrum, Examples) {
  const Graph k2 = complete_graph(2);
  const Graph c4 = build_family(FamilySpec::cycle(4));
  const Graph p3 = build_family(FamilySpec::path(3));
  for (MatrixKind kind : {MatrixKind::Adjacency, MatrixKind::Laplacian, MatrixKind::SignlessLaplacian}) {
    EXPECT_TRUE(product_spectrum_check(k2, k2, kind));
    EXPECT_TRUE(product_spectrum_check(c4, p3, kind));
    EXPECT_TRUE(product_spectrum_check(complete_graph(3), build_family(FamilySpec::star(4)), kind));
  }
}

TEST(ProductSpectrum, RandomPairs) {
  const auto left = random_graphs(30, 51, 1, 5);
  const auto right = random_graphs(30, 52, 1, 5);
  for (std::size_t i = 0; i < left.size(); ++i)
    EXPECT_TRUE(product_spectrum_check(left[i], right[i], MatrixKind::SignlessLaplacian));
}

TEST(MatrixKinds, Names) {
  EXPECT_FALSE(to_string(MatrixKind::Adjacency).empty());
  EXPECT_NE(to_string(MatrixKind::Laplacian), to_string(MatrixKind::SignlessLaplacian));
}
