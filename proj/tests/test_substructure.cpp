#include <gtest/gtest.h>

#include "ea/errors.hpp"
#include "ea/order.hpp"
#include "ea/substructure.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace ea;
using testing_support::mo2;

namespace {

std::vector<int> as_ints(const ElementSubset& s) {
  std::vector<int> out;
  for (Element e : s.sorted()) out.push_back(e);
  return out;
}

}  // namespace

TEST(Truth, KleeneTables) {
  EXPECT_EQ(truth_and(Truth::True, Truth::Inconclusive), Truth::Inconclusive);
  EXPECT_EQ(truth_and(Truth::False, Truth::Inconclusive), Truth::False);
  EXPECT_EQ(truth_or(Truth::True, Truth::Inconclusive), Truth::True);
  EXPECT_EQ(truth_implies(Truth::False, Truth::Inconclusive), Truth::True);
  EXPECT_EQ(truth_iff(Truth::True, Truth::False), Truth::False);
  EXPECT_EQ(truth_iff(Truth::Inconclusive, Truth::False), Truth::Inconclusive);
  EXPECT_STREQ(truth_name(Truth::Inconclusive), "inconclusive");
}

TEST(Sharp, MatchesOracleAndFixtures) {
  for (const auto& m : testing_support::corpus()) {
    const auto cache = build_order_cache(m);
    EXPECT_EQ(as_ints(sharp_elements(m, cache)), oracle::sharp(oracle::table_of(m))) << m.model_id();
  }
  for (std::size_t k = 2; k <= 8; ++k) {
    const auto m = chain(k);
    EXPECT_EQ(sharp_elements(m, build_order_cache(m)).sorted(), (std::vector<Element>{0, static_cast<Element>(k)}));
  }
  const auto p = build_recipe("prod(chain:2,chain:2)");
  EXPECT_EQ(sharp_elements(p, build_order_cache(p)).count(), 4u);
}

TEST(Center, MatchesPrincipalElementOracle) {
  for (const auto& m : testing_support::corpus()) {
    if (m.size() > 32) continue;
    const auto cache = build_order_cache(m);
    const auto c = center(m, cache);
    EXPECT_EQ(as_ints(c), oracle::center(oracle::table_of(m))) << m.model_id();
    EXPECT_TRUE(is_subset(c.members, sharp_elements(m, cache).members));
  }
  const auto m = mo2();
  EXPECT_EQ(center(m, build_order_cache(m)).sorted(), (std::vector<Element>{0, 5}));
}

TEST(Compatibility, MatchesDecompositionOracle) {
  for (const auto& m : testing_support::corpus()) {
    if (m.size() > 12) continue;
    const auto cache = build_order_cache(m);
    if (!cache.is_lattice) {
      EXPECT_THROW(compatibility_graph(m, cache), NotALattice);
      continue;
    }
    const auto t = oracle::table_of(m);
    const auto g = compatibility_graph(m, cache);
    for (int x = 0; x < static_cast<int>(m.size()); ++x) {
      for (int y = 0; y < static_cast<int>(m.size()); ++y) {
        EXPECT_EQ(g.adjacent(static_cast<Element>(x), static_cast<Element>(y)), oracle::compatible(t, x, y));
      }
    }
  }
}

TEST(Blocks, MatchNaiveMaximalSubsets) {
  std::size_t compared = 0;
  for (const auto& m : testing_support::corpus()) {
    const auto cache = build_order_cache(m);
    if (m.size() > 12 || !cache.is_lattice) continue;
    std::vector<std::vector<int>> got;
    for (const auto& b : blocks(m, cache)) got.push_back(as_ints(b));
    EXPECT_EQ(got, oracle::blocks(oracle::table_of(m))) << m.model_id();
    ++compared;
  }
  EXPECT_GT(compared, 20u);
}

TEST(Blocks, Fixtures) {
  const auto m = mo2();
  const auto cache = build_order_cache(m);
  const auto bs = blocks(m, cache);
  ASSERT_EQ(bs.size(), 2u);
  for (const auto& b : bs) EXPECT_EQ(b.count(), 4u);
  EXPECT_EQ(compatibility_center(m, cache).sorted(), (std::vector<Element>{0, 5}));
  for (std::size_t k = 1; k <= 8; ++k) {
    const auto c = chain(k);
    EXPECT_EQ(blocks(c, build_order_cache(c)).size(), 1u);
  }
  for (std::size_t c = 2; c <= 4; ++c) {
    std::string recipe = "hsum(boolean:2";
    for (std::size_t i = 1; i < c; ++i) recipe += ",boolean:2";
    const auto h = build_recipe(recipe + ")");
    EXPECT_EQ(blocks(h, build_order_cache(h)).size(), c);
  }
  const auto p = build_recipe("prod(chain:2,chain:2,chain:2)");
  EXPECT_EQ(p.size(), 27u);
  EXPECT_EQ(blocks(p, build_order_cache(p)).size(), 1u);
}

TEST(MaximalCliques, SmallGraph) {
  // Path 0-1-2 plus isolated 3.
  std::vector<ElementSet> adj(4);
  adj[0] = set_of({0, 1});
  adj[1] = set_of({0, 1, 2});
  adj[2] = set_of({1, 2});
  adj[3] = set_of({3});
  const auto cliques = maximal_cliques(adj, 4);
  ASSERT_EQ(cliques.size(), 3u);
  EXPECT_EQ(cliques[0], set_of({0, 1}));
  EXPECT_EQ(cliques[1], set_of({1, 2}));
  EXPECT_EQ(cliques[2], set_of({3}));
}

TEST(SubEffectAlgebra, Checks) {
  const auto m = boolean(2);
  EXPECT_TRUE(is_sub_effect_algebra(m, make_subset(m, std::vector<Element>{0, 3})));
  EXPECT_TRUE(is_sub_effect_algebra(m, make_subset(m, std::vector<Element>{0, 1, 2, 3})));
  EXPECT_FALSE(is_sub_effect_algebra(m, make_subset(m, std::vector<Element>{0, 1, 3})));
  EXPECT_FALSE(is_sub_effect_algebra(m, make_subset(m, std::vector<Element>{1, 2, 3})));
}

TEST(Bifull, Fixtures) {
  const auto p = build_recipe("prod(chain:2,chain:2)");
  const auto cache = build_order_cache(p);
  const auto s = sharp_elements(p, cache);
  const auto r = is_bifull(p, cache, s);
  EXPECT_EQ(r.verdict, Truth::True);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(r.subsets_checked, 16u);
  const auto trivial = make_subset(p, std::vector<Element>{0, 8});
  EXPECT_EQ(is_bifull(p, cache, trivial).verdict, Truth::True);
  EXPECT_THROW(is_bifull(p, cache, make_subset(p, std::vector<Element>{0, 1, 8})), NotSubEffectAlgebra);
}

TEST(Bifull, SampledAboveCap) {
  const auto m = build_recipe("hsum(boolean:2,boolean:2,boolean:2)");
  const auto cache = build_order_cache(m);
  const auto s = sharp_elements(m, cache);
  SubsetCheckOptions opts;
  opts.subset_cap = 4;
  opts.samples = 64;
  opts.seed = 7;
  const auto r = is_bifull(m, cache, s, opts);
  EXPECT_FALSE(r.exhaustive);
  EXPECT_EQ(r.verdict, Truth::Inconclusive);
  EXPECT_EQ(r.subsets_checked, 64u);
}

TEST(Bifull, ImpliesFullOnCorpus) {
  for (const auto& m : testing_support::corpus()) {
    const auto cache = build_order_cache(m);
    const auto s = sharp_elements(m, cache);
    if (!is_sub_effect_algebra(m, s) || s.count() > 16) continue;
    const auto bifull = is_bifull(m, cache, s);
    const auto full = is_full(m, cache, s);
    EXPECT_EQ(truth_implies(bifull.verdict, full.verdict), Truth::True);
  }
}

TEST(Subposets, LatticeProperties) {
  const auto m = mo2();
  const auto cache = build_order_cache(m);
  const auto all = full_set(m.size());
  EXPECT_TRUE(is_lattice_subposet(cache, all));
  EXPECT_TRUE(is_complete_subposet(cache, all));
  EXPECT_TRUE(is_orthomodular_subposet(m, cache, all));
  EXPECT_FALSE(is_boolean_subposet(m, cache, all));
  EXPECT_TRUE(is_boolean_subposet(m, cache, set_of({0, 5})));
  EXPECT_EQ(atoms_within(cache, all).size(), 4u);
  EXPECT_TRUE(is_atomic_subposet(cache, all));
  const auto c = chain(4);
  const auto cc = build_order_cache(c);
  EXPECT_FALSE(is_orthomodular_subposet(c, cc, full_set(5)));
  EXPECT_TRUE(is_boolean_subposet(c, cc, set_of({0, 4})));
}

TEST(JoinInSub, Mismatch) {
  const auto m = boolean(2);
  const auto cache = build_order_cache(m);
  const auto g = make_subset(m, std::vector<Element>{0, 3});
  EXPECT_THROW(join_in_sub(cache, g, make_subset(m, std::vector<Element>{1})), SubsetMismatch);
  EXPECT_EQ(join_in_sub(cache, g, make_subset(m, std::vector<Element>{0})), 0);
  EXPECT_EQ(meet_in_sub(cache, g, make_subset(m, std::vector<Element>{3})), 3);
}
