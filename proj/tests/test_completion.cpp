#include <gtest/gtest.h>

#include "ea/canonical.hpp"
#include "ea/completion.hpp"
#include "ea/enumerate.hpp"
#include "ea/errors.hpp"
#include "ea/order.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace ea;
using testing_support::mo2;

namespace {

// Number of integer partitions of 0..k.
std::uint64_t partitions_up_to(std::size_t k) {
  std::vector<std::uint64_t> p(k + 1, 0);
  p[0] = 1;
  for (std::size_t part = 1; part <= k; ++part) {
    for (std::size_t s = part; s <= k; ++s) p[s] += p[s - part];
  }
  std::uint64_t total = 0;
  for (auto v : p) total += v;
  return total;
}

}  // namespace

TEST(Domination, ChainsAndMo2) {
  for (std::size_t k = 1; k <= 8; ++k) {
    const auto m = chain(k);
    const auto cache = build_order_cache(m);
    const auto r = is_sharply_dominating(m, cache);
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.witnesses.size(), m.size());
    EXPECT_TRUE(is_s_dominating(m, cache).holds);
    EXPECT_TRUE(is_centrally_dominating(m, cache).holds);
  }
  const auto m = mo2();
  const auto cache = build_order_cache(m);
  const auto sharp = sharp_elements(m, cache);
  const auto cover = sharp_cover(m, cache, sharp, 1);
  ASSERT_TRUE(cover);
  EXPECT_EQ(cover->cover, 1);
  EXPECT_EQ(cover->kind, DominationKind::SharpCover);
  // Every element of MO2 is sharp but only 0 and 1 are central.
  const auto central = center(m, cache);
  EXPECT_EQ(central_cover(m, cache, central, 1)->cover, 5);
  EXPECT_EQ(central_cover(m, cache, central, 0)->cover, 0);
}

TEST(Domination, CoverAndFloorAgreeOnCorpus) {
  for (const auto& m : testing_support::corpus()) {
    const auto cache = build_order_cache(m);
    const auto sharp = sharp_elements(m, cache);
    const auto r = is_sharply_dominating(m, cache);
    bool floors = true;
    for (std::size_t x = 0; x < m.size(); ++x) floors &= sharp_floor(m, cache, sharp, static_cast<Element>(x)).has_value();
    EXPECT_EQ(floors, r.holds);
  }
}

TEST(Families, ChainCountsArePartitions) {
  for (std::size_t k = 1; k <= 8; ++k) {
    const auto m = chain(k);
    const auto cache = build_order_cache(m);
    std::uint64_t seen = 0;
    const auto count = enumerate_orthogonal_families(m, cache, full_set(m.size()), kDefaultFamilyBudget,
                                                     [&](const OrthogonalFamily& f) {
                                                       EXPECT_TRUE(is_orthogonal(m, cache, f));
                                                       ++seen;
                                                       return true;
                                                     });
    EXPECT_EQ(count, partitions_up_to(k)) << k;
    EXPECT_EQ(seen, count);
  }
}

TEST(Families, BudgetIsEnforced) {
  const auto m = chain(3);
  const auto cache = build_order_cache(m);
  EXPECT_THROW(enumerate_orthogonal_families(m, cache, full_set(4), 3, [](const OrthogonalFamily&) { return true; }),
               BudgetExceeded);
  EXPECT_THROW(is_orthocomplete(m, cache, 3), BudgetExceeded);
}

TEST(Families, SumsAndOrthogonality) {
  const auto m = chain(4);
  const auto cache = build_order_cache(m);
  const std::vector<Element> two_a{1, 1};
  EXPECT_TRUE(is_orthogonal(m, two_a));
  EXPECT_EQ(family_sum(m, cache, two_a), 2);
  const std::vector<Element> too_much{3, 2};
  EXPECT_FALSE(is_orthogonal(m, too_much));
  EXPECT_EQ(family_sum(m, cache, too_much), kUndefined);
  EXPECT_EQ(family_sum(m, cache, std::vector<Element>{}), 0);
  OrthogonalFamily f;
  f.multiplicities = {{1, 2}, {2, 1}};
  EXPECT_EQ(f.total(), 3u);
  EXPECT_EQ(f.occurrences(), (std::vector<Element>{1, 1, 2}));
  EXPECT_EQ(family_sum(m, cache, f), 4);
}

TEST(Orthocomplete, EveryFiniteModel) {
  for (const auto& m : testing_support::corpus()) {
    const auto cache = build_order_cache(m);
    EXPECT_TRUE(is_orthocomplete(m, cache).holds);
    EXPECT_TRUE(is_sharply_orthocomplete(m, cache).holds);
    EXPECT_TRUE(is_centrally_orthocomplete(m, cache).holds);
  }
}

TEST(Orthocomplete, SharpVariantMatchesNaiveOracle) {
  std::size_t compared = 0;
  for (const auto& m : testing_support::corpus()) {
    if (m.size() > 8) continue;
    const auto cache = build_order_cache(m);
    EXPECT_EQ(is_sharply_orthocomplete(m, cache, ~std::uint64_t{0}).holds,
              oracle::sharply_orthocomplete(oracle::table_of(m)));
    ++compared;
  }
  EXPECT_GT(compared, 15u);
}

TEST(Orthocomplete, TrivialSharpSet) {
  const auto m = chain(5);
  const auto cache = build_order_cache(m);
  const auto r = is_sharply_orthocomplete(m, cache);
  EXPECT_TRUE(r.holds);
  // Sharp families are {} and {1}.
  EXPECT_EQ(r.families, 2u);
}

TEST(Completeness, LatticeEquivalence) {
  for (const auto& m : testing_support::corpus()) {
    const auto cache = build_order_cache(m);
    EXPECT_EQ(is_complete(m, cache), cache.is_lattice);
    EXPECT_EQ(compact_elements(m, cache).count(), m.size());
    EXPECT_TRUE(is_compactly_generated(m, cache));
  }
}

TEST(Domination, SeparatingExamplesAtSizeEight) {
  // Size 8 is the first size with models that are not S-dominating.
  std::size_t not_s_dominating = 0, not_sharply_dominating = 0;
  for (const auto& f : enumerate_models({8, true})) {
    const auto m = model_from_canonical(f);
    const auto cache = build_order_cache(m);
    const auto r = is_s_dominating(m, cache);
    not_s_dominating += !r.holds;
    not_sharply_dominating += !r.sharply_dominating;
    if (r.missing_meet) {
      const auto t = oracle::table_of(m);
      EXPECT_LT(oracle::meet(t, r.missing_meet->first, r.missing_meet->second), 0);
    }
    if (r.sharply_dominating && !r.holds) EXPECT_TRUE(r.missing_meet);
  }
  EXPECT_EQ(not_s_dominating, 2u);
  EXPECT_EQ(not_sharply_dominating, 1u);
  for (std::size_t n = 2; n <= 7; ++n) {
    for (const auto& f : enumerate_models({n, true})) {
      const auto m = model_from_canonical(f);
      EXPECT_TRUE(is_s_dominating(m, build_order_cache(m)).holds);
    }
  }
}
