#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "sfborel/monomial.hpp"

namespace sfborel {
namespace {

SquareFreeMonomial M(std::vector<Index> v) { return SquareFreeMonomial(std::move(v)); }

TEST(ParseMonomial, Lists) {
  EXPECT_EQ(parse_monomial("2,3,5,6,8,10"), M({2, 3, 5, 6, 8, 10}));
  EXPECT_EQ(parse_monomial(" 10, 2 ,3"), M({2, 3, 10}));
}

TEST(ParseMonomial, Ranges) {
  auto pi = parse_monomial("33215..104348");
  EXPECT_EQ(pi.degree(), 71134u);
  EXPECT_EQ(pi.at(1), 33215);
  EXPECT_EQ(pi.max_index(), 104348);
  EXPECT_EQ(parse_monomial("3..5,8..10"), M({3, 4, 5, 8, 9, 10}));
  EXPECT_EQ(parse_monomial("4..4"), M({4}));
}

TEST(ParseMonomial, Errors) {
  EXPECT_THROW(parse_monomial("3,3"), std::invalid_argument);
  EXPECT_THROW(parse_monomial("1..4,3"), std::invalid_argument);
  EXPECT_THROW(parse_monomial(""), std::invalid_argument);
  EXPECT_THROW(parse_monomial("0,1"), std::invalid_argument);
  EXPECT_THROW(parse_monomial("-2"), std::invalid_argument);
  EXPECT_THROW(parse_monomial("1,,2"), std::invalid_argument);
  EXPECT_THROW(parse_monomial("5..3"), std::invalid_argument);
  EXPECT_THROW(parse_monomial("x2"), std::invalid_argument);
  EXPECT_THROW(parse_monomial("2,"), std::invalid_argument);
}

TEST(Monomial, RejectsUnitAndUnsorted) {
  EXPECT_THROW(M({}), std::invalid_argument);
  EXPECT_THROW(M({3, 2}), std::invalid_argument);
  EXPECT_THROW(M({0}), std::invalid_argument);
}

TEST(Monomial, CanonicalTextRoundTrips) {
  EXPECT_EQ(M({2, 3, 5, 6, 8, 10}).to_string(), "2,3,5,6,8,10");
  EXPECT_EQ(M({3, 4, 5, 8, 9, 10, 48, 49, 50, 98, 99, 100}).to_string(), "3..5,8..10,48..50,98..100");
  EXPECT_EQ(M({1}).to_string(), "1");
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    auto m = oracle::random_monomial(rng, 60);
    EXPECT_EQ(parse_monomial(m.to_string()), m);
  }
}

TEST(JumpProfile, WorkedExample) {
  auto p = jump_profile(M({2, 3, 5, 6, 8, 10}));
  EXPECT_EQ(p.t, (std::vector<std::size_t>{6, 5, 4, 2}));
  EXPECT_EQ(p.it, (std::vector<Index>{10, 8, 6, 3}));
  EXPECT_EQ(p.ell, 2u);
  ASSERT_TRUE(p.nu);
  EXPECT_EQ(*p.nu, 4);
}

TEST(JumpProfile, SingleBlock) {
  auto p = jump_profile(parse_monomial("33215..104348"));
  EXPECT_EQ(p.t, (std::vector<std::size_t>{71134}));
  EXPECT_EQ(p.it, (std::vector<Index>{104348}));
  EXPECT_EQ(p.ell, 0u);
  EXPECT_EQ(p.k(), 0u);
  EXPECT_FALSE(p.nu);

  auto q = jump_profile(M({1, 2, 3, 4}));
  EXPECT_EQ(q.t, (std::vector<std::size_t>{4}));
  EXPECT_EQ(q.it, (std::vector<Index>{4}));
  EXPECT_FALSE(q.nu);
}

TEST(JumpProfile, RecursiveExample) {
  auto p = jump_profile(parse_monomial("3..5,8..10,48..50,98..100"));
  EXPECT_EQ(p.t, (std::vector<std::size_t>{12, 9, 6, 3}));
  EXPECT_EQ(p.it, (std::vector<Index>{100, 50, 10, 5}));
  EXPECT_EQ(p.ell, 1u);
  ASSERT_TRUE(p.nu);
  EXPECT_EQ(*p.nu, 11);
  EXPECT_EQ(*p.nu_anchor, 0u);
}

TEST(JumpProfile, OrderingPropertiesOnRandomMonomials) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    auto m = oracle::random_monomial(rng, 120);
    auto p = jump_profile(m);
    ASSERT_EQ(p.t.front(), m.degree());
    ASSERT_GE(p.t.back(), 1u);
    for (std::size_t j = 0; j + 1 < p.t.size(); ++j) {
      ASSERT_GT(p.t[j], p.t[j + 1]);
      ASSERT_GT(p.it[j], p.it[j + 1]);
      ASSERT_GT(p.it[j] - Index(p.t[j]), p.it[j + 1] - Index(p.t[j + 1]));
    }
    // ell: the bracket i_{t_{ell+1}} < t_0 <= i_{t_ell}, smallest such.
    Index t0 = Index(m.degree());
    Index below = p.ell < p.k() ? p.it[p.ell + 1] : 0;
    ASSERT_LT(below, t0);
    ASSERT_LE(t0, p.it[p.ell]);
    ASSERT_EQ(p.nu.has_value(), p.ell < p.k());
  }
}

TEST(JumpProfile, BothCharacterizationsAgree) {
  for (const auto& m : oracle::all_monomials(12))
    ASSERT_EQ(jump_profile(m).t, oracle::jump_positions_by_offsets(m)) << m.to_string();
}

TEST(BorelDominates, Examples) {
  EXPECT_TRUE(borel_dominates(M({1, 3}), M({2, 3})));
  EXPECT_TRUE(borel_dominates(M({2, 3}), M({2, 3})));
  EXPECT_FALSE(borel_dominates(M({1, 2, 4}), M({2, 3})));
  EXPECT_FALSE(borel_dominates(M({2, 3}), M({1, 3})));
}

TEST(BorelDominates, MatchesMoveGraphReachability) {
  auto all = oracle::all_monomials(8);
  for (const auto& v : all) {
    auto closure = oracle::borel_closure_bfs(std::vector<Index>(v.indices().begin(), v.indices().end()));
    for (const auto& u : all) {
      if (u.degree() != v.degree()) continue;
      bool reachable = closure.count(std::vector<Index>(u.indices().begin(), u.indices().end())) > 0;
      ASSERT_EQ(borel_dominates(u, v), reachable) << u.to_string() << " vs " << v.to_string();
    }
  }
}

TEST(MinimalElements, Examples) {
  EXPECT_EQ(minimal_elements({M({1}), M({1, 2})}), std::vector<SquareFreeMonomial>{M({1})});
  std::vector<SquareFreeMonomial> tri{M({1, 2}), M({1, 3}), M({2, 3})};
  EXPECT_EQ(minimal_elements(tri), tri);
  EXPECT_TRUE(minimal_elements({}).empty());
}

TEST(MinimalElements, IdempotentAndOrderIndependent) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<SquareFreeMonomial> set;
    for (int i = 0; i < 12; ++i) set.push_back(oracle::random_monomial(rng, 7));
    auto once = minimal_elements(set);
    EXPECT_EQ(minimal_elements(once), once);
    std::shuffle(set.begin(), set.end(), rng);
    EXPECT_EQ(minimal_elements(set), once);
    for (const auto& a : once)
      for (const auto& b : once)
        if (!(a == b)) EXPECT_FALSE(a.divides(b));
  }
}

TEST(SfBorelGenerators, Examples) {
  auto g = sfborel_generators(M({2, 3}));
  EXPECT_FALSE(g.truncated);
  EXPECT_EQ(g.monomials, (std::vector<SquareFreeMonomial>{M({1, 2}), M({1, 3}), M({2, 3})}));

  auto single = sfborel_generators(M({5}));
  EXPECT_EQ(single.monomials, (std::vector<SquareFreeMonomial>{M({1}), M({2}), M({3}), M({4}), M({5})}));
}

TEST(SfBorelGenerators, TruncationIsSignalled) {
  auto g = sfborel_generators(SquareFreeMonomial::range(5, 14), 50);
  EXPECT_TRUE(g.truncated);
}

// The generators equal the minimal elements of the breadth-first closure of
// the seeds, and every Borel move of a generator is divisible by one.
TEST(SfBorelGenerators, MatchesClosureOracleAndIsBorelClosed) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<SquareFreeMonomial> seeds;
    int count = 1 + int(rng() % 3);
    for (int i = 0; i < count; ++i) seeds.push_back(oracle::random_monomial(rng, 8));
    auto gens = sfborel_generators(seeds);
    ASSERT_FALSE(gens.truncated);

    std::vector<SquareFreeMonomial> closure;
    for (const auto& s : seeds)
      for (const auto& v : oracle::borel_closure_bfs(std::vector<Index>(s.indices().begin(), s.indices().end())))
        closure.emplace_back(v);
    ASSERT_EQ(gens.monomials, minimal_elements(closure));

    for (const auto& g : gens.monomials) {
      auto idx = std::vector<Index>(g.indices().begin(), g.indices().end());
      std::set<Index> members(idx.begin(), idx.end());
      for (Index i : idx)
        for (Index j = 1; j < i; ++j) {
          if (members.count(j)) continue;
          auto moved = members;
          moved.erase(i);
          moved.insert(j);
          SquareFreeMonomial mv(std::vector<Index>(moved.begin(), moved.end()));
          bool divisible = std::any_of(gens.monomials.begin(), gens.monomials.end(),
                                       [&](const SquareFreeMonomial& h) { return h.divides(mv); });
          ASSERT_TRUE(divisible);
        }
    }
  }
}

}  // namespace
}  // namespace sfborel
