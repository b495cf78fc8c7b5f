// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace sublrc;
using sublrc::testing::gf;

TEST(Recovery, AllSubspacesSymbols) {
  const auto c = construction_all_subspaces(gf(2), 3, 2);
  for (std::size_t j = 0; j < c.n(); ++j)
    for (std::size_t i = 0; i < 2; ++i) {
      const auto r = min_symbol_recovery(c, i, j);
      EXPECT_EQ(r.size(), 1u);
      EXPECT_TRUE(verify_recovery(c, r));
    }
}

TEST(Recovery, SpreadAndSimplex) {
  const auto s = construction_spread(gf(2), 4, 2);
  EXPECT_EQ(symbol_locality(s).value, 2u);
  EXPECT_EQ(node_locality(s).value, 2u);
  const auto simplex = construction_all_subspaces(gf(2), 3, 1);
  EXPECT_EQ(symbol_locality(simplex).value, 2u);
  EXPECT_EQ(node_locality(simplex).value, 2u);
}

TEST(Recovery, FirstWitnessIsLexicographic) {
  const auto s = construction_spread(gf(2), 4, 2);
  const auto r = min_node_recovery(s, 0);
  EXPECT_EQ(r.columns, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(r.functionals.size(), 2u);
}

TEST(Recovery, ParallelClassLocality) {
  // Any two blocks of one parallel class already span F_q^M when M = 2b.
  EXPECT_EQ(node_locality(construction_std(gf(2), 1, 3, 6, StdScope::Parallel)).value, 2u);
  EXPECT_EQ(node_locality(construction_std(gf(3), 1, 2, 4, StdScope::Parallel)).value, 2u);
  // With M > 2b two blocks are not enough.
  EXPECT_EQ(node_locality(construction_std(gf(2), 1, 2, 5, StdScope::Parallel)).value, 3u);
}

TEST(Recovery, SetPredicates) {
  const auto c = construction_spread(gf(2), 4, 2);
  const std::vector<std::size_t> two{1, 2}, one{1}, self{0, 1};
  EXPECT_TRUE(is_node_recovery_set(c, 0, two));
  EXPECT_FALSE(is_node_recovery_set(c, 0, one));
  EXPECT_FALSE(is_node_recovery_set(c, 0, self));
  EXPECT_THROW(make_node_recovery(c, 0, {1}), Error);
  EXPECT_THROW(min_node_recovery(c, 9), Error);
}

TEST(Recovery, Unrecoverable) {
  auto f = gf(2);
  const auto a = Subspace::span(f, 2, {{1, 0}});
  const auto b = Subspace::span(f, 2, {{0, 1}});
  const auto c = ArrayCode::from_subspaces({a, b}, 1, 2, "split");
  try {
    min_node_recovery(c, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoRecovery);
  }
}

TEST(Availability, AllSubspaces) {
  const auto c = construction_all_subspaces(gf(2), 4, 2);
  const auto ts = code_symbol_availability(c, 1);
  EXPECT_EQ(ts.value, 6u);
  EXPECT_TRUE(ts.exact);
  const auto tn = node_availability(c, 0, 2);
  EXPECT_EQ(tn.count, 17u);
  std::set<std::size_t> used;
  for (const auto& r : tn.family) {
    EXPECT_LE(r.size(), 2u);
    for (auto x : r.columns) EXPECT_TRUE(used.insert(x).second);
    EXPECT_TRUE(verify_recovery(c, r));
  }
}

TEST(Availability, GreedyFallbackIsFlagged) {
  const auto c = construction_all_subspaces(gf(2), 4, 2);
  Limits l;
  l.packing = 3;
  const auto a = node_availability(c, 0, 2, l);
  EXPECT_FALSE(a.exact);
  EXPECT_LE(a.count, 17u);
}

TEST(Packing, ExactBeatsGreedy) {
  // Greedy takes {0,1} and blocks both others.
  const std::vector<std::vector<std::size_t>> sets{{0, 1}, {0, 2}, {1, 3}};
  EXPECT_EQ(greedy_disjoint_packing(sets, 4).size(), 1u);
  EXPECT_EQ(max_disjoint_packing(sets, 4), (std::vector<std::size_t>{1, 2}));
  EXPECT_TRUE(max_disjoint_packing({}, 3).empty());
}

TEST(Packing, MatchesBruteForce) {
  // all 2-subsets of {0..5} plus a few triples
  std::vector<std::vector<std::size_t>> sets;
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = a + 1; b < 6; ++b)
      if ((a + b) % 3) sets.push_back({a, b});
  sets.push_back({0, 1, 2});
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << sets.size()); ++mask) {
    std::set<std::size_t> used;
    bool ok = true;
    std::size_t n = 0;
    for (std::size_t s = 0; s < sets.size() && ok; ++s)
      if (mask >> s & 1) {
        ++n;
        for (auto e : sets[s]) ok = ok && used.insert(e).second;
      }
    if (ok) best = std::max(best, n);
  }
  EXPECT_EQ(max_disjoint_packing(sets, 6).size(), best);
}

TEST(Pairing, FamilySizes) {
  for (auto [p, m, want] : {std::tuple{2u, 3u, 3u}, std::tuple{2u, 4u, 17u}, std::tuple{3u, 3u, 6u}}) {
    const auto c = construction_all_subspaces(gf(p), m, 2);
    const auto fam = grassmann_pairing_sets(c, 0);
    EXPECT_EQ(fam.size(), want);
    std::set<std::size_t> used;
    for (const auto& r : fam) {
      EXPECT_EQ(r.size(), 2u);
      EXPECT_TRUE(is_node_recovery_set(c, 0, r.columns));
      for (auto x : r.columns) {
        EXPECT_NE(x, 0u);
        EXPECT_TRUE(used.insert(x).second);
      }
    }
  }
}

TEST(Pairing, RejectsWrongInput) {
  auto f = gf(2);
  EXPECT_THROW(grassmann_pairing(f, 3, Subspace::span(f, 3, {{1, 0, 0}})), Error);
  EXPECT_THROW(grassmann_pairing_sets(construction_spread(f, 4, 2), 0), Error);
}

TEST(Repair, ZeroAndExampleCodewords) {
  const auto c = construction_std(gf(2), 1, 3, 6, StdScope::Parallel);
  const Codeword zero(c.field_ptr(), 3, 8);
  for (std::size_t j = 0; j < 8; ++j) EXPECT_EQ(repair(c, zero, j).column, (Vec{0, 0, 0}));
  const Vec e4{0, 0, 0, 1, 0, 0};
  Codeword w = encode(c, e4);
  const Vec original = w.column(1);
  for (std::size_t i = 0; i < 3; ++i) w(i, 1) = 1;  // erased content is ignored
  const auto r = repair(c, w, 1);
  EXPECT_EQ(r.column, original);
  EXPECT_LE(r.contacted, 3u);
}

TEST(Repair, SpreadEveryCodeword) {
  const auto c = construction_spread(gf(2), 4, 2);
  for (std::uint64_t m = 0; m < 16; ++m) {
    const auto w = encode(c, vector_from_index(c.field(), 4, m));
    for (std::size_t j = 0; j < c.n(); ++j) {
      const auto r = repair(c, w, j);
      ASSERT_EQ(r.column, w.column(j));
      ASSERT_EQ(r.contacted, 2u);
    }
  }
}

TEST(Repair, Inconsistent) {
  const auto c = construction_spread(gf(2), 4, 2);
  Codeword w(c.field_ptr(), 2, 5);
  w(0, 0) = 1;
  try {
    repair(c, w, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Inconsistent);
  }
}

TEST(Profile, SkipsWhenTooLarge) {
  const auto c = construction_all_subspaces(gf(2), 4, 2);
  Limits l;
  l.enumeration = 5;
  LocalityOptions o;
  o.symbol = o.node = false;
  o.availability = true;
  o.node_radius = 2;
  o.symbol_radius = 1;
  const auto p = analyze_locality(c, o, l);
  EXPECT_FALSE(p.node_availability.has_value());
  EXPECT_FALSE(p.symbol_availability.has_value());
  EXPECT_EQ(p.skipped.size(), 2u);
}
