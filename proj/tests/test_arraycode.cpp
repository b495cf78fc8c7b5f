// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace sublrc;
using sublrc::testing::gf;

namespace {

std::set<Subspace> subspace_set(const ArrayCode& c) { return {c.subspaces().begin(), c.subspaces().end()}; }

}  // namespace

TEST(ArrayCode, SingleFullSpaceColumn) {
  auto f = gf(2);
  const auto c = ArrayCode::from_subspaces({Subspace::full(f, 3)}, 3, 3, "one");
  EXPECT_EQ(c.generator(), Mat::identity(f, 3));
  EXPECT_EQ(c.n(), 1u);
  EXPECT_EQ(min_distance(c), 1u);
}

TEST(ArrayCode, FromSubspacesErrors) {
  auto f = gf(2);
  const auto line = Subspace::span(f, 3, {{1, 0, 0}});
  try {
    ArrayCode::from_subspaces({line}, 2, 3, "x");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadParams);
  }
  EXPECT_THROW(ArrayCode::from_subspaces({Subspace::full(f, 3)}, 2, 3, "x"), Error);
  EXPECT_THROW(ArrayCode::from_subspaces({Subspace::full(f, 2)}, 2, 3, "x"), Error);
}

TEST(ArrayCode, ShortSubspacesArePadded) {
  auto f = gf(2);
  const auto a = Subspace::span(f, 2, {{1, 0}});
  const auto b = Subspace::span(f, 2, {{0, 1}});
  const auto c = ArrayCode::from_subspaces({a, b}, 2, 2, "pad");
  EXPECT_EQ(c.generator().cols(), 4u);
  EXPECT_EQ(c.generator().column(1), (Vec{0, 0}));
  EXPECT_FALSE(c.full_column_rank());
}

TEST(Construction, AllSubspacesSmall) {
  auto f = gf(2);
  const auto simplex = construction_all_subspaces(f, 3, 1);
  EXPECT_EQ(simplex.n(), 7u);
  EXPECT_EQ(weight_distribution(simplex), (WeightDistribution{{0, 1}, {4, 7}}));
  const auto c = construction_all_subspaces(f, 3, 2);
  EXPECT_EQ(c.n(), 7u);
  EXPECT_EQ(min_distance(c), 6u);
  EXPECT_EQ(c.provenance(), "all-subspaces field=gf(2) M=3 b=2");
  const auto whole = construction_all_subspaces(f, 3, 3);
  EXPECT_EQ(whole.n(), 1u);
  EXPECT_EQ(min_distance(whole), 1u);
  EXPECT_THROW(construction_all_subspaces(f, 3, 4), Error);
}

TEST(Construction, Spread) {
  auto f = gf(2);
  const auto c = construction_spread(f, 4, 2);
  EXPECT_EQ(c.n(), 5u);
  EXPECT_EQ(min_distance(c), 4u);
  EXPECT_TRUE(is_mds(c, 4));
  const auto c3 = construction_spread(f, 6, 3);
  EXPECT_EQ(c3.n(), 9u);
  EXPECT_EQ(weight_distribution(c3), (WeightDistribution{{0, 1}, {8, 63}}));
  const auto simplex = construction_spread(f, 3, 1);
  EXPECT_EQ(subspace_set(simplex), subspace_set(construction_all_subspaces(f, 3, 1)));
  EXPECT_THROW(construction_spread(f, 5, 2), Error);
}

TEST(Construction, FromBlocks) {
  auto f = gf(2);
  const auto planes = enumerate_grassmannian(f, 3, 2);
  EXPECT_EQ(construction_from_blocks(planes).generator(), construction_all_subspaces(f, 3, 2).generator());
  const auto spread = build_spread(f, 4, 2);
  EXPECT_EQ(construction_from_blocks(spread.blocks).generator(), construction_spread(f, 4, 2).generator());
  try {
    construction_from_blocks({planes[0], planes[1], planes[0]});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DuplicateBlock);
  }
  try {
    construction_from_blocks({planes[0], Subspace::span(f, 3, {{1, 0, 0}})});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MixedDimensions);
  }
}

TEST(Construction, StdParallelMatchesExample) {
  auto f = gf(2);
  const auto c = construction_std(f, 1, 3, 6, StdScope::Parallel);
  EXPECT_EQ(c.b(), 3u);
  EXPECT_EQ(c.n(), 8u);
  EXPECT_EQ(c.dimension(), 6u);
  EXPECT_EQ(min_distance(c), 7u);
  EXPECT_TRUE(is_mds(c, 7));
  const auto printed = ArrayCode::from_generator(sublrc::testing::example1_generator(), 3, "printed");
  EXPECT_EQ(subspace_set(c), subspace_set(printed));
  EXPECT_EQ(weight_distribution(c), weight_distribution(printed));
  EXPECT_EQ(weight_distribution(c), (WeightDistribution{{0, 1}, {7, 56}, {8, 7}}));
}

TEST(Construction, StdOther) {
  auto f = gf(2);
  const auto par = construction_std(f, 1, 2, 4, StdScope::Parallel);
  EXPECT_EQ(par.n(), 4u);
  EXPECT_EQ(min_distance(par), 3u);
  EXPECT_TRUE(is_mds(par, 3));
  const auto full = construction_std(f, 2, 2, 4, StdScope::Full);
  EXPECT_EQ(full.n(), 16u);
  EXPECT_EQ(min_distance(full), 12u);
  EXPECT_THROW(construction_std(f, 2, 2, 4, StdScope::Parallel, 4), Error);
  EXPECT_THROW(construction_std(f, 1, 3, 5, StdScope::Parallel), Error);
  // every parallel class of the t=2 design gives a code with the same profile
  for (std::size_t k = 0; k < 4; ++k)
    EXPECT_EQ(weight_distribution(construction_std(f, 2, 2, 4, StdScope::Parallel, k)),
              (WeightDistribution{{0, 1}, {3, 12}, {4, 3}}));
}

TEST(Codeword, EncodeFlatten) {
  const auto printed = ArrayCode::from_generator(sublrc::testing::example1_generator(), 3, "printed");
  const Vec zero(6, 0);
  EXPECT_EQ(weight(encode(printed, zero)), 0u);
  const Vec e1{1, 0, 0, 0, 0, 0};
  const auto w = encode(printed, e1);
  EXPECT_EQ(weight(w), 8u);
  EXPECT_EQ(symbol_weight(w), 8u);
  for (std::size_t j = 0; j < 8; ++j) EXPECT_EQ(w(0, j), 1u);
  const Vec e4{0, 0, 0, 1, 0, 0};
  const auto flat = flatten(encode(printed, e4));
  EXPECT_EQ(std::vector<Elem>(printed.generator().row(3).begin(), printed.generator().row(3).end()), flat);
  EXPECT_EQ(unflatten(printed.field_ptr(), flat, 3, 8), encode(printed, e4));
  EXPECT_THROW(encode(printed, Vec{1, 0}), Error);
}

TEST(Distance, EarlyExitAndLimits) {
  auto f = gf(2);
  const auto c = construction_all_subspaces(f, 4, 2);
  EXPECT_EQ(min_distance(c, {}, 28), 28u);
  Limits tiny;
  tiny.exhaustive = 8;
  EXPECT_THROW(weight_distribution(c, tiny), Error);
  const auto r = analyze_code(c, tiny);
  EXPECT_FALSE(r.distance.has_value());
  EXPECT_FALSE(r.skipped.empty());
}

TEST(Distance, ThreadCountDoesNotMatter) {
  const auto c = construction_spread(gf(3), 4, 2);
  EXPECT_EQ(weight_distribution(c, {}, 1), weight_distribution(c, {}, 4));
}

TEST(Dual, SpreadAndAllSubspaces) {
  auto f = gf(2);
  const auto s = construction_spread(f, 4, 2);
  const auto d = dual(s);
  EXPECT_EQ(d.dimension(), 6u);
  EXPECT_EQ(d.n(), 5u);
  EXPECT_EQ(min_distance(d), 3u);
  EXPECT_EQ(dual_distance(s), 3u);
  EXPECT_TRUE(perfectness(d).perfect);
  EXPECT_EQ(perfectness(d).ball_size, 16);
  const auto a = construction_all_subspaces(f, 3, 2);
  EXPECT_EQ(min_distance(dual(a)), 2u);
  EXPECT_EQ(dual_distance(a), 2u);
}

TEST(Dual, DistanceMatchesExhaustiveOnSmallCodes) {
  auto f = gf(2);
  for (const auto& c : {construction_spread(f, 4, 2), construction_std(f, 1, 2, 4, StdScope::Parallel),
                        construction_all_subspaces(f, 3, 1), construction_all_subspaces(f, 3, 2)})
    EXPECT_EQ(dual_distance(c), min_distance(dual(c))) << c.provenance();
}

TEST(Perfect, CparDualRatio) {
  const auto c = construction_std(gf(2), 1, 3, 6, StdScope::Parallel);
  const auto p = perfectness(dual(c));
  EXPECT_EQ(p.ratio, Rational(57, 64));
  EXPECT_FALSE(p.perfect);
}

TEST(Mds, NeedsDivisibility) {
  const auto c = construction_all_subspaces(gf(2), 3, 2);
  EXPECT_THROW(is_mds(c, 6), Error);
}
