#include "findex/generators.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "findex/formulas.hpp"
#include "oracle.hpp"

using namespace findex;

namespace {

std::int64_t family_f(Family family, std::vector<std::int64_t> params) {
  return f_index(make_family({family, std::move(params)})).value();
}

std::int64_t closed_form(Family family, std::vector<std::int64_t> params) {
  return f_family({family, std::move(params)}).value();
}

}  // namespace

TEST(BaseGraphs, Examples) {
  EXPECT_EQ(f_index(path(2)), 2);
  EXPECT_EQ(f_index(cycle(5)), 40);
  EXPECT_EQ(f_index(complete(4)), 108);
  EXPECT_EQ(path(0).vertex_count(), 0u);
  EXPECT_EQ(path(1), complete(1));
  EXPECT_THROW(cycle(2), std::invalid_argument);
}

TEST(CompleteMultipartite, Examples) {
  EXPECT_EQ(f_index(complete_multipartite(std::vector<std::size_t>{1, 3})), 30);
  EXPECT_EQ(f_index(complete_multipartite(std::vector<std::size_t>{2, 2})), 32);
  EXPECT_EQ(complete_multipartite(std::vector<std::size_t>{1, 1}), complete(2));
  EXPECT_THROW(complete_multipartite(std::vector<std::size_t>{3}), std::invalid_argument);
  EXPECT_THROW(complete_multipartite(std::vector<std::size_t>{1, 0}), std::invalid_argument);
}

TEST(MakeFamily, Examples) {
  EXPECT_EQ(family_f(Family::wheel, {6}), 378);
  EXPECT_EQ(family_f(Family::cone, {3, 2}), 246);
  EXPECT_EQ(family_f(Family::hamming, {2, 3}), 162);
}

TEST(MakeFamily, ArityAndBoundsErrors) {
  EXPECT_THROW(make_family({Family::wheel, {2}}), std::invalid_argument);
  EXPECT_THROW(make_family({Family::wheel, {}}), std::invalid_argument);
  EXPECT_THROW(make_family({Family::grid, {3}}), std::invalid_argument);
  EXPECT_THROW(make_family({Family::bottleneck, {3}}), std::invalid_argument);
  EXPECT_THROW(make_family({Family::sun, {2, 2}}), std::invalid_argument);
}

TEST(FamilyNames, RoundTrip) {
  EXPECT_EQ(family_from_name("nanotube_c4"), Family::nanotube_c4);
  EXPECT_EQ(family_name(Family::closed_fence), "closed_fence");
  EXPECT_FALSE(family_from_name("moebius").has_value());
  for (const char* name :
       {"path", "cycle", "complete", "empty", "complete_multipartite", "wheel", "fan",
        "windmill", "cone", "hypercube", "hamming", "torus", "nanotube_c4", "grid", "fence",
        "closed_fence", "thorny_cycle", "thorny_path", "bottleneck", "bridge_b", "bridge_t3",
        "comb", "sun"}) {
    const auto family = family_from_name(name);
    ASSERT_TRUE(family.has_value()) << name;
    EXPECT_EQ(family_name(*family), name);
  }
}

TEST(ClosedForms, PathCycleCompleteSweep) {
  for (std::int64_t n = 2; n <= 50; ++n) EXPECT_EQ(family_f(Family::path, {n}), 8 * n - 14);
  for (std::int64_t n = 3; n <= 50; ++n) EXPECT_EQ(family_f(Family::cycle, {n}), 8 * n);
  for (std::int64_t n = 0; n <= 30; ++n)
    EXPECT_EQ(family_f(Family::complete, {n}), n * (n - 1) * (n - 1) * (n - 1));
}

TEST(ClosedForms, JoinFamiliesSweep) {
  for (std::int64_t n = 3; n <= 30; ++n)
    EXPECT_EQ(family_f(Family::wheel, {n}), closed_form(Family::wheel, {n}));
  for (std::int64_t n = 2; n <= 30; ++n)
    EXPECT_EQ(family_f(Family::fan, {n}), closed_form(Family::fan, {n}));
  for (std::int64_t m = 1; m <= 20; ++m)
    EXPECT_EQ(family_f(Family::windmill, {m}), closed_form(Family::windmill, {m}));
  for (std::int64_t m = 3; m <= 10; ++m)
    for (std::int64_t n = 1; n <= 6; ++n)
      EXPECT_EQ(family_f(Family::cone, {m, n}), closed_form(Family::cone, {m, n}));
}

TEST(ClosedForms, CartesianFamiliesSweep) {
  for (std::int64_t k = 1; k <= 7; ++k)
    EXPECT_EQ(family_f(Family::hypercube, {k}), closed_form(Family::hypercube, {k}));
  const std::vector<std::vector<std::int64_t>> hamming_params{
      {2}, {5}, {2, 3}, {3, 3}, {4, 5}, {2, 2, 2}, {2, 3, 4}};
  for (const auto& params : hamming_params)
    EXPECT_EQ(family_f(Family::hamming, params), closed_form(Family::hamming, params));
  const std::vector<std::vector<std::int64_t>> torus_params{
      {3}, {7}, {3, 3}, {4, 5}, {5, 7}, {3, 3, 3}, {3, 4, 5}};
  for (const auto& params : torus_params)
    EXPECT_EQ(family_f(Family::torus, params), closed_form(Family::torus, params));
  for (std::int64_t n = 2; n <= 10; ++n)
    for (std::int64_t m = 3; m <= 9; ++m)
      EXPECT_EQ(family_f(Family::nanotube_c4, {n, m}),
                closed_form(Family::nanotube_c4, {n, m}));
  for (std::int64_t n = 2; n <= 12; ++n)
    for (std::int64_t m = 2; m <= 12; ++m)
      EXPECT_EQ(family_f(Family::grid, {n, m}), 64 * m * n - 74 * m - 74 * n + 72);
}

TEST(ClosedForms, CompositionFamiliesSweep) {
  for (std::int64_t n = 2; n <= 30; ++n)
    EXPECT_EQ(family_f(Family::fence, {n}), closed_form(Family::fence, {n}));
  for (std::int64_t n = 3; n <= 30; ++n)
    EXPECT_EQ(family_f(Family::closed_fence, {n}), closed_form(Family::closed_fence, {n}));
}

TEST(ClosedForms, ThornyAndBridgeSweep) {
  for (std::int64_t n = 3; n <= 10; ++n)
    for (std::int64_t t = 1; t <= 5; ++t)
      EXPECT_EQ(family_f(Family::thorny_cycle, {n, t}),
                closed_form(Family::thorny_cycle, {n, t}));
  for (std::int64_t n = 2; n <= 10; ++n)
    for (std::int64_t t = 1; t <= 5; ++t)
      EXPECT_EQ(family_f(Family::thorny_path, {n, t}),
                closed_form(Family::thorny_path, {n, t}));
  for (std::int64_t m = 2; m <= 30; ++m) {
    EXPECT_EQ(family_f(Family::bridge_b, {m}), closed_form(Family::bridge_b, {m}));
    EXPECT_EQ(family_f(Family::bridge_t3, {m}), closed_form(Family::bridge_t3, {m}));
  }
}

TEST(ClosedForms, ClusterFamiliesSweep) {
  for (std::int64_t n = 2; n <= 15; ++n)
    EXPECT_EQ(family_f(Family::comb, {n}), closed_form(Family::comb, {n}));
  for (std::int64_t m = 3; m <= 10; ++m)
    for (std::int64_t n = 1; n <= 6; ++n)
      EXPECT_EQ(family_f(Family::sun, {m, n}), closed_form(Family::sun, {m, n}));
}

// A few members near the top of the tested size range (about 2500 product
// vertices).
TEST(ClosedForms, LargeInstances) {
  EXPECT_EQ(family_f(Family::grid, {50, 50}), closed_form(Family::grid, {50, 50}));
  EXPECT_EQ(family_f(Family::comb, {50}), closed_form(Family::comb, {50}));
  EXPECT_EQ(family_f(Family::torus, {7, 9, 5}), closed_form(Family::torus, {7, 9, 5}));
  EXPECT_EQ(family_f(Family::hamming, {5, 6, 7}), closed_form(Family::hamming, {5, 6, 7}));
  EXPECT_EQ(family_f(Family::nanotube_c4, {25, 40}),
            closed_form(Family::nanotube_c4, {25, 40}));
  EXPECT_EQ(family_f(Family::closed_fence, {50}), closed_form(Family::closed_fence, {50}));
  EXPECT_EQ(family_f(Family::sun, {12, 8}), closed_form(Family::sun, {12, 8}));
  EXPECT_EQ(family_f(Family::thorny_cycle, {40, 10}),
            closed_form(Family::thorny_cycle, {40, 10}));
}

TEST(CompleteMultipartite, MatchesClosedFormOnPartLists) {
  const std::vector<std::vector<std::int64_t>> part_lists{
      {1, 3}, {2, 2}, {1, 1}, {2, 3, 4}, {1, 1, 1, 1}, {3, 5}, {2, 2, 2}};
  for (const auto& parts : part_lists)
    EXPECT_EQ(family_f(Family::complete_multipartite, parts),
              closed_form(Family::complete_multipartite, parts));
}

TEST(Hypercube, Structure) {
  for (std::size_t k = 1; k <= 7; ++k) {
    const Graph q = make_family({Family::hypercube, {static_cast<std::int64_t>(k)}});
    EXPECT_EQ(q.vertex_count(), std::size_t{1} << k);
    EXPECT_EQ(q.edge_count(), k * (std::size_t{1} << (k - 1)));
    for (std::size_t v = 0; v < q.vertex_count(); ++v) EXPECT_EQ(q.degree(v), k);
  }
}

TEST(Generators, WiderDomainsThanClosedForms) {
  // These members exist as graphs even though the closed forms exclude them.
  EXPECT_EQ(f_index(make_family({Family::fan, {1}})), 2);  // degenerates to K2
  EXPECT_EQ(make_family({Family::grid, {1, 4}}), path(4));
  EXPECT_EQ(make_family({Family::nanotube_c4, {1, 5}}), cycle(5));
  EXPECT_THROW(f_family({Family::fan, {1}}), std::domain_error);
  EXPECT_THROW(f_family({Family::grid, {1, 4}}), std::domain_error);
}
