// Copyright 2026 The regfactor Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <string>

#include "fixtures.hpp"
#include "regfactor/canonical.hpp"
#include "regfactor/constructions.hpp"
#include "regfactor/error.hpp"
#include "regfactor/spectral.hpp"

namespace regfactor {
namespace {

using testing::spec_of;

std::vector<int> sorted_degrees(const Graph& g) {
  std::vector<int> d = g.degrees();
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

TEST(Constructions, Examples) {
  const Graph even = build(spec_of(Family::ExtremalEven, 4, 2));
  EXPECT_EQ(even.order(), 5);
  EXPECT_EQ(even.size(), 9);
  EXPECT_EQ(sorted_degrees(even), (std::vector<int>{4, 4, 4, 3, 3}));

  const Graph m1 = build(spec_of(Family::ExtremalOddM1, 3, 1));
  EXPECT_EQ(m1.order(), 5);
  EXPECT_EQ(m1.size(), 7);
  EXPECT_EQ(sorted_degrees(m1), (std::vector<int>{3, 3, 3, 3, 2}));

  const Graph m3 = build(spec_of(Family::ExtremalOddM3, 5, 3));
  EXPECT_EQ(m3.order(), 7);
  EXPECT_EQ(m3.size(), 16);
}

TEST(Constructions, ElementaryFamilies) {
  EXPECT_EQ(testing::complete(4).size(), 6);
  EXPECT_EQ(testing::sized(Family::MatchingM, 3).order(), 6);
  EXPECT_EQ(testing::sized(Family::MatchingM, 3).size(), 3);
  EXPECT_EQ(testing::star(4).degree(0), 4);
  EXPECT_EQ(testing::path(4).size(), 3);
  ConstructionSpec cycles;
  cycles.family = Family::CycleUnionC;
  cycles.cycles = {3, 4};
  const Graph c = build(cycles);
  EXPECT_EQ(c.order(), 7);
  EXPECT_EQ(c.size(), 7);
  EXPECT_EQ(connected_components(c).size(), 2u);
  cycles.cycles = {2};
  EXPECT_THROW(build(cycles), DomainError);
}

TEST(Constructions, FamilyNamesRoundTrip) {
  for (Family f : {Family::CompleteK, Family::MatchingM, Family::CycleUnionC, Family::StarK1s,
                   Family::PathP, Family::ExtremalEven, Family::ExtremalOddM3,
                   Family::ExtremalOddM1, Family::ExtremalOddM2, Family::OddM2Adjacent,
                   Family::OddM2Star}) {
    EXPECT_EQ(family_from_name(family_name(f)), f);
  }
  EXPECT_FALSE(family_from_name("nonsense").has_value());
}

TEST(Constructions, DomainErrorsNameTheFamily) {
  try {
    build(spec_of(Family::ExtremalEven, 4, 3));
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("extremal-even"), std::string::npos);
  }
  EXPECT_THROW(build(spec_of(Family::ExtremalEven, 4, 6)), DomainError);
  EXPECT_THROW(build(spec_of(Family::ExtremalEven, 3, 2)), DomainError);
  EXPECT_THROW(build(spec_of(Family::ExtremalOddM3, 5, 4)), DomainError);
  EXPECT_THROW(build(spec_of(Family::ExtremalOddM3, 5, 1)), DomainError);
  EXPECT_THROW(build(spec_of(Family::ExtremalOddM1, 4, 1)), DomainError);
  EXPECT_THROW(build(spec_of(Family::ExtremalOddM2, 5, 2)), DomainError);
}

void expect_class_member(const Graph& g, int r, int m, bool odd_family, const std::string& label) {
  SCOPED_TRACE(label);
  EXPECT_TRUE(is_connected(g));
  EXPECT_EQ(g.max_degree(), r);
  EXPECT_FALSE(g.is_regular());
  EXPECT_EQ(2 * g.size(), static_cast<long long>(r) * g.order() - m);
  EXPECT_EQ((g.order() - r) % 2 == 0, odd_family);
}

TEST(Constructions, ExtremalClassMembership) {
  for (int r = 4; r <= 12; ++r) {
    for (int m = 2; m <= r; m += 2) {  // m = r+1 is regular, see below
      expect_class_member(build(spec_of(Family::ExtremalEven, r, m)), r, m, false,
                          "even r=" + std::to_string(r) + " m=" + std::to_string(m));
    }
  }
  for (int r = 3; r <= 12; ++r) {
    for (int m = 3; m <= r + 1; ++m) {
      if ((m - r) % 2 != 0) continue;
      expect_class_member(build(spec_of(Family::ExtremalOddM3, r, m)), r, m, true,
                          "odd r=" + std::to_string(r) + " m=" + std::to_string(m));
    }
  }
  for (int r = 3; r <= 11; r += 2) {
    expect_class_member(build(spec_of(Family::ExtremalOddM1, r, 1)), r, 1, true, "m1");
  }
  for (int r = 4; r <= 12; r += 2) {
    expect_class_member(build(spec_of(Family::ExtremalOddM2, r, 2)), r, 2, true, "m2");
    expect_class_member(build(spec_of(Family::OddM2Adjacent, r, 2)), r, 2, true, "adjacent");
    expect_class_member(build(spec_of(Family::OddM2Star, r, 2)), r, 2, true, "star");
  }
}

TEST(Constructions, EvenFamilyAtRPlusOneIsRegular) {
  // K_0 joined with the complement of a perfect matching on r+1 vertices.
  for (int r = 5; r <= 11; r += 2) {
    const Graph g = build(spec_of(Family::ExtremalEven, r, r + 1));
    EXPECT_TRUE(g.is_regular());
    EXPECT_EQ(g.max_degree(), r - 1);
  }
}

TEST(Constructions, LabelingIsReproducible) {
  const ConstructionSpec s = spec_of(Family::ExtremalOddM3, 7, 5);
  EXPECT_EQ(build(s), build(s));
  EXPECT_EQ(to_graph6(build(spec_of(Family::ExtremalEven, 4, 2))), "D~w");
}

TEST(Constructions, PartitionsAreEquitable) {
  for (int r = 4; r <= 12; r += 2) {
    for (Family f : {Family::ExtremalOddM2, Family::OddM2Adjacent, Family::OddM2Star}) {
      const ConstructionSpec s = spec_of(f, r, 2);
      const Graph g = build(s);
      EXPECT_TRUE(is_equitable(g, extremal_partition(s))) << family_name(f) << " r=" << r;
    }
  }
  for (int r = 4; r <= 12; ++r) {
    for (int m = 2; m <= r + 1; m += 2) {
      const ConstructionSpec s = spec_of(Family::ExtremalEven, r, m);
      EXPECT_TRUE(is_equitable(build(s), extremal_partition(s)));
    }
  }
}

TEST(Constructions, CyclePartitionDoesNotChangeTheQuotient) {
  ConstructionSpec single = spec_of(Family::ExtremalOddM3, 7, 7);
  ConstructionSpec split = single;
  split.cycles = {3, 4};
  const Graph a = build(single);
  const Graph b = build(split);
  EXPECT_NE(canonical_form(a), canonical_form(b));
  EXPECT_TRUE(is_equitable(b, extremal_partition(split)));
  EXPECT_EQ(quotient_matrix(a, extremal_partition(single)).b,
            quotient_matrix(b, extremal_partition(split)).b);
  EXPECT_NEAR(eigenvalues(a).lambda(1), eigenvalues(b).lambda(1), 1e-9);
}

}  // namespace
}  // namespace regfactor
