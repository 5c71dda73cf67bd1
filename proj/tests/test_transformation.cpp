#include <gtest/gtest.h>

#include <random>
#include <set>

#include "chainmaps/family.hpp"
#include "chainmaps/generators.hpp"
#include "chainmaps/transformation.hpp"
#include "oracle.hpp"

namespace chainmaps {
namespace {

Transformation T(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  return make_transformation(n, std::move(images));
}

TEST(Transformation, Construction) {
  EXPECT_EQ(make_transformation(3, {1, 2, 3}), Transformation::identity(3));
  EXPECT_NO_THROW(make_transformation(3, {2, 2, 3}));
  EXPECT_TRUE(is_member(Family::OCT, T({2, 2, 3})));
  EXPECT_THROW(make_transformation(3, {0, 2, 3}), std::invalid_argument);
  EXPECT_THROW(make_transformation(3, {1, 2, 4}), std::invalid_argument);
  EXPECT_THROW(make_transformation(3, {1, 2}), std::invalid_argument);
  EXPECT_THROW(make_transformation(0, {}), std::invalid_argument);
}

TEST(Transformation, EqualityIsStructural) {
  EXPECT_EQ(T({2, 2, 3}), T({2, 2, 3}));
  EXPECT_NE(T({2, 2, 3}), T({2, 3, 3}));
  EXPECT_NE(Transformation::identity(2), Transformation::identity(3));
}

TEST(Compose, LeftToRight) {
  const auto a = T({2, 2, 3});
  const auto b = T({1, 1, 2});
  // 1 -> 2 -> 1, 2 -> 2 -> 1, 3 -> 3 -> 2
  EXPECT_EQ(compose(a, b), T({1, 1, 2}));
  // the other order differs: 1 -> 1 -> 2, 2 -> 1 -> 2, 3 -> 2 -> 2
  EXPECT_EQ(compose(b, a), T({2, 2, 2}));
  EXPECT_EQ(compose(Transformation::identity(3), a), a);
  EXPECT_EQ(compose(a, Transformation::identity(3)), a);
  EXPECT_THROW(compose(a, Transformation::identity(2)), std::invalid_argument);
}

TEST(Compose, OctClosedOverAllPairsAtFour) {
  const auto oct = collect(4, Family::OCT, Mode::brute);
  for (const auto& a : oct)
    for (const auto& b : oct) EXPECT_TRUE(is_member(Family::OCT, compose(a, b)));
}

TEST(Predicates, OrderPreserving) {
  EXPECT_TRUE(is_order_preserving(T({1, 2, 3})));
  EXPECT_FALSE(is_order_preserving(T({3, 2, 1})));
  int count = 0;
  for_each_brute_force(3, Family::T, [&](const Transformation& a) { count += is_order_preserving(a); });
  EXPECT_EQ(count, 10);
}

TEST(Predicates, OrderReversing) {
  EXPECT_TRUE(is_order_reversing(T({3, 2, 1})));
  EXPECT_TRUE(is_order_reversing(T({2, 2, 2})));
  EXPECT_TRUE(is_order_preserving(T({2, 2, 2})));
  EXPECT_FALSE(is_order_reversing(T({1, 3, 2})));
  EXPECT_FALSE(is_order_preserving(T({1, 3, 2})));
}

TEST(Predicates, Contraction) {
  for (int c = 1; c <= 4; ++c) EXPECT_TRUE(is_contraction(Transformation::constant(4, c)));
  EXPECT_FALSE(is_contraction(T({1, 3, 3})));
  EXPECT_TRUE(is_contraction(T({2, 1})));
  EXPECT_FALSE(is_contraction(T({1, 2, 1, 3})));  // 3 and 4 are adjacent, images 1 and 3 are not
}

TEST(Predicates, OrderDecreasing) {
  EXPECT_TRUE(is_order_decreasing(Transformation::identity(4)));
  EXPECT_TRUE(is_order_decreasing(T({1, 1, 2})));
  EXPECT_FALSE(is_order_decreasing(T({2, 2, 3})));
}

TEST(Predicates, Idempotent) {
  EXPECT_TRUE(is_idempotent(Transformation::identity(3)));
  EXPECT_TRUE(is_idempotent(T({1, 1, 3})));
  EXPECT_FALSE(is_idempotent(T({2, 3, 1})));
  EXPECT_FALSE(is_idempotent(T({2, 3, 3})));
}

TEST(Predicates, AgreeWithDefinitionalOracleUpToSix) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& img : oracle::all_maps(n)) {
      const Transformation a(n, img);
      ASSERT_EQ(is_order_preserving(a), oracle::preserving(img));
      ASSERT_EQ(is_order_reversing(a), oracle::reversing(img));
      ASSERT_EQ(is_contraction(a), oracle::contraction(img));
      ASSERT_EQ(is_order_decreasing(a), oracle::decreasing(img));
      ASSERT_EQ(is_idempotent(a), oracle::idempotent(img));
      ASSERT_EQ(raw::idempotent(img), oracle::idempotent(img));
    }
  }
}

TEST(StatProfile, Examples) {
  const auto s = stat_profile(T({1, 2, 2, 3}));
  EXPECT_EQ(s.height, 3);
  EXPECT_EQ(s.fix, 2);
  EXPECT_EQ(s.right_waist, 3);
  EXPECT_EQ(s.left_waist, 1);
  EXPECT_EQ(s.fix_set, (std::vector<int>{1, 2}));
  EXPECT_EQ(s.image_set, (std::vector<int>{1, 2, 3}));

  const auto id = stat_profile(Transformation::identity(5));
  EXPECT_EQ(id.height, 5);
  EXPECT_EQ(id.fix, 5);
  EXPECT_EQ(id.right_waist, 5);

  const auto c1 = stat_profile(T({1, 1, 1}));
  EXPECT_EQ(std::tie(c1.height, c1.fix, c1.right_waist), std::make_tuple(1, 1, 1));
  const auto c2 = stat_profile(T({2, 2, 2}));
  EXPECT_EQ(std::tie(c2.height, c2.fix, c2.right_waist), std::make_tuple(1, 1, 2));

  const auto none = stat_profile(T({2, 1}));
  EXPECT_EQ(none.fix, 0);
  EXPECT_TRUE(none.fix_set.empty());
}

TEST(Reflect, Examples) {
  EXPECT_EQ(reflect(Transformation::identity(3)), T({3, 2, 1}));
  EXPECT_EQ(reflect(T({1, 1, 2})), T({3, 3, 2}));
}

TEST(Reflect, BijectionOctOntoTallReversingContractions) {
  for (int n = 1; n <= 7; ++n) {
    std::set<Transformation> image;
    for_each_brute_force(n, Family::OCT, [&](const Transformation& a) {
      if (stat_profile(a).height >= 2) image.insert(reflect(a));
    });
    std::set<Transformation> target;
    for_each_brute_force(n, Family::ORCT_STAR, [&](const Transformation& a) {
      if (stat_profile(a).height >= 2) target.insert(a);
    });
    EXPECT_EQ(image, target) << "n=" << n;
  }
}

// Random maps, n up to 12: algebraic laws that are cheap to state.
TEST(Properties, RandomMaps) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 12)(rng);
    std::uniform_int_distribution<int> point(1, n);
    auto random_map = [&] {
      std::vector<int> img(n);
      for (int& y : img) y = point(rng);
      return Transformation(n, img);
    };
    const auto a = random_map(), b = random_map(), c = random_map();
    ASSERT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
    ASSERT_EQ(reflect(reflect(a)), a);
    ASSERT_EQ(is_order_preserving(a), is_order_reversing(reflect(a)));
    ASSERT_EQ(is_contraction(a), is_contraction(reflect(a)));
    ASSERT_EQ(parse_transformation(to_string(a)), a);
    const auto s = stat_profile(a);
    ASSERT_EQ(is_idempotent(a), s.image_set == s.fix_set);
    ASSERT_GE(s.right_waist, s.height);
    ASSERT_LE(s.left_waist, s.right_waist);
    if (is_order_reversing(a)) {
      ASSERT_LE(s.fix, 1);
    }
  }
}

TEST(TextForm, PrintAndParse) {
  EXPECT_EQ(to_string(T({1, 2, 2, 3})), "4: 1 2 2 3");
  EXPECT_EQ(to_string(Transformation::identity(1)), "1: 1");
  EXPECT_EQ(parse_transformation("3: 3 2 2"), T({3, 2, 2}));
  EXPECT_THROW(parse_transformation("3: 3 2"), std::invalid_argument);
  EXPECT_THROW(parse_transformation("3 3 2 2"), std::invalid_argument);
  EXPECT_THROW(parse_transformation("3:3 2 2"), std::invalid_argument);
  EXPECT_THROW(parse_transformation("3: 3  2 2"), std::invalid_argument);
  EXPECT_THROW(parse_transformation("3: 3 2 2 "), std::invalid_argument);
  EXPECT_THROW(parse_transformation("3: 4 2 2"), std::invalid_argument);
  EXPECT_THROW(parse_transformation("0:"), std::invalid_argument);
  EXPECT_THROW(parse_transformation(""), std::invalid_argument);
}

TEST(Convexity, FixAndImageSetsOfContractions) {
  // Both sets are intervals for every contraction up to n = 7, monotone or not.
  for (int n = 1; n <= 7; ++n) {
    for_each_brute_force(n, Family::CT, [&](const Transformation& a) {
      const auto s = stat_profile(a);
      ASSERT_TRUE(is_convex(s.image_set)) << a;
      ASSERT_TRUE(is_convex(s.fix_set)) << a;
    });
  }
  EXPECT_FALSE(is_convex(std::vector<int>{1, 3}));
}

TEST(StepCharacterization, OctIffUnitSteps) {
  for (int n = 1; n <= 7; ++n) {
    for_each_brute_force(n, Family::T, [&](const Transformation& a) {
      bool unit = true;
      for (int x = 1; x < n; ++x) unit = unit && (a(x + 1) - a(x) == 0 || a(x + 1) - a(x) == 1);
      ASSERT_EQ(unit, is_member(Family::OCT, a)) << a;
    });
  }
}

}  // namespace
}  // namespace chainmaps
