#include <gtest/gtest.h>

#include <random>

#include "ssuf/discrepancy.hpp"
#include "ssuf/errors.hpp"
#include "ssuf/fixtures.hpp"
#include "test_util.hpp"

using namespace ssuf;
using namespace ssuf::testing;

namespace {

std::vector<Rational> ints(std::initializer_list<int> values) {
  std::vector<Rational> out;
  for (int v : values) out.push_back(Rational(v));
  return out;
}

// Sum of d_S (y_i - z_i) over a circular interval, term by term.
Rational interval_sum(const WpcsInstance& w, const std::vector<Rational>& z, int start, int length) {
  Rational sum;
  for (int k = 0; k < length; ++k) {
    const int i = (start + k) % w.size();
    sum += w.demand_at(i) * (w.y()[i] - z[i]);
  }
  return sum;
}

Rational brute_interval(const WpcsInstance& w, const std::vector<Rational>& z) {
  Rational best;
  for (int start = 0; start < w.size(); ++start) {
    for (int len = 0; len <= w.size(); ++len) best = max(best, abs(interval_sum(w, z, start, len)));
  }
  return best;
}

bool is_selection(const WpcsInstance& w, const std::vector<Rational>& z) {
  for (const auto& s : w.sets()) {
    int ones = 0;
    for (int i : s) {
      if (z[i] == Rational(1)) {
        ++ones;
      } else if (!z[i].is_zero()) {
        return false;
      }
    }
    if (ones != 1) return false;
  }
  return true;
}

// Nested sets laid out recursively, random y with small denominators.
WpcsInstance random_nested(std::mt19937& gen, int l) {
  std::vector<int> label(l);
  std::vector<int> open;
  int next = 0;
  for (int i = 0; i < l; ++i) {
    const int action = static_cast<int>(gen() % 3);
    if (open.empty() || action == 0) {
      open.push_back(next++);
    } else if (action == 1 && open.size() > 1) {
      open.pop_back();
    }
    label[i] = open.back();
  }
  std::vector<std::vector<int>> sets(next);
  for (int i = 0; i < l; ++i) sets[label[i]].push_back(i);
  std::vector<Rational> demands, y(l);
  for (auto& s : sets) {
    demands.push_back(Rational(static_cast<long>(gen() % 9 + 1), static_cast<long>(gen() % 4 + 1)));
    std::vector<long> parts;
    long total = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
      parts.push_back(static_cast<long>(gen() % 5));
      total += parts.back();
    }
    if (total == 0) {
      parts[0] = 1;
      total = 1;
    }
    for (std::size_t k = 0; k < s.size(); ++k) y[s[k]] = Rational(parts[k], total);
  }
  return WpcsInstance(std::move(sets), std::move(demands), std::move(y));
}

}  // namespace

TEST(Wpcs, RejectsBadPartitions) {
  EXPECT_THROW(WpcsInstance({{0}, {0}}, ints({1, 1}), ints({1})), InputError);
  EXPECT_THROW(WpcsInstance({{0}}, ints({1}), ints({1, 0})), InputError);
  EXPECT_THROW(WpcsInstance({{0, 1}}, ints({1}), rationals({"1/2", "1/3"})), InputError);
  EXPECT_THROW(WpcsInstance({{0}}, ints({-1}), ints({1})), InputError);
  EXPECT_THROW(WpcsInstance({{}}, ints({1}), {}), InputError);
}

TEST(Wpcs, InterleavingDetected) {
  const WpcsInstance w({{0, 2}, {1, 3}}, ints({1, 1}), rationals({"1/2", "1/2", "1/2", "1/2"}));
  EXPECT_FALSE(w.non_interleaving());
  EXPECT_THROW(prefix_greedy_select(w), UnsupportedInstance);
  EXPECT_THROW(select_with_costs(w, ints({0, 0, 0, 0})), UnsupportedInstance);
  EXPECT_TRUE(half_integral_wpcs().non_interleaving());
  EXPECT_TRUE(labels_non_interleaving({0, 1, 1, 0, 2, 2, 0}));
  EXPECT_FALSE(labels_non_interleaving({0, 1, 0, 1}));
}

TEST(Discrepancy, ZeroWhenZEqualsY) {
  const WpcsInstance w = half_integral_wpcs();
  EXPECT_EQ(prefix_discrepancy(w, w.y()), Rational(0));
  EXPECT_EQ(interval_discrepancy(w, w.y()), Rational(0));
}

TEST(Discrepancy, HalfIntegralIntervals) {
  const WpcsInstance w = half_integral_wpcs();
  // D({1,2}) in one-based terms
  const std::vector<Rational> z = ints({1, 1, 0, 1, 0, 0});
  EXPECT_EQ(abs(interval_sum(w, z, 0, 2)), Rational(3, 2));
  EXPECT_GE(interval_discrepancy(w, z), Rational(3, 2));
  for (int middle : {0, 1}) {
    const std::vector<Rational> z3 = ints({1, middle, 1, 0, 1 - middle, 0});
    EXPECT_GE(abs(interval_sum(w, z3, 0, 3)), Rational(3, 2));
  }
}

TEST(Discrepancy, FastMatchesBruteForce) {
  std::mt19937 gen(11);
  for (int round = 0; round < 60; ++round) {
    const WpcsInstance w = random_nested(gen, 1 + round % 12);
    const Selection z = prefix_greedy_select(w);
    EXPECT_EQ(interval_discrepancy(w, z.z), brute_interval(w, z.z));
    std::vector<Rational> first(w.size());
    for (const auto& s : w.sets()) first[s.front()] = Rational(1);
    EXPECT_EQ(interval_discrepancy(w, first), brute_interval(w, first));
  }
}

TEST(Discrepancy, LengthMismatchThrows) {
  const WpcsInstance w = half_integral_wpcs();
  EXPECT_THROW(prefix_discrepancy(w, ints({1})), InputError);
  EXPECT_THROW(interval_discrepancy(w, ints({1, 1, 1, 1, 1, 1})), InputError);
  EXPECT_THROW(dot(ints({1}), ints({1, 2})), InputError);
}

TEST(Greedy, IntegralInputIsKept) {
  const WpcsInstance w({{0, 1, 2}, {3}}, ints({3, 2}), ints({0, 1, 0, 1}));
  const Selection z = prefix_greedy_select(w);
  EXPECT_TRUE(z.integral);
  EXPECT_EQ(z.z, w.y());
}

TEST(Greedy, SinglePair) {
  const WpcsInstance w({{0, 1}}, ints({1}), rationals({"1/2", "1/2"}));
  const Selection z = prefix_greedy_select(w);
  EXPECT_EQ(z.z, ints({1, 0}));
  EXPECT_EQ(prefix_deviation(w, z.z), rationals({"0", "-1/2", "0"}));
  EXPECT_EQ(prefix_discrepancy(w, z.z), Rational(1, 2));
}

TEST(Greedy, HalfIntegralInstance) {
  const WpcsInstance w = half_integral_wpcs();
  const Selection z = prefix_greedy_select(w);
  EXPECT_TRUE(is_selection(w, z.z));
  EXPECT_LE(prefix_discrepancy(w, z.z), Rational(1));
  EXPECT_LE(interval_discrepancy(w, z.z), Rational(2));
}

TEST(Greedy, RandomNestedBounds) {
  std::mt19937 gen(5);
  for (int round = 0; round < 200; ++round) {
    const WpcsInstance w = random_nested(gen, 1 + round % 30);
    const Selection z = prefix_greedy_select(w);
    ASSERT_TRUE(is_selection(w, z.z));
    EXPECT_LE(prefix_discrepancy(w, z.z), w.d_max() / Rational(2));
    EXPECT_LE(brute_interval(w, z.z), w.d_max());
  }
}

TEST(HalfIntegral, ComplementByCost) {
  const WpcsInstance w({{0, 1}}, ints({1}), rationals({"1/2", "1/2"}));
  EXPECT_EQ(select_half_integral(w, ints({0, 1})).z, ints({1, 0}));
  EXPECT_EQ(select_half_integral(w, ints({1, 0})).z, ints({0, 1}));
  // tie keeps the greedy answer
  EXPECT_EQ(select_half_integral(w, ints({1, 1})).z, ints({1, 0}));
}

TEST(HalfIntegral, SixElementInstance) {
  const WpcsInstance w = half_integral_wpcs();
  for (const auto& c : {ints({0, 0, 0, 0, 0, 0}), ints({5, 0, 3, 1, 2, 0}), ints({0, 4, 0, 0, 1, 7})}) {
    const Selection z = select_half_integral(w, c);
    EXPECT_TRUE(is_selection(w, z.z));
    EXPECT_LE(prefix_discrepancy(w, z.z), Rational(1));
    EXPECT_LE(dot(c, z.z), dot(c, w.y()));
    EXPECT_LE(interval_discrepancy(w, z.z), Rational(2));
  }
}

TEST(HalfIntegral, RejectsOtherShapes) {
  EXPECT_THROW(select_half_integral(WpcsInstance({{0, 1}}, ints({1}), rationals({"1/4", "3/4"})), ints({0, 0})),
               InputError);
  EXPECT_THROW(select_half_integral(WpcsInstance({{0}}, ints({1}), ints({1})), ints({0})), InputError);
}

TEST(Grid, ExponentAndEpsilon) {
  EXPECT_EQ(grid_exponent(6, Rational(1, 2)), 4);
  EXPECT_EQ(grid_exponent(4, Rational(1)), 2);
  EXPECT_THROW(grid_exponent(3, Rational(0)), InputError);
  // loads 2/3, 4/3 and demand 2: Q = 3
  const WpcsInstance w({{0, 1}}, ints({2}), rationals({"1/3", "2/3"}));
  EXPECT_EQ(cost_epsilon(w), Rational(1, 12));
}

TEST(Grid, RoundToGrid) {
  const WpcsInstance w({{0, 1}}, ints({1}), rationals({"1/3", "2/3"}));
  const WpcsInstance r = round_to_grid(w, ints({0, 1}), 2);
  EXPECT_EQ(r.y(), rationals({"1/2", "1/2"}));
  EXPECT_LE(dot(ints({0, 1}), r.y()), dot(ints({0, 1}), w.y()));

  const WpcsInstance on_grid({{0, 1, 2}}, ints({1}), rationals({"1/4", "1/2", "1/4"}));
  EXPECT_EQ(round_to_grid(on_grid, ints({3, 1, 2}), 2).y(), on_grid.y());

  // equal costs: the smallest index takes the remainder
  const WpcsInstance tie({{0, 1}}, ints({1}), rationals({"1/3", "2/3"}));
  EXPECT_EQ(round_to_grid(tie, ints({1, 1}), 1).y(), rationals({"1/2", "1/2"}));
  EXPECT_EQ(round_to_grid(tie, ints({1, 1}), 2).y(), rationals({"1/2", "1/2"}));
  EXPECT_EQ(round_to_grid(tie, ints({1, 1}), 3).y(), rationals({"3/8", "5/8"}));
}

TEST(Grid, HalveGrid) {
  const WpcsInstance coarse({{0, 1}}, ints({1}), rationals({"1/2", "1/2"}));
  EXPECT_EQ(halve_grid(coarse, ints({0, 0}), 2).y(), coarse.y());

  const WpcsInstance w({{0, 1}}, ints({1}), rationals({"1/4", "3/4"}));
  const WpcsInstance h = halve_grid(w, ints({0, 0}), 2);
  const bool allowed = h.y() == rationals({"1/2", "1/2"}) || h.y() == rationals({"0", "1"});
  EXPECT_TRUE(allowed);
  EXPECT_LE(prefix_discrepancy(w, h.y()), Rational(1, 4));
  EXPECT_THROW(halve_grid(w, ints({0, 0}), 1), InputError);
  EXPECT_THROW(halve_grid(w, ints({0, 0}), 0), InputError);
}

TEST(Costs, ZeroCostsKeepBounds) {
  std::mt19937 gen(3);
  for (int round = 0; round < 40; ++round) {
    const WpcsInstance w = random_nested(gen, 1 + round % 15);
    const Selection z = select_with_costs(w, std::vector<Rational>(w.size()));
    ASSERT_TRUE(z.integral);
    ASSERT_TRUE(is_selection(w, z.z));
    EXPECT_LE(prefix_discrepancy(w, z.z), w.d_max());
  }
}

TEST(Costs, SkewedPair) {
  const Rational eps(1, 100);
  const WpcsInstance w = skewed_pair_wpcs(eps);
  const std::vector<Rational> c = ints({0, 1});
  const Selection z = select_with_costs(w, c);
  EXPECT_EQ(z.z, ints({1, 0}));
  EXPECT_LE(dot(c, z.z), dot(c, w.y()));
  EXPECT_EQ(prefix_discrepancy(w, z.z), Rational(99, 100));
}

TEST(Costs, RandomCostsNeverIncrease) {
  std::mt19937 gen(17);
  for (int round = 0; round < 80; ++round) {
    const WpcsInstance w = random_nested(gen, 1 + round % 20);
    std::vector<Rational> c;
    for (int i = 0; i < w.size(); ++i) c.push_back(Rational(static_cast<long>(gen() % 21), 2));
    const Selection z = select_with_costs(w, c);
    ASSERT_TRUE(z.integral);
    ASSERT_TRUE(is_selection(w, z.z));
    EXPECT_LE(dot(c, z.z), dot(c, w.y()));
    EXPECT_LE(prefix_discrepancy(w, z.z), w.d_max());
    EXPECT_LE(interval_discrepancy(w, z.z), Rational(2) * w.d_max());
  }
}
