#pragma once

#include <vector>

#include "ssuf/rational.hpp"

namespace ssuf {

/// True iff no labels a != b appear as a ... b ... a ... b.
bool labels_non_interleaving(const std::vector<int>& labels);

/// Partitioned selection instance. Indices are 0-based; sets partition
/// 0..l-1, each set carries a demand, and y sums to one inside every set.
class WpcsInstance {
 public:
  /// Throws InputError unless sets partition 0..l-1 and y is a fractional selection.
  WpcsInstance(std::vector<std::vector<int>> sets, std::vector<Rational> demands, std::vector<Rational> y);

  int size() const { return static_cast<int>(y_.size()); }
  const std::vector<std::vector<int>>& sets() const { return sets_; }
  const std::vector<Rational>& demands() const { return demands_; }
  const std::vector<Rational>& y() const { return y_; }
  int set_of(int i) const { return set_of_[i]; }
  const Rational& demand_at(int i) const { return demands_[set_of_[i]]; }
  const Rational& d_max() const { return d_max_; }
  bool non_interleaving() const { return non_interleaving_; }

  /// Same partition and demands with another fractional selection.
  WpcsInstance with_y(std::vector<Rational> y) const;

 private:
  std::vector<std::vector<int>> sets_;
  std::vector<Rational> demands_;
  std::vector<Rational> y_;
  std::vector<int> set_of_;
  Rational d_max_;
  bool non_interleaving_ = true;
};

struct Selection {
  std::vector<Rational> z;
  bool integral = false;
};

Selection make_selection(std::vector<Rational> z);

/// D^0..D^l with D^j = y^d([j]) - z^d([j]). Throws InputError on length mismatch.
std::vector<Rational> prefix_deviation(const WpcsInstance& wpcs, const std::vector<Rational>& z);

/// max_j |D^j|.
Rational prefix_discrepancy(const WpcsInstance& wpcs, const std::vector<Rational>& z);

/// Max over circular intervals of |y^d(I) - z^d(I)|, as max D - min D.
/// z must be a selection (InputError otherwise).
Rational interval_discrepancy(const WpcsInstance& wpcs, const std::vector<Rational>& z);

Rational dot(const std::vector<Rational>& c, const std::vector<Rational>& z);

/// Left-to-right greedy keeping every prefix deviation within d_max/2.
/// Throws UnsupportedInstance if the partition interleaves.
Selection prefix_greedy_select(const WpcsInstance& wpcs);

/// For instances whose sets are pairs and y = 1/2: the greedy result or its
/// complement, whichever is cheaper (the greedy one on ties).
Selection select_half_integral(const WpcsInstance& wpcs, const std::vector<Rational>& c);

/// Smallest k with 2^k >= l / epsilon.
int grid_exponent(int l, const Rational& epsilon);

/// Rounds y down to multiples of 2^-k except at the cheapest index of each set
/// (smallest index on ties), which takes the remainder.
WpcsInstance round_to_grid(const WpcsInstance& wpcs, const std::vector<Rational>& c, int k);

/// Moves a 2^-k grid selection onto the 2^-(k-1) grid without raising cost.
WpcsInstance halve_grid(const WpcsInstance& wpcs, const std::vector<Rational>& c, int k);

/// 1 / (2 Q max(d_max, 1)) where Q is the lcm of the denominators of all loads and demands.
Rational cost_epsilon(const WpcsInstance& wpcs);

/// Integral selection with c.z <= c.y and prefix deviation at most d_max.
Selection select_with_costs(const WpcsInstance& wpcs, const std::vector<Rational>& c);

}  // namespace ssuf
