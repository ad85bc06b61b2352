#include "ssuf/discrepancy.hpp"

#include <algorithm>
#include <map>

#include "ssuf/errors.hpp"

namespace ssuf {

bool labels_non_interleaving(const std::vector<int>& labels) {
  std::map<int, std::size_t> last;
  for (std::size_t i = 0; i < labels.size(); ++i) last[labels[i]] = i;
  std::vector<int> open;
  std::map<int, bool> is_open;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const int c = labels[i];
    if (is_open[c]) {
      if (open.back() != c) return false;  // a label opened after c is still pending
    } else {
      open.push_back(c);
      is_open[c] = true;
    }
    if (last[c] == i) {
      open.pop_back();
      is_open[c] = false;
    }
  }
  return true;
}

WpcsInstance::WpcsInstance(std::vector<std::vector<int>> sets, std::vector<Rational> demands, std::vector<Rational> y)
    : sets_(std::move(sets)), demands_(std::move(demands)), y_(std::move(y)) {
  const int l = size();
  if (demands_.size() != sets_.size()) throw InputError("need one demand per set");
  set_of_.assign(l, -1);
  for (std::size_t s = 0; s < sets_.size(); ++s) {
    if (sets_[s].empty()) throw InputError("set " + std::to_string(s) + " is empty");
    if (demands_[s].is_negative()) throw InputError("set " + std::to_string(s) + " has negative demand");
    d_max_ = max(d_max_, demands_[s]);
    Rational total;
    for (int i : sets_[s]) {
      if (i < 0 || i >= l) throw InputError("index " + std::to_string(i) + " out of range");
      if (set_of_[i] >= 0) throw InputError("index " + std::to_string(i) + " is in two sets");
      set_of_[i] = static_cast<int>(s);
      if (y_[i].is_negative() || y_[i] > Rational(1)) throw InputError("y is outside [0, 1] at " + std::to_string(i));
      total += y_[i];
    }
    if (total != Rational(1)) throw InputError("y sums to " + total.str() + " on set " + std::to_string(s));
  }
  for (int i = 0; i < l; ++i) {
    if (set_of_[i] < 0) throw InputError("index " + std::to_string(i) + " is in no set");
  }
  non_interleaving_ = labels_non_interleaving(set_of_);
}

WpcsInstance WpcsInstance::with_y(std::vector<Rational> y) const { return WpcsInstance(sets_, demands_, std::move(y)); }

Selection make_selection(std::vector<Rational> z) {
  Selection s;
  s.integral = std::all_of(z.begin(), z.end(), [](const Rational& v) { return v.is_zero() || v == Rational(1); });
  s.z = std::move(z);
  return s;
}

std::vector<Rational> prefix_deviation(const WpcsInstance& wpcs, const std::vector<Rational>& z) {
  if (static_cast<int>(z.size()) != wpcs.size()) {
    throw InputError("selection has length " + std::to_string(z.size()) + ", expected " + std::to_string(wpcs.size()));
  }
  std::vector<Rational> d(wpcs.size() + 1);
  for (int i = 0; i < wpcs.size(); ++i) d[i + 1] = d[i] + wpcs.demand_at(i) * (wpcs.y()[i] - z[i]);
  return d;
}

Rational prefix_discrepancy(const WpcsInstance& wpcs, const std::vector<Rational>& z) {
  Rational best;
  for (const Rational& v : prefix_deviation(wpcs, z)) best = max(best, abs(v));
  return best;
}

Rational interval_discrepancy(const WpcsInstance& wpcs, const std::vector<Rational>& z) {
  const std::vector<Rational> d = prefix_deviation(wpcs, z);
  if (!d.back().is_zero()) throw InputError("z is not a selection: total deviation " + d.back().str());
  const auto [lo, hi] = std::minmax_element(d.begin(), d.end());
  return *hi - *lo;
}

Rational dot(const std::vector<Rational>& c, const std::vector<Rational>& z) {
  if (c.size() != z.size()) throw InputError("cost vector length mismatch");
  Rational sum;
  for (std::size_t i = 0; i < c.size(); ++i) sum += c[i] * z[i];
  return sum;
}

Selection prefix_greedy_select(const WpcsInstance& wpcs) {
  if (!wpcs.non_interleaving()) throw UnsupportedInstance("partition is interleaving");
  const int l = wpcs.size();
  std::vector<int> last(wpcs.sets().size(), -1);
  for (int i = 0; i < l; ++i) last[wpcs.set_of(i)] = i;
  std::vector<char> chosen(wpcs.sets().size(), 0);
  const Rational half = wpcs.d_max() / Rational(2);

  std::vector<Rational> z(l);
  Rational deviation;  // D^{j-1}
  for (int j = 0; j < l; ++j) {
    const int s = wpcs.set_of(j);
    const Rational& d = wpcs.demands()[s];
    const Rational load = d * wpcs.y()[j];
    bool take;
    if (chosen[s]) {
      take = false;
    } else if (j == last[s]) {
      take = true;
    } else {
      take = deviation + load - d >= -half;
    }
    if (take) {
      z[j] = Rational(1);
      chosen[s] = 1;
      deviation += load - d;
    } else {
      deviation += load;
    }
  }
  return make_selection(std::move(z));
}

Selection select_half_integral(const WpcsInstance& wpcs, const std::vector<Rational>& c) {
  if (static_cast<int>(c.size()) != wpcs.size()) throw InputError("cost vector length mismatch");
  const Rational half(1, 2);
  for (const auto& s : wpcs.sets()) {
    if (s.size() != 2) throw InputError("half-integral instances need sets of size two");
  }
  for (const Rational& v : wpcs.y()) {
    if (v != half) throw InputError("half-integral instances need y = 1/2 everywhere");
  }
  Selection z = prefix_greedy_select(wpcs);
  std::vector<Rational> complement(z.z.size());
  for (std::size_t i = 0; i < z.z.size(); ++i) complement[i] = Rational(1) - z.z[i];
  if (dot(c, complement) < dot(c, z.z)) return make_selection(std::move(complement));
  return z;
}

int grid_exponent(int l, const Rational& epsilon) {
  if (!epsilon.is_positive()) throw InputError("epsilon must be positive");
  if (l == 0) return 0;
  return ceil_log2(Rational(l) / epsilon);
}

WpcsInstance round_to_grid(const WpcsInstance& wpcs, const std::vector<Rational>& c, int k) {
  if (static_cast<int>(c.size()) != wpcs.size()) throw InputError("cost vector length mismatch");
  std::vector<Rational> y = wpcs.y();
  for (const auto& s : wpcs.sets()) {
    int cheapest = s.front();
    for (int i : s) {
      if (c[i] < c[cheapest] || (c[i] == c[cheapest] && i < cheapest)) cheapest = i;
    }
    Rational rest(1);
    for (int i : s) {
      if (i == cheapest) continue;
      y[i] = y[i].floor_to_pow2(k);
      rest -= y[i];
    }
    y[cheapest] = rest;
  }
  return wpcs.with_y(std::move(y));
}

WpcsInstance halve_grid(const WpcsInstance& wpcs, const std::vector<Rational>& c, int k) {
  if (k < 1) throw InputError("grid exponent must be at least 1");
  if (static_cast<int>(c.size()) != wpcs.size()) throw InputError("cost vector length mismatch");
  for (const Rational& v : wpcs.y()) {
    if (!v.is_multiple_of_pow2(k)) throw InputError("y is not on the 2^-" + std::to_string(k) + " grid");
  }

  // odd entries, paired consecutively inside each set
  std::vector<int> partner(wpcs.size(), -1);
  std::vector<int> odd;
  for (const auto& s : wpcs.sets()) {
    std::vector<int> members;
    for (int i : s) {
      if (!wpcs.y()[i].is_multiple_of_pow2(k - 1)) members.push_back(i);
    }
    std::sort(members.begin(), members.end());
    if (members.size() % 2 != 0) throw std::logic_error("odd number of off-grid entries in a set");
    for (std::size_t m = 0; m < members.size(); m += 2) {
      partner[members[m]] = members[m + 1];
      partner[members[m + 1]] = members[m];
    }
    odd.insert(odd.end(), members.begin(), members.end());
  }
  if (odd.empty()) return wpcs;
  std::sort(odd.begin(), odd.end());

  std::vector<int> local(wpcs.size(), -1);
  for (std::size_t m = 0; m < odd.size(); ++m) local[odd[m]] = static_cast<int>(m);
  std::vector<std::vector<int>> pairs;
  std::vector<Rational> pair_demand;
  std::vector<Rational> sub_cost;
  for (int i : odd) {
    sub_cost.push_back(c[i]);
    if (partner[i] > i) {
      pairs.push_back({local[i], local[partner[i]]});
      pair_demand.push_back(wpcs.demand_at(i));
    }
  }
  const WpcsInstance sub(std::move(pairs), std::move(pair_demand),
                         std::vector<Rational>(odd.size(), Rational(1, 2)));
  if (!sub.non_interleaving()) throw std::logic_error("pairing produced an interleaving partition");
  const Selection pick = select_half_integral(sub, sub_cost);

  const Rational step = Rational::pow2(-k);
  std::vector<Rational> y = wpcs.y();
  for (std::size_t m = 0; m < odd.size(); ++m) {
    y[odd[m]] += pick.z[m].is_zero() ? -step : step;
  }
  return wpcs.with_y(std::move(y));
}

Rational cost_epsilon(const WpcsInstance& wpcs) {
  mpz_class q = 1;
  for (const Rational& d : wpcs.demands()) q = lcm(q, d.denominator());
  for (int i = 0; i < wpcs.size(); ++i) q = lcm(q, (wpcs.demand_at(i) * wpcs.y()[i]).denominator());
  return Rational(1) / (Rational(mpq_class(q)) * Rational(2) * max(wpcs.d_max(), Rational(1)));
}

Selection select_with_costs(const WpcsInstance& wpcs, const std::vector<Rational>& c) {
  if (!wpcs.non_interleaving()) throw UnsupportedInstance("partition is interleaving");
  if (static_cast<int>(c.size()) != wpcs.size()) throw InputError("cost vector length mismatch");
  const int k = grid_exponent(wpcs.size(), cost_epsilon(wpcs));
  WpcsInstance current = round_to_grid(wpcs, c, k);
  for (int j = k; j >= 1; --j) current = halve_grid(current, c, j);
  return make_selection(current.y());
}

}  // namespace ssuf
