// End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit
// if any of them fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ssuf/bench.hpp"
#include "ssuf/discrepancy.hpp"
#include "ssuf/fixtures.hpp"
#include "ssuf/generator.hpp"
#include "ssuf/oracle.hpp"
#include "ssuf/path_decomposition.hpp"
#include "ssuf/solver.hpp"

using namespace ssuf;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const char* name, const std::function<Outcome()>& body) {
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  if (!out.pass) ++failures;
  std::printf("%s criterion %d (%s): %s\n", out.pass ? "PASS" : "FAIL", id, name, out.detail.c_str());
  std::fflush(stdout);
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Grids and layered fans up to 8 x 8 with at most 10 terminals.
std::vector<PssufInstance> generated_instances(int count, std::uint64_t seed) {
  Rng pick(seed);
  std::vector<PssufInstance> out;
  for (int i = 0; i < count; ++i) {
    GeneratorSpec spec;
    spec.kind = i % 4 == 3 ? GeneratorKind::layered_fan : GeneratorKind::grid;
    spec.rows = static_cast<int>(pick.between(2, 8));
    spec.cols = static_cast<int>(pick.between(2, 8));
    const int boundary = spec.kind == GeneratorKind::grid ? 2 * (spec.rows + spec.cols) - 5
                                                          : spec.cols + 2 * (spec.rows - 1);
    spec.terminal_count = static_cast<int>(pick.between(1, std::min(10, boundary)));
    spec.path_samples = static_cast<int>(pick.between(spec.terminal_count, 3 * spec.terminal_count + 5));
    spec.seed = seed * 1000 + i;
    out.push_back(generate(spec));
  }
  return out;
}

// Random nested partition of 0..l-1 with small-denominator y.
WpcsInstance random_wpcs(Rng& rng, int l, int max_set = 1 << 30) {
  std::vector<int> label(l);
  std::vector<int> open;
  std::vector<int> size;
  for (int i = 0; i < l; ++i) {
    const long action = rng.between(0, 2);
    if (!open.empty() && action == 1 && open.size() > 1) open.pop_back();
    if (open.empty() || action == 0 || size[open.back()] >= max_set) {
      open.push_back(static_cast<int>(size.size()));
      size.push_back(0);
    }
    label[i] = open.back();
    ++size[open.back()];
  }
  std::vector<std::vector<int>> sets(size.size());
  for (int i = 0; i < l; ++i) sets[label[i]].push_back(i);
  std::vector<Rational> demands, y(l);
  for (const auto& s : sets) {
    demands.push_back(rng.rational_between(Rational(1, 2), Rational(10), 6));
    std::vector<long> parts;
    long total = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
      parts.push_back(rng.between(0, 6));
      total += parts.back();
    }
    if (total == 0) parts[0] = total = 1;
    for (std::size_t k = 0; k < s.size(); ++k) y[s[k]] = Rational(parts[k], total);
  }
  return WpcsInstance(std::move(sets), std::move(demands), std::move(y));
}

Outcome decomposition_exactness(const std::vector<PssufInstance>& instances) {
  const auto start = Clock::now();
  std::size_t paths = 0;
  for (std::size_t n = 0; n < instances.size(); ++n) {
    const PssufInstance inst = strip_zero_flow(normalize_terminals(instances[n]).instance).instance;
    const ArcSplitDecomposition dec = decompose(inst);
    std::vector<Rational> rebuilt(inst.graph.arc_count());
    for (int i = 0; i < dec.path_count(); ++i) {
      for (ArcId f : dec.paths[i]) rebuilt[dec.phi[f]] += dec.weights[i];
    }
    if (rebuilt != inst.flow) return {false, "instance " + std::to_string(n) + ": weights do not rebuild x"};
    const NiceReport nice = check_nice(inst, dec);
    if (!nice.ok()) return {false, "instance " + std::to_string(n) + ": " + nice.summary()};
    paths += dec.paths.size();
  }
  const double elapsed = seconds_since(start);
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu instances, %zu paths, exact and nice, %.2f s", instances.size(), paths,
                elapsed);
  return {elapsed < 10.0, buf};
}

Outcome prefix_bound() {
  Rng rng(61);
  for (int n = 0; n < 500; ++n) {
    const WpcsInstance w = random_wpcs(rng, static_cast<int>(rng.between(1, 50)));
    const Selection z = prefix_greedy_select(w);
    if (!z.integral) return {false, "fractional output"};
    if (prefix_discrepancy(w, z.z) > w.d_max() / Rational(2)) return {false, "prefix bound broken at " + std::to_string(n)};
    const Rational fast = interval_discrepancy(w, z.z);
    const Rational slow = naive_interval_discrepancy(w, z.z);
    if (fast != slow) return {false, "evaluators disagree at " + std::to_string(n)};
    if (fast > w.d_max()) return {false, "interval bound broken at " + std::to_string(n)};
  }
  return {true, "500 instances, |D^j| <= d_max/2 and interval <= d_max (both evaluators)"};
}

Outcome oracle_sandwich() {
  Rng rng(73);
  int done = 0;
  Rational worst_gap;
  while (done < 100) {
    const WpcsInstance w = random_wpcs(rng, static_cast<int>(rng.between(1, 16)), 5);
    long product = 1;
    for (const auto& s : w.sets()) product *= static_cast<long>(s.size());
    if (product > 10000) continue;
    const Rational greedy = interval_discrepancy(w, prefix_greedy_select(w).z);
    const Rational best = oracle_selection_minimax(w, 10000).first;
    if (greedy < best || greedy > w.d_max()) return {false, "instance " + std::to_string(done) + " out of range"};
    worst_gap = max(worst_gap, greedy - best);
    ++done;
  }
  return {true, "100 instances, oracle <= greedy <= d_max, largest gap " + worst_gap.str()};
}

Outcome half_integral_tightness() {
  const WpcsInstance w = half_integral_wpcs();
  const Rational value = oracle_selection_minimax(w).first;
  const bool ok = value == Rational(3, 2) && value > w.d_max() / Rational(2) && value <= w.d_max();
  return {ok, "minimax " + value.str() + ", d_max/2 = " + (w.d_max() / Rational(2)).str()};
}

Outcome cost_fixture() {
  const WpcsInstance w = skewed_pair_wpcs(Rational(1, 100));
  const std::vector<Rational> c{Rational(0), Rational(1)};
  const Selection z = select_with_costs(w, c);
  const Rational prefix = prefix_discrepancy(w, z.z);
  const bool ok = z.z == std::vector<Rational>{Rational(1), Rational(0)} && prefix == Rational(99, 100) &&
                  prefix <= w.d_max() && dot(c, z.z) <= dot(c, w.y());
  return {ok, "z = (" + z.z[0].str() + ", " + z.z[1].str() + "), prefix discrepancy " + prefix.str()};
}

Outcome end_to_end(const std::vector<PssufInstance>& instances) {
  Rational worst;
  for (std::size_t n = 0; n < instances.size(); ++n) {
    const UnsplittableFlow sol = solve(instances[n]);
    const VerificationReport check = verify_solution(instances[n], sol, BoundMultiplier::one);
    if (!check.ok()) return {false, "instance " + std::to_string(n) + ": " + check.failures.front()};
    if (sol.certificate.max_abs_deviation > instances[n].d_max()) return {false, "certificate over bound"};
    worst = max(worst, check.max_abs_deviation / instances[n].d_max());
  }
  return {true, std::to_string(instances.size()) + " instances verified, worst deviation/d_max " + worst.str()};
}

Outcome end_to_end_costs(const std::vector<PssufInstance>& instances) {
  Rng rng(97);
  Rational worst;
  for (std::size_t n = 0; n < instances.size(); ++n) {
    const std::vector<Rational> c = random_costs(instances[n].graph.arc_count(), Rational(10), rng);
    const UnsplittableFlow sol = solve_with_costs(instances[n], c);
    const VerificationReport check = verify_solution(instances[n], sol, BoundMultiplier::two, c);
    if (!check.ok()) return {false, "instance " + std::to_string(n) + ": " + check.failures.front()};
    worst = max(worst, check.max_abs_deviation / instances[n].d_max());
  }
  return {true, std::to_string(instances.size()) +
                    " instances, c.flow <= c.x everywhere, worst deviation/d_max " + worst.str()};
}

Outcome disjoint_paths_family() {
  std::string detail;
  for (int k = 2; k <= 6; ++k) {
    const PssufInstance inst = k_disjoint_instance(k);
    const Rational best = *oracle_min_deviation(inst);
    const Rational got = solve(inst).certificate.max_abs_deviation;
    if (best != Rational(k - 1) || got != Rational(k - 1) || got > inst.d_max()) {
      return {false, "k=" + std::to_string(k) + ": oracle " + best.str() + ", solve " + got.str()};
    }
    detail += (detail.empty() ? "" : ", ") + ("k=" + std::to_string(k) + ": " + got.str());
  }
  return {true, "oracle minimum equals solve deviation, " + detail};
}

Outcome gadget() {
  const Fig1Gadget g = fig1_gadget();
  const PssufInstance& inst = g.instance;
  const Rational excess = Rational(3, 2) * inst.d_max();
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<Rational> flow(inst.graph.arc_count());
    for (int k = 0; k < 3; ++k) {
      for (ArcId a : g.paths[k][(mask >> k) & 1]) flow[a] += inst.terminals[k].d;
    }
    Rational worst;
    for (ArcId a = 0; a < inst.graph.arc_count(); ++a) worst = max(worst, abs(inst.flow[a] - flow[a]));
    if (worst < excess) return {false, "selection " + std::to_string(mask) + " stays within " + worst.str()};
  }
  const UnsplittableFlow sol = solve(inst);
  const VerificationReport check = verify_solution(inst, sol, BoundMultiplier::one);
  return {check.ok(), "all 8 selections of the drawn paths reach " + excess.str() + "; solve reaches " +
                          check.max_abs_deviation.str() + " <= " + inst.d_max().str()};
}

Outcome complexity() {
  const std::vector<BenchRow> rows = run_grid_bench({25, 50, 100, 200}, 2024, 3);
  std::vector<double> ratio;
  std::string detail;
  for (const BenchRow& r : rows) {
    ratio.push_back(r.wall_ms / (static_cast<double>(r.vertices) * r.vertices));
    char buf[96];
    std::snprintf(buf, sizeof buf, "n=%d l=%d %.1f ms; ", r.size, r.path_count, r.wall_ms);
    detail += buf;
  }
  const auto [lo, hi] = std::minmax_element(ratio.begin(), ratio.end());
  // c = sqrt(lo * hi) puts every point within a factor of 4 iff hi / lo <= 16
  const double spread = *hi / *lo;
  char buf[96];
  std::snprintf(buf, sizeof buf, "t/|V|^2 spread %.2f (limit 16)", spread);
  return {spread <= 16.0, detail + buf};
}

}  // namespace

int main() {
  const std::vector<PssufInstance> instances = generated_instances(200, 17);
  report(1, "decomposition exactness", [&] { return decomposition_exactness(instances); });
  report(2, "prefix bound", prefix_bound);
  report(3, "oracle sandwich", oracle_sandwich);
  report(4, "half-integral tightness", half_integral_tightness);
  report(5, "cost fixture", cost_fixture);
  report(6, "end-to-end without costs", [&] { return end_to_end(instances); });
  report(7, "end-to-end with costs", [&] { return end_to_end_costs(instances); });
  report(8, "disjoint unit paths", disjoint_paths_family);
  report(9, "three-terminal gadget", gadget);
  report(10, "quadratic running time", complexity);
  return failures == 0 ? 0 : 1;
}
