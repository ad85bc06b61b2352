#include "ssuf/oracle.hpp"

#include <algorithm>

#include "ssuf/errors.hpp"

namespace ssuf {

Rational naive_interval_discrepancy(const WpcsInstance& wpcs, const std::vector<Rational>& z) {
  const int l = wpcs.size();
  if (static_cast<int>(z.size()) != l) throw InputError("selection length differs from l");
  Rational worst(0);
  for (int start = 0; start < l; ++start) {
    for (int len = 1; len <= l; ++len) {
      Rational sum(0);
      for (int k = 0; k < len; ++k) {
        const int i = (start + k) % l;
        sum += wpcs.demand_at(i) * (wpcs.y()[i] - z[i]);
      }
      worst = max(worst, abs(sum));
    }
  }
  return worst;
}

namespace {

// Loads scaled to integers by a common denominator, so the search runs on mpz.
struct ScaledLoads {
  mpz_class scale;
  std::vector<mpz_class> y_load;
  std::vector<mpz_class> unit_load;  // d_S for index i
};

ScaledLoads scale_loads(const WpcsInstance& wpcs) {
  ScaledLoads out;
  out.scale = 1;
  const int l = wpcs.size();
  for (int i = 0; i < l; ++i) {
    out.scale = lcm(out.scale, (wpcs.demand_at(i) * wpcs.y()[i]).denominator());
    out.scale = lcm(out.scale, wpcs.demand_at(i).denominator());
  }
  const Rational scale(mpq_class(out.scale));
  for (int i = 0; i < l; ++i) {
    out.y_load.push_back((wpcs.demand_at(i) * wpcs.y()[i] * scale).numerator());
    out.unit_load.push_back((wpcs.demand_at(i) * scale).numerator());
  }
  return out;
}

}  // namespace

std::pair<Rational, Selection> oracle_selection_minimax(const WpcsInstance& wpcs, long cap) {
  const auto& sets = wpcs.sets();
  long states = 1;
  for (const auto& s : sets) {
    if (s.empty()) return {Rational(0), make_selection(wpcs.y())};
    if (states > cap / static_cast<long>(s.size())) throw CapExceeded("more than " + std::to_string(cap) + " selections");
    states *= static_cast<long>(s.size());
  }

  const int l = wpcs.size();
  const ScaledLoads loads = scale_loads(wpcs);
  std::vector<int> choice(sets.size(), 0);
  std::vector<mpz_class> diff(l);
  std::optional<mpz_class> best;
  std::vector<int> best_choice;
  mpz_class sum, worst, magnitude;

  for (long state = 0; state < states; ++state) {
    for (int i = 0; i < l; ++i) diff[i] = loads.y_load[i];
    for (std::size_t k = 0; k < sets.size(); ++k) diff[sets[k][choice[k]]] -= loads.unit_load[sets[k][choice[k]]];
    worst = 0;
    for (int start = 0; start < l; ++start) {
      sum = 0;
      for (int len = 0; len < l; ++len) {
        sum += diff[(start + len) % l];
        magnitude = abs(sum);
        if (magnitude > worst) worst = magnitude;
      }
      if (best && worst >= *best) break;
    }
    if (!best || worst < *best) {
      best = worst;
      best_choice = choice;
    }
    for (std::size_t k = 0; k < sets.size(); ++k) {
      if (++choice[k] < static_cast<int>(sets[k].size())) break;
      choice[k] = 0;
    }
  }

  std::vector<Rational> z(l, Rational(0));
  for (std::size_t k = 0; k < sets.size(); ++k) z[sets[k][best_choice[k]]] = Rational(1);
  return {Rational(mpq_class(*best, loads.scale)), make_selection(std::move(z))};
}

std::vector<std::vector<ArcId>> enumerate_simple_paths(const Graph& g, VertexId s, VertexId t, long cap) {
  if (!g.contains_vertex(s) || !g.contains_vertex(t)) throw InputError("unknown endpoint");
  const Adjacency adj(g);
  std::vector<std::vector<ArcId>> out;
  std::vector<ArcId> path;
  std::vector<char> on_path(g.vertex_count, 0);
  auto walk = [&](auto& self, VertexId v) -> void {
    if (v == t) {
      if (static_cast<long>(out.size()) >= cap) throw CapExceeded("more than " + std::to_string(cap) + " paths");
      out.push_back(path);
      return;
    }
    on_path[v] = 1;
    for (ArcId a : adj.out[v]) {
      const VertexId w = g.arcs[a].head;
      if (on_path[w]) continue;
      path.push_back(a);
      self(self, w);
      path.pop_back();
    }
    on_path[v] = 0;
  };
  walk(walk, s);
  return out;
}

std::optional<Rational> oracle_min_deviation(const PssufInstance& inst, long cap) {
  std::vector<std::vector<std::vector<ArcId>>> options;
  std::vector<Rational> demand;
  long states = 1;
  for (const Terminal& t : inst.terminals) {
    if (t.d.is_zero()) continue;
    options.push_back(enumerate_simple_paths(inst.graph, inst.source, t.v, cap));
    demand.push_back(t.d);
    if (options.back().empty()) return std::nullopt;
    if (states > cap / static_cast<long>(options.back().size())) {
      throw CapExceeded("more than " + std::to_string(cap) + " path families");
    }
    states *= static_cast<long>(options.back().size());
  }

  std::vector<Rational> load(inst.graph.arc_count(), Rational(0));
  std::optional<Rational> best;
  auto search = [&](auto& self, std::size_t k) -> void {
    if (k == options.size()) {
      Rational worst(0);
      for (ArcId a = 0; a < inst.graph.arc_count(); ++a) worst = max(worst, abs(inst.flow[a] - load[a]));
      if (!best || worst < *best) best = worst;
      return;
    }
    for (const auto& path : options[k]) {
      for (ArcId a : path) load[a] += demand[k];
      self(self, k + 1);
      for (ArcId a : path) load[a] -= demand[k];
    }
  };
  search(search, 0);
  return best;
}

bool oracle_enumerate_unsplittable(const PssufInstance& inst, const Rational& multiplier, long cap) {
  const std::optional<Rational> best = oracle_min_deviation(inst, cap);
  return best && *best <= multiplier * inst.d_max();
}

}  // namespace ssuf
