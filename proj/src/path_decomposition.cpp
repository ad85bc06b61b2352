#include "ssuf/path_decomposition.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ssuf/discrepancy.hpp"
#include "ssuf/errors.hpp"

namespace ssuf {

GoodVWiring compute_good_wiring(const PssufInstance& instance, VertexId v) {
  return compute_good_wiring(instance, RotationSystem(instance.graph, instance.rotation), v);
}

GoodVWiring compute_good_wiring(const PssufInstance& instance, const RotationSystem& rotation, VertexId v) {
  GoodVWiring wiring;
  wiring.v = v;

  // circular doubly linked list over the positive arcs around v
  std::vector<ArcId> arc;
  std::vector<Rational> rest;
  std::vector<char> incoming;
  Rational in_sum, out_sum;
  for (ArcId a : rotation.around(v)) {
    if (!instance.flow[a].is_positive()) continue;
    arc.push_back(a);
    rest.push_back(instance.flow[a]);
    const bool in = rotation.ends(a).head == v;
    incoming.push_back(in);
    (in ? in_sum : out_sum) += instance.flow[a];
  }
  if (in_sum != out_sum) {
    throw InputError("flow not conserved at vertex " + std::to_string(v) + ": in " + in_sum.str() + ", out " +
                     out_sum.str());
  }
  const int n = static_cast<int>(arc.size());
  std::vector<int> next(n), prev(n);
  for (int i = 0; i < n; ++i) {
    next[i] = (i + 1) % n;
    prev[i] = (i + n - 1) % n;
  }
  std::vector<char> alive(n, 1);
  int remaining = n;

  auto candidate = [&](int i) { return alive[i] && incoming[i] && next[i] != i && !incoming[next[i]]; };
  auto unlink = [&](int i) {
    next[prev[i]] = next[i];
    prev[next[i]] = prev[i];
    alive[i] = 0;
    --remaining;
  };

  std::vector<int> stack;  // may hold stale entries, checked on pop
  for (int i = 0; i < n; ++i) {
    if (candidate(i)) stack.push_back(i);
  }

  while (remaining > 0) {
    while (!stack.empty() && !candidate(stack.back())) stack.pop_back();
    if (stack.empty()) throw std::logic_error("wiring: no in-arc followed by an out-arc");
    const int a = stack.back();
    const int b = next[a];
    const Rational mu = min(rest[a], rest[b]);
    wiring.pairs.emplace_back(arc[a], arc[b]);
    wiring.loads.push_back(mu);
    rest[a] -= mu;
    rest[b] -= mu;

    if (rest[b].is_zero()) unlink(b);
    if (rest[a].is_zero()) {
      const int p = prev[a];
      unlink(a);
      if (remaining > 0 && candidate(p)) stack.push_back(p);
    }
  }
  return wiring;
}

std::vector<std::string> wiring_defects(const PssufInstance& instance, const RotationSystem& rotation,
                                        const GoodVWiring& wiring) {
  std::vector<std::string> defects;
  const VertexId v = wiring.v;
  if (wiring.pairs.size() != wiring.loads.size()) {
    defects.push_back("pair and load counts differ");
    return defects;
  }
  if (static_cast<int>(wiring.pairs.size()) > rotation.degree(v)) defects.push_back("more pairs than deg(v)");

  std::map<ArcId, Rational> load_on;
  for (ArcId a : rotation.around(v)) load_on[a] = Rational(0);
  for (std::size_t i = 0; i < wiring.pairs.size(); ++i) {
    const auto [f, g] = wiring.pairs[i];
    if (!rotation.incident(v, f) || rotation.ends(f).head != v) {
      defects.push_back("pair " + std::to_string(i) + ": arc " + std::to_string(f) + " is not an in-arc of v");
      continue;
    }
    if (!rotation.incident(v, g) || rotation.ends(g).tail != v) {
      defects.push_back("pair " + std::to_string(i) + ": arc " + std::to_string(g) + " is not an out-arc of v");
      continue;
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (wiring.pairs[j] == wiring.pairs[i]) defects.push_back("pair " + std::to_string(i) + " repeats");
    }
    if (wiring.loads[i].is_negative()) defects.push_back("pair " + std::to_string(i) + " has negative load");
    load_on[f] += wiring.loads[i];
    load_on[g] += wiring.loads[i];
  }
  for (const auto& [a, load] : load_on) {
    if (load != instance.flow[a]) {
      defects.push_back("arc " + std::to_string(a) + " carries load " + load.str() + " but x = " +
                        instance.flow[a].str());
    }
  }
  for (std::size_t i = 0; i < wiring.pairs.size(); ++i) {
    const auto [fi, gi] = wiring.pairs[i];
    for (std::size_t j = i + 1; j < wiring.pairs.size(); ++j) {
      const auto [fj, gj] = wiring.pairs[j];
      if (fj != fi && is_progression(rotation, v, {fi, fj, gi})) {
        defects.push_back("pairs " + std::to_string(i) + ", " + std::to_string(j) + ": (f_i, f_j, g_i) progression");
      }
      if (gj != gi && is_progression(rotation, v, {fi, gj, gi})) {
        defects.push_back("pairs " + std::to_string(i) + ", " + std::to_string(j) + ": (f_i, g_j, g_i) progression");
      }
    }
  }
  return defects;
}

std::vector<ArcId> ArcSplitDecomposition::projected_path(int i) const {
  std::vector<ArcId> out;
  out.reserve(paths[i].size());
  for (ArcId f : paths[i]) out.push_back(phi[f]);
  return out;
}

namespace {

ArcSplitDecomposition split_with_order(const PssufInstance& instance, const std::vector<std::vector<ArcId>>& walks,
                                       std::vector<Rational> weights,
                                       const std::vector<std::vector<Rational>>* positions) {
  const Graph& g = instance.graph;
  const RotationSystem rotation(g, instance.rotation);
  if (weights.size() != walks.size()) throw InputError("need one weight per path");
  if (positions && positions->size() != walks.size()) throw InputError("need one position list per path");
  ArcSplitDecomposition out;
  out.split_graph.vertex_count = g.vertex_count;
  std::vector<std::vector<ArcId>> copies(g.arc_count());
  std::vector<const Rational*> place;
  for (std::size_t i = 0; i < walks.size(); ++i) {
    const auto& walk = walks[i];
    if (walk.empty()) throw InputError("empty path");
    if (positions && (*positions)[i].size() != walk.size()) throw InputError("need one position per path step");
    std::vector<ArcId> path;
    path.reserve(walk.size());
    for (std::size_t k = 0; k < walk.size(); ++k) {
      const ArcId b = walk[k];
      if (!g.contains_arc(b)) throw InputError("unknown arc " + std::to_string(b));
      const ArcId f = out.split_graph.add_arc(g.arcs[b].tail, g.arcs[b].head);
      out.phi.push_back(b);
      if (positions) place.push_back(&(*positions)[i][k]);
      copies[b].push_back(f);
      path.push_back(f);
    }
    out.terminal_of.push_back(g.arcs[walk.back()].head);
    out.paths.push_back(std::move(path));
  }
  out.weights = std::move(weights);
  if (positions) {
    for (auto& list : copies) {
      std::stable_sort(list.begin(), list.end(), [&](ArcId x, ArcId y) { return *place[x] < *place[y]; });
    }
  }

  // clockwise-first copies at the tail come last at the head
  out.split_rotation.resize(g.vertex_count);
  for (VertexId v = 0; v < g.vertex_count; ++v) {
    auto& order = out.split_rotation[v];
    for (ArcId b : rotation.around(v)) {
      if (g.arcs[b].tail == v) {
        order.insert(order.end(), copies[b].begin(), copies[b].end());
      } else {
        order.insert(order.end(), copies[b].rbegin(), copies[b].rend());
      }
    }
  }
  return out;
}

}  // namespace

ArcSplitDecomposition build_arc_split(const PssufInstance& instance, const std::vector<std::vector<ArcId>>& walks,
                                      std::vector<Rational> weights) {
  return split_with_order(instance, walks, std::move(weights), nullptr);
}

ArcSplitDecomposition build_arc_split(const PssufInstance& instance, const std::vector<std::vector<ArcId>>& walks,
                                      std::vector<Rational> weights,
                                      const std::vector<std::vector<Rational>>& positions) {
  return split_with_order(instance, walks, std::move(weights), &positions);
}

ArcSplitDecomposition decompose(const PssufInstance& instance) {
  if (const ValidationReport report = validate_instance(instance); !report.ok()) {
    throw InputError("invalid instance: " + report.summary());
  }
  const Graph& g = instance.graph;
  const Adjacency adj(g);
  std::vector<char> is_terminal(g.vertex_count, 0);
  for (const Terminal& t : instance.terminals) {
    if (!adj.out[t.v].empty()) throw InputError("terminal " + std::to_string(t.v) + " has outgoing arcs");
    is_terminal[t.v] = 1;
  }
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    if (instance.flow[a].is_zero()) throw InputError("arc " + std::to_string(a) + " carries no flow");
  }
  const RotationSystem rotation(g, instance.rotation);

  // Per in-arc, its wiring pairs in order. A pair takes the next block of
  // lanes on both of its arcs: the first pair of f sits next to the
  // out-arcs counterclockwise of f, the first pair of g next to the
  // in-arcs clockwise of g.
  struct Link {
    ArcId to;
    Rational from_start;  // lane block [from_start, from_start + load) on f
    Rational load;
    Rational to_start;  // and its image on g
  };
  std::vector<std::vector<Link>> links(g.arc_count());
  std::vector<Rational> used_in(g.arc_count()), used_out(g.arc_count());
  for (VertexId v = 0; v < g.vertex_count; ++v) {
    if (v == instance.source || is_terminal[v] || rotation.degree(v) == 0) continue;
    const GoodVWiring w = compute_good_wiring(instance, rotation, v);
    for (std::size_t i = 0; i < w.pairs.size(); ++i) {
      const auto [f, to] = w.pairs[i];
      links[f].push_back({to, used_in[f], w.loads[i], used_out[to]});
      used_in[f] += w.loads[i];
      used_out[to] += w.loads[i];
    }
  }

  // pi_s read from its smallest arc id, out-arcs only
  std::vector<ArcId> source_arcs;
  {
    const auto& around = rotation.around(instance.source);
    const auto first = std::min_element(around.begin(), around.end());
    for (std::size_t k = 0; k < around.size(); ++k) {
      const ArcId a = around[(static_cast<std::size_t>(first - around.begin()) + k) % around.size()];
      if (g.arcs[a].tail == instance.source) source_arcs.push_back(a);
    }
  }

  struct Frame {
    ArcId arc;
    Rational lo, hi;
    std::size_t next_link;
  };
  std::vector<std::vector<ArcId>> walks;
  std::vector<std::vector<Rational>> positions;
  std::vector<Rational> lambda;
  std::vector<Frame> stack;
  for (ArcId first : source_arcs) {
    stack.push_back({first, Rational(0), instance.flow[first], 0});
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (is_terminal[g.arcs[top.arc].head]) {
        std::vector<ArcId> walk;
        std::vector<Rational> place;
        for (const Frame& f : stack) {
          walk.push_back(f.arc);
          place.push_back(f.lo);
        }
        walks.push_back(std::move(walk));
        positions.push_back(std::move(place));
        lambda.push_back(top.hi - top.lo);
        stack.pop_back();
        continue;
      }
      const auto& out = links[top.arc];
      if (top.next_link == 0 && out.empty()) {
        throw DecompositionInconsistency("no wiring pair continues arc " + std::to_string(top.arc));
      }
      bool pushed = false;
      while (top.next_link < out.size()) {
        const Link& l = out[top.next_link++];
        const Rational lo = max(top.lo, l.from_start);
        const Rational hi = min(top.hi, l.from_start + l.load);
        if (lo < hi) {
          const Rational shift = l.to_start - l.from_start;
          stack.push_back({l.to, lo + shift, hi + shift, 0});
          pushed = true;
          break;
        }
        if (l.from_start >= top.hi) {
          top.next_link = out.size();
          break;
        }
      }
      if (!pushed) stack.pop_back();
    }
  }

  std::vector<Rational> covered(g.arc_count());
  for (std::size_t i = 0; i < walks.size(); ++i) {
    for (ArcId b : walks[i]) covered[b] += lambda[i];
  }
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    if (covered[a] != instance.flow[a]) {
      throw DecompositionInconsistency("arc " + std::to_string(a) + ": paths carry " + covered[a].str() +
                                       ", x = " + instance.flow[a].str());
    }
  }
  return build_arc_split(instance, walks, std::move(lambda), positions);
}

bool NiceReport::ok() const {
  return split_structure.empty() && partition.empty() && s_paths.empty() && non_crossing.empty() &&
         source_numbered.empty() && reconstruction.empty() && non_interleaving.empty() && planarity.empty();
}

std::string NiceReport::summary() const {
  std::ostringstream out;
  auto section = [&out](const char* name, const std::vector<std::string>& items) {
    for (const std::string& item : items) out << name << ": " << item << "\n";
  };
  section("split_structure", split_structure);
  section("partition", partition);
  section("s_paths", s_paths);
  section("non_crossing", non_crossing);
  section("source_numbered", source_numbered);
  section("reconstruction", reconstruction);
  section("non_interleaving", non_interleaving);
  section("planarity", planarity);
  return ok() ? "nice" : out.str();
}

NiceReport check_nice(const PssufInstance& instance, const ArcSplitDecomposition& dec) {
  NiceReport report;
  const Graph& g = instance.graph;
  const Graph& h = dec.split_graph;
  const int ell = dec.path_count();

  if (h.vertex_count != g.vertex_count) report.split_structure.push_back("vertex sets differ");
  if (static_cast<int>(dec.phi.size()) != h.arc_count()) {
    report.split_structure.push_back("phi has the wrong length");
    return report;
  }
  if (static_cast<int>(dec.weights.size()) != ell || static_cast<int>(dec.terminal_of.size()) != ell) {
    report.s_paths.push_back("weights or terminal_of have the wrong length");
    return report;
  }
  for (ArcId f = 0; f < h.arc_count(); ++f) {
    const ArcId a = dec.phi[f];
    if (!g.contains_arc(a)) {
      report.split_structure.push_back("phi(" + std::to_string(f) + ") is not an arc");
    } else if (!(g.arcs[a] == h.arcs[f])) {
      report.split_structure.push_back("arc " + std::to_string(f) + " has different ends than phi of it");
    }
  }
  if (!report.split_structure.empty()) return report;

  std::optional<RotationSystem> split_rotation;
  try {
    split_rotation.emplace(h, dec.split_rotation);
  } catch (const InputError& e) {
    report.split_structure.push_back(e.what());
    return report;
  }
  for (VertexId v = 0; v < h.vertex_count; ++v) {
    const auto& order = dec.split_rotation[v];
    std::map<ArcId, int> runs;
    for (std::size_t i = 0; i < order.size(); ++i) {
      const ArcId here = dec.phi[order[i]];
      const ArcId before = dec.phi[order[(i + order.size() - 1) % order.size()]];
      if (here != before) ++runs[here];
    }
    for (const auto& [a, count] : runs) {
      if (count > 1) {
        report.split_structure.push_back("copies of arc " + std::to_string(a) + " are not consecutive at vertex " +
                                         std::to_string(v));
      }
    }
  }

  std::vector<int> owner(h.arc_count(), -1);
  for (int i = 0; i < ell; ++i) {
    for (ArcId f : dec.paths[i]) {
      if (!h.contains_arc(f)) {
        report.partition.push_back("path " + std::to_string(i) + " uses unknown arc " + std::to_string(f));
      } else if (owner[f] >= 0) {
        report.partition.push_back("arc " + std::to_string(f) + " lies on paths " + std::to_string(owner[f]) +
                                   " and " + std::to_string(i));
      } else {
        owner[f] = i;
      }
    }
  }
  for (ArcId f = 0; f < h.arc_count(); ++f) {
    if (owner[f] < 0) report.partition.push_back("arc " + std::to_string(f) + " lies on no path");
  }
  if (!report.partition.empty()) return report;

  for (int i = 0; i < ell; ++i) {
    const auto& p = dec.paths[i];
    const std::string name = "path " + std::to_string(i);
    if (p.empty()) {
      report.s_paths.push_back(name + " is empty");
      continue;
    }
    if (h.arcs[p.front()].tail != instance.source) report.s_paths.push_back(name + " does not start at s");
    for (std::size_t k = 1; k < p.size(); ++k) {
      if (h.arcs[p[k - 1]].head != h.arcs[p[k]].tail) report.s_paths.push_back(name + " is not contiguous");
    }
    const VertexId end = h.arcs[p.back()].head;
    if (instance.terminal_index(end) < 0) report.s_paths.push_back(name + " does not end at a terminal");
    if (dec.terminal_of[i] != end) report.s_paths.push_back(name + " has a wrong terminal_of entry");
    if (!dec.weights[i].is_positive()) report.s_paths.push_back(name + " has a nonpositive weight");
  }
  if (!report.s_paths.empty()) return report;

  struct Passage {
    int path;
    ArcId in;
    ArcId out;
  };
  std::vector<std::vector<Passage>> passages(h.vertex_count);
  for (int i = 0; i < ell; ++i) {
    const auto& p = dec.paths[i];
    for (std::size_t k = 0; k + 1 < p.size(); ++k) passages[h.arcs[p[k]].head].push_back({i, p[k], p[k + 1]});
  }
  for (VertexId v = 0; v < h.vertex_count; ++v) {
    const auto& list = passages[v];
    for (std::size_t x = 0; x < list.size(); ++x) {
      for (std::size_t z = x + 1; z < list.size(); ++z) {
        if (passages_cross(*split_rotation, v, list[x].in, list[x].out, list[z].in, list[z].out)) {
          report.non_crossing.push_back("paths " + std::to_string(list[x].path) + " and " +
                                        std::to_string(list[z].path) + " cross at vertex " + std::to_string(v));
        }
      }
    }
  }

  std::vector<ArcId> firsts;
  for (const auto& p : dec.paths) firsts.push_back(p.front());
  if (!is_progression(*split_rotation, instance.source, firsts)) {
    report.source_numbered.push_back("first arcs are not in counterclockwise order around s");
  }

  std::vector<Rational> sum(g.arc_count());
  for (int i = 0; i < ell; ++i) {
    for (ArcId f : dec.paths[i]) sum[dec.phi[f]] += dec.weights[i];
  }
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    if (sum[a] != instance.flow[a]) {
      report.reconstruction.push_back("arc " + std::to_string(a) + ": weights sum to " + sum[a].str() +
                                      ", x = " + instance.flow[a].str());
    }
  }

  if (!labels_non_interleaving(dec.terminal_of)) {
    report.non_interleaving.push_back("terminal sets interleave along the path order");
  }

  const PlanarityReport planar = validate_planarity(*split_rotation);
  if (!planar.planar) report.planarity.push_back(planar.message);
  return report;
}

}  // namespace ssuf
