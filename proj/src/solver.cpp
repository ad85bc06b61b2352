#include "ssuf/solver.hpp"

#include <set>

#include "ssuf/errors.hpp"

namespace ssuf {

WpcsInstance build_wpcs(const ArcSplitDecomposition& decomposition, const std::vector<Terminal>& terminals) {
  std::map<VertexId, int> set_of_terminal;
  for (std::size_t t = 0; t < terminals.size(); ++t) set_of_terminal[terminals[t].v] = static_cast<int>(t);

  std::vector<std::vector<int>> sets(terminals.size());
  std::vector<Rational> demands(terminals.size());
  std::vector<Rational> weight_sum(terminals.size());
  std::vector<Rational> y(decomposition.path_count());
  for (int i = 0; i < decomposition.path_count(); ++i) {
    const auto it = set_of_terminal.find(decomposition.terminal_of[i]);
    if (it == set_of_terminal.end()) {
      throw DecompositionInconsistency("path " + std::to_string(i) + " ends at a non-terminal");
    }
    const Terminal& t = terminals[it->second];
    const Rational& lambda = decomposition.weights[i];
    if (!t.d.is_positive() || lambda > t.d) {
      throw DecompositionInconsistency("path " + std::to_string(i) + " has weight " + lambda.str() +
                                       " above demand " + t.d.str());
    }
    sets[it->second].push_back(i);
    weight_sum[it->second] += lambda;
    y[i] = lambda / t.d;
  }
  for (std::size_t t = 0; t < terminals.size(); ++t) {
    demands[t] = terminals[t].d;
    if (weight_sum[t] != terminals[t].d) {
      throw DecompositionInconsistency("paths to terminal " + std::to_string(terminals[t].v) + " carry " +
                                       weight_sum[t].str() + ", demand is " + terminals[t].d.str());
    }
  }
  return WpcsInstance(std::move(sets), std::move(demands), std::move(y));
}

SolveTrace solve_traced(const PssufInstance& instance, const std::optional<std::vector<Rational>>& costs) {
  if (const ValidationReport report = validate_instance(instance); !report.ok()) {
    if (report.has(IssueKind::acyclicity)) {
      throw InvalidInstance(
          "graph has a directed cycle; only acyclic graphs are supported, since on cyclic graphs the lower "
          "deviation bounds cannot be met with paths and cycle canceling would change the problem");
    }
    throw InvalidInstance("invalid instance: " + report.summary());
  }
  PssufInstance input = instance;
  if (costs) {
    if (static_cast<int>(costs->size()) != instance.graph.arc_count()) throw InputError("need one cost per arc");
    for (const Rational& c : *costs) {
      if (c.is_negative()) throw InputError("costs must be nonnegative");
    }
    input.costs = costs;
  }

  SolveTrace trace;
  trace.normalized = normalize_terminals(input);
  trace.stripped = strip_zero_flow(trace.normalized.instance);
  const PssufInstance& work = trace.stripped.instance;
  trace.decomposition = decompose(work);
  const ArcSplitDecomposition& dec = trace.decomposition;
  trace.wpcs.emplace(build_wpcs(dec, work.terminals));
  const WpcsInstance& wpcs = *trace.wpcs;

  if (costs) {
    // weighted by demand so that c.z over paths equals the arc cost of the routing
    for (int i = 0; i < dec.path_count(); ++i) {
      Rational path_cost;
      for (ArcId f : dec.paths[i]) path_cost += (*work.costs)[dec.phi[f]];
      trace.path_costs.push_back(wpcs.demand_at(i) * path_cost);
    }
    trace.selection = select_with_costs(wpcs, trace.path_costs);
  } else {
    trace.selection = prefix_greedy_select(wpcs);
  }

  UnsplittableFlow& out = trace.flow;
  out.dropped_terminals = trace.normalized.dropped_terminals;
  const int arc_count = instance.graph.arc_count();
  out.arc_flow.assign(arc_count, Rational(0));
  for (std::size_t s = 0; s < wpcs.sets().size(); ++s) {
    int picked = -1;
    for (int i : wpcs.sets()[s]) {
      if (trace.selection.z[i] == Rational(1)) {
        if (picked >= 0) throw std::logic_error("selection picks two paths for one terminal");
        picked = i;
      }
    }
    if (picked < 0) throw std::logic_error("selection picks no path for a terminal");
    std::vector<ArcId> path;
    for (ArcId f : dec.paths[picked]) {
      const ArcId a = trace.stripped.new_to_old[dec.phi[f]];
      if (a >= trace.normalized.first_auxiliary_arc) continue;
      path.push_back(a);
      out.arc_flow[a] += wpcs.demands()[s];
    }
    out.paths[trace.normalized.original_terminal[s]] = std::move(path);
  }

  const Rational d_max = instance.d_max();
  out.certificate.bound = costs ? d_max * Rational(2) : d_max;
  out.deviation.resize(arc_count);
  for (ArcId a = 0; a < arc_count; ++a) {
    out.deviation[a] = instance.flow[a] - out.arc_flow[a];
    out.certificate.max_abs_deviation = max(out.certificate.max_abs_deviation, abs(out.deviation[a]));
  }
  if (costs) {
    out.certificate.cost = dot(*costs, out.arc_flow);
    out.certificate.cost_bound = dot(*costs, instance.flow);
  }
  return trace;
}

UnsplittableFlow solve(const PssufInstance& instance) { return solve_traced(instance, std::nullopt).flow; }

UnsplittableFlow solve_with_costs(const PssufInstance& instance, const std::vector<Rational>& costs) {
  return solve_traced(instance, costs).flow;
}

VerificationReport verify_solution(const PssufInstance& instance, const UnsplittableFlow& solution,
                                   BoundMultiplier multiplier, const std::optional<std::vector<Rational>>& costs) {
  VerificationReport report;
  auto fail = [&report](std::string message) { report.failures.push_back(std::move(message)); };
  const Graph& g = instance.graph;
  if (static_cast<int>(instance.flow.size()) != g.arc_count()) {
    fail("instance flow has the wrong length");
    return report;
  }

  std::vector<Rational> flow(g.arc_count());
  for (const Terminal& t : instance.terminals) {
    const std::string name = "terminal " + std::to_string(t.v);
    const auto it = solution.paths.find(t.v);
    if (it == solution.paths.end()) {
      if (!t.d.is_zero()) fail(name + " has no path");
      continue;
    }
    const std::vector<ArcId>& path = it->second;
    if (path.empty()) {
      fail(name + " has an empty path");
      continue;
    }
    bool well_formed = true;
    for (ArcId a : path) {
      if (!g.contains_arc(a)) {
        fail(name + ": arc " + std::to_string(a) + " does not exist");
        well_formed = false;
      }
    }
    if (!well_formed) continue;
    if (g.arcs[path.front()].tail != instance.source) fail(name + ": path does not start at the source");
    if (g.arcs[path.back()].head != t.v) fail(name + ": path does not end at the terminal");
    std::set<VertexId> visited{g.arcs[path.front()].tail};
    for (std::size_t k = 0; k < path.size(); ++k) {
      if (k > 0 && g.arcs[path[k - 1]].head != g.arcs[path[k]].tail) {
        fail(name + ": arcs " + std::to_string(path[k - 1]) + " and " + std::to_string(path[k]) + " do not connect");
      }
      if (!visited.insert(g.arcs[path[k]].head).second) fail(name + ": path revisits a vertex");
      flow[path[k]] += t.d;
    }
  }
  for (const auto& [v, path] : solution.paths) {
    if (instance.terminal_index(v) < 0) fail("path given for non-terminal " + std::to_string(v));
  }
  if (!solution.arc_flow.empty() && solution.arc_flow != flow) fail("reported arc flow does not match the paths");

  report.bound = instance.d_max() * Rational(static_cast<int>(multiplier));
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    const Rational deviation = abs(instance.flow[a] - flow[a]);
    report.max_abs_deviation = max(report.max_abs_deviation, deviation);
    if (deviation > report.bound) {
      fail("arc " + std::to_string(a) + ": |x - flow| = " + deviation.str() + " exceeds " + report.bound.str());
    }
  }
  if (costs) {
    if (static_cast<int>(costs->size()) != g.arc_count()) {
      fail("cost vector has the wrong length");
    } else {
      report.cost = dot(*costs, flow);
      report.cost_bound = dot(*costs, instance.flow);
      if (*report.cost > *report.cost_bound) {
        fail("cost " + report.cost->str() + " exceeds " + report.cost_bound->str());
      }
    }
  }
  return report;
}

}  // namespace ssuf
