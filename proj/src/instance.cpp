#include "ssuf/instance.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ssuf {

Rational PssufInstance::d_max() const {
  Rational best;
  for (const Terminal& t : terminals) best = max(best, t.d);
  return best;
}

Rational PssufInstance::total_demand() const {
  Rational sum;
  for (const Terminal& t : terminals) sum += t.d;
  return sum;
}

int PssufInstance::terminal_index(VertexId v) const {
  for (std::size_t i = 0; i < terminals.size(); ++i) {
    if (terminals[i].v == v) return static_cast<int>(i);
  }
  return -1;
}

const char* to_string(IssueKind kind) {
  switch (kind) {
    case IssueKind::shape: return "shape";
    case IssueKind::distinctness: return "distinctness";
    case IssueKind::nonnegativity: return "nonnegativity";
    case IssueKind::acyclicity: return "acyclicity";
    case IssueKind::conservation: return "conservation";
    case IssueKind::rotation: return "rotation";
    case IssueKind::planarity: return "planarity";
  }
  return "unknown";
}

bool ValidationReport::has(IssueKind kind) const {
  return std::any_of(issues.begin(), issues.end(), [kind](const ValidationIssue& i) { return i.kind == kind; });
}

std::string ValidationReport::summary() const {
  if (ok()) return "valid";
  std::ostringstream out;
  for (const ValidationIssue& issue : issues) out << to_string(issue.kind) << ": " << issue.message << "\n";
  return out.str();
}

ValidationReport validate_instance(const PssufInstance& inst) {
  ValidationReport report;
  auto add = [&report](IssueKind kind, std::string message) { report.issues.push_back({kind, std::move(message)}); };
  const Graph& g = inst.graph;

  for (ArcId a = 0; a < g.arc_count(); ++a) {
    if (!g.contains_vertex(g.arcs[a].tail) || !g.contains_vertex(g.arcs[a].head)) {
      add(IssueKind::shape, "arc " + std::to_string(a) + " has an endpoint outside 0.." +
                                std::to_string(g.vertex_count - 1));
    } else if (g.arcs[a].tail == g.arcs[a].head) {
      add(IssueKind::shape, "arc " + std::to_string(a) + " is a self-loop");
    }
  }
  if (static_cast<int>(inst.flow.size()) != g.arc_count()) {
    add(IssueKind::shape, "flow has " + std::to_string(inst.flow.size()) + " entries for " +
                              std::to_string(g.arc_count()) + " arcs");
  }
  if (inst.costs && static_cast<int>(inst.costs->size()) != g.arc_count()) {
    add(IssueKind::shape, "costs have " + std::to_string(inst.costs->size()) + " entries for " +
                              std::to_string(g.arc_count()) + " arcs");
  }
  if (!g.contains_vertex(inst.source)) add(IssueKind::shape, "source " + std::to_string(inst.source) + " is not a vertex");
  for (const Terminal& t : inst.terminals) {
    if (!g.contains_vertex(t.v)) {
      add(IssueKind::shape, "terminal " + std::to_string(t.v) + " is not a vertex");
    }
  }
  if (!report.ok()) return report;  // the remaining checks index by vertex and arc

  std::set<VertexId> seen{inst.source};
  for (const Terminal& t : inst.terminals) {
    if (!seen.insert(t.v).second) {
      add(IssueKind::distinctness, "vertex " + std::to_string(t.v) + " is listed twice among source and terminals");
    }
    if (t.d.is_negative()) add(IssueKind::nonnegativity, "terminal " + std::to_string(t.v) + " has negative demand");
  }
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    if (inst.flow[a].is_negative()) add(IssueKind::nonnegativity, "arc " + std::to_string(a) + " has negative flow");
  }

  if (!topological_order(g)) add(IssueKind::acyclicity, "graph contains a directed cycle");

  std::vector<Rational> excess(g.vertex_count);  // x(out) - x(in)
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    excess[g.arcs[a].tail] += inst.flow[a];
    excess[g.arcs[a].head] -= inst.flow[a];
  }
  std::vector<Rational> expected(g.vertex_count);
  expected[inst.source] = inst.total_demand();
  for (const Terminal& t : inst.terminals) expected[t.v] = -t.d;
  for (VertexId v = 0; v < g.vertex_count; ++v) {
    if (excess[v] != expected[v]) {
      add(IssueKind::conservation, "vertex " + std::to_string(v) + ": x(out) - x(in) = " + excess[v].str() +
                                       ", expected " + expected[v].str());
    }
  }

  const auto rotation_issues = RotationSystem::structure_issues(g, inst.rotation);
  for (const std::string& issue : rotation_issues) add(IssueKind::rotation, issue);
  if (rotation_issues.empty()) {
    const PlanarityReport planarity = validate_planarity(g, inst.rotation);
    if (!planarity.planar) add(IssueKind::planarity, "rotation is not planar: " + planarity.message);
  }
  return report;
}

NormalizeResult normalize_terminals(const PssufInstance& instance) {
  NormalizeResult result;
  result.instance = instance;
  PssufInstance& out = result.instance;
  result.first_auxiliary_arc = instance.graph.arc_count();

  const Adjacency adj(instance.graph);
  out.terminals.clear();
  for (const Terminal& t : instance.terminals) {
    if (t.d.is_zero()) {
      result.dropped_terminals.push_back(t.v);
      continue;
    }
    result.original_terminal.push_back(t.v);
    if (adj.out[t.v].empty()) {
      out.terminals.push_back(t);
      continue;
    }
    const VertexId sink = out.graph.add_vertex();
    const ArcId a = out.graph.add_arc(t.v, sink);
    out.flow.push_back(t.d);
    if (out.costs) out.costs->push_back(Rational(0));
    out.rotation[t.v].push_back(a);
    out.rotation.push_back({a});
    out.terminals.push_back({sink, t.d});
  }
  return result;
}

StripResult strip_zero_flow(const PssufInstance& instance) {
  StripResult result;
  PssufInstance& out = result.instance;
  out.source = instance.source;
  out.terminals = instance.terminals;
  out.graph.vertex_count = instance.graph.vertex_count;
  if (instance.costs) out.costs.emplace();

  result.old_to_new.assign(instance.graph.arc_count(), -1);
  for (ArcId a = 0; a < instance.graph.arc_count(); ++a) {
    if (instance.flow[a].is_zero()) continue;
    result.old_to_new[a] = out.graph.add_arc(instance.graph.arcs[a].tail, instance.graph.arcs[a].head);
    result.new_to_old.push_back(a);
    out.flow.push_back(instance.flow[a]);
    if (out.costs) out.costs->push_back((*instance.costs)[a]);
  }
  out.rotation.resize(instance.rotation.size());
  for (std::size_t v = 0; v < instance.rotation.size(); ++v) {
    for (ArcId a : instance.rotation[v]) {
      if (result.old_to_new[a] >= 0) out.rotation[v].push_back(result.old_to_new[a]);
    }
  }
  return result;
}

}  // namespace ssuf
