#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ssuf/embedding.hpp"
#include "ssuf/graph.hpp"
#include "ssuf/rational.hpp"

namespace ssuf {

struct Terminal {
  VertexId v = 0;
  Rational d;
  friend bool operator==(const Terminal&, const Terminal&) = default;
};

/// Single-source flow instance on an embedded DAG. flow[a] is x(a);
/// rotation[v] lists the arcs around v counterclockwise.
struct PssufInstance {
  Graph graph;
  VertexId source = 0;
  std::vector<Terminal> terminals;
  std::vector<Rational> flow;
  CyclicOrders rotation;
  std::optional<std::vector<Rational>> costs;

  Rational d_max() const;
  Rational total_demand() const;
  /// Index into `terminals`, or -1.
  int terminal_index(VertexId v) const;

  friend bool operator==(const PssufInstance&, const PssufInstance&) = default;
};

enum class IssueKind { shape, distinctness, nonnegativity, acyclicity, conservation, rotation, planarity };

const char* to_string(IssueKind kind);

struct ValidationIssue {
  IssueKind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const { return issues.empty(); }
  bool has(IssueKind kind) const;
  std::string summary() const;
};

ValidationReport validate_instance(const PssufInstance& instance);

struct NormalizeResult {
  PssufInstance instance;
  /// Terminals removed because their demand is zero.
  std::vector<VertexId> dropped_terminals;
  /// original_terminal[i] is the user's terminal behind instance.terminals[i].
  std::vector<VertexId> original_terminal;
  /// Arc ids >= first_auxiliary_arc are (t, t') arcs added here.
  ArcId first_auxiliary_arc = 0;
};

/// Gives every terminal with outgoing arcs a pendant sink t' and drops
/// zero-demand terminals. Idempotent. Expects a valid instance.
NormalizeResult normalize_terminals(const PssufInstance& instance);

struct StripResult {
  PssufInstance instance;
  /// -1 for removed arcs.
  std::vector<ArcId> old_to_new;
  std::vector<ArcId> new_to_old;
};

/// Removes arcs with x(a) = 0 and renumbers the rest densely, keeping order.
StripResult strip_zero_flow(const PssufInstance& instance);

}  // namespace ssuf
