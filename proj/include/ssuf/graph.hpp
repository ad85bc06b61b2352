#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace ssuf {

using VertexId = int;
using ArcId = int;

struct Arc {
  VertexId tail = 0;
  VertexId head = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Directed multigraph with dense vertex ids 0..n-1 and arc ids 0..m-1.
/// Parallel arcs are allowed; self-loops are representable but rejected
/// by instance validation.
struct Graph {
  int vertex_count = 0;
  std::vector<Arc> arcs;

  int arc_count() const { return static_cast<int>(arcs.size()); }
  ArcId add_arc(VertexId tail, VertexId head) {
    arcs.push_back({tail, head});
    return arc_count() - 1;
  }
  VertexId add_vertex() { return vertex_count++; }

  bool contains_vertex(VertexId v) const { return v >= 0 && v < vertex_count; }
  bool contains_arc(ArcId a) const { return a >= 0 && a < arc_count(); }

  friend bool operator==(const Graph&, const Graph&) = default;
};

/// Out- and in-arc lists per vertex, in arc-id order.
struct Adjacency {
  std::vector<std::vector<ArcId>> out;
  std::vector<std::vector<ArcId>> in;

  explicit Adjacency(const Graph& g);
  int degree(VertexId v) const { return static_cast<int>(out[v].size() + in[v].size()); }
};

/// Kahn order of the vertices, or nullopt if the graph has a directed cycle.
std::optional<std::vector<VertexId>> topological_order(const Graph& g);

/// Number of weakly connected components (isolated vertices count).
int weak_component_count(const Graph& g);

}  // namespace ssuf
