#include "ssuf/graph.hpp"

#include <numeric>

namespace ssuf {

Adjacency::Adjacency(const Graph& g) : out(g.vertex_count), in(g.vertex_count) {
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    out[g.arcs[a].tail].push_back(a);
    in[g.arcs[a].head].push_back(a);
  }
}

std::optional<std::vector<VertexId>> topological_order(const Graph& g) {
  const Adjacency adj(g);
  std::vector<int> indegree(g.vertex_count);
  for (const Arc& arc : g.arcs) ++indegree[arc.head];

  std::vector<VertexId> order;
  order.reserve(g.vertex_count);
  for (VertexId v = 0; v < g.vertex_count; ++v) {
    if (indegree[v] == 0) order.push_back(v);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (ArcId a : adj.out[order[i]]) {
      if (--indegree[g.arcs[a].head] == 0) order.push_back(g.arcs[a].head);
    }
  }
  if (static_cast<int>(order.size()) != g.vertex_count) return std::nullopt;
  return order;
}

namespace {

int find_root(std::vector<int>& parent, int v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

}  // namespace

int weak_component_count(const Graph& g) {
  std::vector<int> parent(g.vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  int components = g.vertex_count;
  for (const Arc& arc : g.arcs) {
    const int a = find_root(parent, arc.tail);
    const int b = find_root(parent, arc.head);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

}  // namespace ssuf
