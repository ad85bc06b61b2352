#pragma once

#include <span>
#include <string>
#include <vector>

#include "ssuf/graph.hpp"

namespace ssuf {

/// Per-vertex counterclockwise cyclic order of incident arc ids.
using CyclicOrders = std::vector<std::vector<ArcId>>;

/// Combinatorial embedding of a graph: each arc appears exactly once around
/// its tail and once around its head. Keeps an arc -> position index at both
/// endpoints so progression tests are O(k).
class RotationSystem {
 public:
  /// Throws InputError when the orders are not a well-formed rotation of g.
  RotationSystem(const Graph& g, CyclicOrders orders);

  /// Every structural defect of `orders` relative to g; empty iff well formed.
  static std::vector<std::string> structure_issues(const Graph& g, const CyclicOrders& orders);

  int vertex_count() const { return static_cast<int>(orders_.size()); }
  int arc_count() const { return static_cast<int>(ends_.size()); }
  const CyclicOrders& orders() const { return orders_; }
  const std::vector<ArcId>& around(VertexId v) const { return orders_[v]; }
  int degree(VertexId v) const { return static_cast<int>(orders_[v].size()); }
  const Arc& ends(ArcId a) const { return ends_[a]; }

  bool incident(VertexId v, ArcId a) const;
  /// Index of a within the order around v; throws InputError if a is not incident to v.
  int position(VertexId v, ArcId a) const;
  ArcId successor(VertexId v, ArcId a) const;
  ArcId predecessor(VertexId v, ArcId a) const;

 private:
  CyclicOrders orders_;
  std::vector<Arc> ends_;
  std::vector<int> pos_at_tail_;
  std::vector<int> pos_at_head_;
};

/// True iff `arcs`, read from its first element, is a subsequence of one
/// counterclockwise sweep around v starting at that element. Arcs must be
/// distinct and incident to v (InputError otherwise).
bool is_progression(const RotationSystem& rotation, VertexId v, std::span<const ArcId> arcs);
bool is_progression(const RotationSystem& rotation, VertexId v, std::initializer_list<ArcId> arcs);

/// One side of an arc: forward walks tail -> head.
struct Dart {
  ArcId arc = 0;
  bool forward = true;
  friend bool operator==(const Dart&, const Dart&) = default;
};

struct PlanarityReport {
  bool planar = false;
  /// Faces of the map with the shared outer face of different components counted once.
  int face_count = 0;
  int component_count = 0;
  std::vector<std::vector<Dart>> faces;
  std::string message;
};

/// Traces faces of the underlying undirected map (next dart = successor of the
/// arrival arc at the reached vertex) and checks Euler's formula on every
/// component. Throws InputError on a malformed rotation.
PlanarityReport validate_planarity(const Graph& g, const CyclicOrders& orders);
PlanarityReport validate_planarity(const RotationSystem& rotation);

/// Crossing predicate for two arc-disjoint directed paths (arc-id lists).
/// Throws InputError if the paths share an arc.
bool paths_cross(const RotationSystem& rotation, std::span<const ArcId> first, std::span<const ArcId> second);

/// Whether two passages through a common vertex v cross: (in1, in2, out1, out2)
/// or (in2, in1, out2, out1) is a progression around v.
bool passages_cross(const RotationSystem& rotation, VertexId v, ArcId in1, ArcId out1, ArcId in2, ArcId out2);

}  // namespace ssuf
