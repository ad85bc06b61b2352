#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ssuf/embedding.hpp"
#include "ssuf/instance.hpp"

namespace ssuf {

/// Ordered in/out pairing at one vertex with per-pair loads.
struct GoodVWiring {
  VertexId v = 0;
  std::vector<std::pair<ArcId, ArcId>> pairs;
  std::vector<Rational> loads;
};

/// Pairs each positive in-arc with positive out-arcs by repeatedly matching an
/// in-arc with its circular successor when that successor is an out-arc.
/// Throws InputError if x is not conserved at v.
GoodVWiring compute_good_wiring(const PssufInstance& instance, const RotationSystem& rotation, VertexId v);
GoodVWiring compute_good_wiring(const PssufInstance& instance, VertexId v);

/// Problems with a wiring relative to x and the rotation; empty iff good.
std::vector<std::string> wiring_defects(const PssufInstance& instance, const RotationSystem& rotation,
                                        const GoodVWiring& wiring);

struct ArcSplitDecomposition {
  Graph split_graph;
  CyclicOrders split_rotation;
  /// phi[f] is the arc of G that split arc f copies.
  std::vector<ArcId> phi;
  std::vector<std::vector<ArcId>> paths;
  std::vector<Rational> weights;
  /// Vertex of G where each path ends.
  std::vector<VertexId> terminal_of;

  int path_count() const { return static_cast<int>(paths.size()); }
  /// The arcs of G under path i.
  std::vector<ArcId> projected_path(int i) const;
};

/// Arc-split graph for a list of paths in G: one fresh copy per path step;
/// later copies go counterclockwise of earlier ones at the tail and
/// clockwise at the head.
ArcSplitDecomposition build_arc_split(const PssufInstance& instance, const std::vector<std::vector<ArcId>>& paths,
                                      std::vector<Rational> weights);

/// Same, but the copies of each arc are ordered by `positions[i][k]`, the
/// place of step k of path i in its arc (smaller = clockwise at the tail).
ArcSplitDecomposition build_arc_split(const PssufInstance& instance, const std::vector<std::vector<ArcId>>& paths,
                                      std::vector<Rational> weights,
                                      const std::vector<std::vector<Rational>>& positions);

/// Wiring-guided decomposition and its arc-split graph.
///
/// The flow on every arc is treated as a band of lanes ordered clockwise to
/// counterclockwise at its tail. Each wiring pair (f, g) joins a block of
/// lanes of f to a block of lanes of g without reordering them, and the
/// out-arcs of s are laid side by side, starting at the arc with the
/// smallest id. Paths are the maximal runs of source lanes that follow the
/// same route, numbered counterclockwise around s. The instance must be
/// valid, have sink terminals and no zero-flow arcs (InputError otherwise).
ArcSplitDecomposition decompose(const PssufInstance& instance);

struct NiceReport {
  std::vector<std::string> split_structure;
  std::vector<std::string> partition;
  std::vector<std::string> s_paths;
  std::vector<std::string> non_crossing;
  std::vector<std::string> source_numbered;
  std::vector<std::string> reconstruction;
  std::vector<std::string> non_interleaving;
  std::vector<std::string> planarity;

  bool ok() const;
  std::string summary() const;
};

/// Independent re-check of every structural property of a decomposition.
NiceReport check_nice(const PssufInstance& instance, const ArcSplitDecomposition& decomposition);

}  // namespace ssuf
