#include <gtest/gtest.h>

#include <map>
#include <set>

#include "ssuf/embedding.hpp"
#include "ssuf/errors.hpp"
#include "ssuf/generator.hpp"

using namespace ssuf;

namespace {

// Star around v = 0 with arcs a1..a6 (ids 0..5) drawn at the six compass points.
struct Star {
  Graph g;
  RotationSystem rotation;
};

Star star() {
  Graph g;
  g.vertex_count = 7;
  g.add_arc(0, 1);  // a1
  g.add_arc(2, 0);  // a2
  g.add_arc(0, 3);  // a3
  g.add_arc(4, 0);  // a4
  g.add_arc(5, 0);  // a5
  g.add_arc(0, 6);  // a6
  const std::vector<Point> at = {{0, 0}, {-3, 2}, {-3, -2}, {0, -4}, {3, -2}, {3, 2}, {0, 4}};
  CyclicOrders orders = rotation_from_points(g, at);
  return {g, RotationSystem(g, orders)};
}

// Faces by walking darts with an independent (vertex, neighbour-slot) encoding.
int count_faces(const Graph& g, const CyclicOrders& orders) {
  std::set<std::pair<ArcId, int>> seen;  // (arc, direction 0 = tail->head)
  int faces = 0;
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    for (int dir = 0; dir < 2; ++dir) {
      if (seen.count({a, dir})) continue;
      ++faces;
      ArcId arc = a;
      int d = dir;
      while (!seen.count({arc, d})) {
        seen.insert({arc, d});
        const VertexId reached = d == 0 ? g.arcs[arc].head : g.arcs[arc].tail;
        const auto& around = orders[reached];
        std::size_t k = 0;
        while (around[k] != arc) ++k;
        const ArcId next = around[(k + 1) % around.size()];
        arc = next;
        d = g.arcs[next].tail == reached ? 0 : 1;
      }
    }
  }
  return faces;
}

}  // namespace

TEST(Progression, FigureThreeExamples) {
  const Star s = star();
  const ArcId a1 = 0, a2 = 1, a3 = 2, a4 = 3, a5 = 4, a6 = 5;
  EXPECT_EQ(s.rotation.around(0), (std::vector<ArcId>{a5, a6, a1, a2, a3, a4}));
  EXPECT_EQ(s.rotation.successor(0, a1), a2);
  EXPECT_EQ(s.rotation.predecessor(0, a1), a6);
  EXPECT_TRUE(is_progression(s.rotation, 0, {a5, a2, a3}));
  EXPECT_FALSE(is_progression(s.rotation, 0, {a5, a3, a2}));
  EXPECT_TRUE(is_progression(s.rotation, 0, {a3}));
  EXPECT_TRUE(is_progression(s.rotation, 0, {a3, a4, a5, a6, a1}));
}

TEST(Progression, RejectsForeignOrRepeatedArcs) {
  const Star s = star();
  EXPECT_THROW(is_progression(s.rotation, 1, {1}), InputError);
  EXPECT_THROW(is_progression(s.rotation, 0, {2, 2}), InputError);
}

TEST(RotationSystem, ReportsMalformedOrders) {
  Graph g;
  g.vertex_count = 2;
  g.add_arc(0, 1);
  EXPECT_FALSE(RotationSystem::structure_issues(g, {{0}, {}}).empty());
  EXPECT_FALSE(RotationSystem::structure_issues(g, {{0, 0}, {0}}).empty());
  EXPECT_TRUE(RotationSystem::structure_issues(g, {{0}, {0}}).empty());
  EXPECT_THROW(RotationSystem(g, {{0}}), InputError);
}

TEST(Planarity, TriangleHasTwoFaces) {
  Graph g;
  g.vertex_count = 3;
  g.add_arc(0, 1);
  g.add_arc(1, 2);
  g.add_arc(0, 2);
  const PlanarityReport r = validate_planarity(g, rotation_from_points(g, {{0, 0}, {2, 0}, {1, 2}}));
  EXPECT_TRUE(r.planar);
  EXPECT_EQ(r.face_count, 2);
}

TEST(Planarity, SingleArcHasOneFace) {
  Graph g;
  g.vertex_count = 2;
  g.add_arc(0, 1);
  const PlanarityReport r = validate_planarity(g, {{0}, {0}});
  EXPECT_TRUE(r.planar);
  EXPECT_EQ(r.face_count, 1);
}

TEST(Planarity, CompleteGraphOnFiveVerticesFailsEuler) {
  Graph g;
  g.vertex_count = 5;
  for (VertexId u = 0; u < 5; ++u) {
    for (VertexId v = u + 1; v < 5; ++v) g.add_arc(u, v);
  }
  // drawn with the vertices on a convex pentagon
  const CyclicOrders orders = rotation_from_points(g, {{0, 10}, {10, 3}, {6, -8}, {-6, -8}, {-10, 3}});
  const int faces = count_faces(g, orders);
  EXPECT_NE(5 - 10 + faces, 2);
  const PlanarityReport r = validate_planarity(g, orders);
  EXPECT_FALSE(r.planar);
  EXPECT_EQ(r.face_count, faces);
}

TEST(Planarity, BadlyOrderedSquareIsRejected) {
  // a 4-cycle with a chord whose order at one end is flipped
  Graph g;
  g.vertex_count = 4;
  g.add_arc(0, 1);
  g.add_arc(1, 2);
  g.add_arc(2, 3);
  g.add_arc(0, 3);
  g.add_arc(0, 2);
  CyclicOrders orders = rotation_from_points(g, {{0, 0}, {2, 0}, {2, 2}, {0, 2}});
  EXPECT_TRUE(validate_planarity(g, orders).planar);
  std::swap(orders[2][0], orders[2][1]);
  const bool euler_holds = 4 - 5 + count_faces(g, orders) == 2;
  EXPECT_FALSE(euler_holds);
  EXPECT_FALSE(validate_planarity(g, orders).planar);
}

namespace {

// Two incoming and two outgoing arcs at v = 0 with the geometry of the
// crossing example: in-arcs from the left, out-arcs to the right.
struct Cross {
  Graph g;
  CyclicOrders orders;
};

Cross cross() {
  Cross c;
  c.g.vertex_count = 5;  // v, u1, u2, w1, w2
  c.g.add_arc(1, 0);     // a1
  c.g.add_arc(0, 3);     // b1
  c.g.add_arc(2, 0);     // a2
  c.g.add_arc(0, 4);     // b2
  c.orders = rotation_from_points(c.g, {{0, 0}, {-3, 1}, {-3, -1}, {3, -1}, {3, 1}});
  return c;
}

}  // namespace

TEST(Crossing, FigureFourPathsCross) {
  const Cross c = cross();
  const RotationSystem r(c.g, c.orders);
  EXPECT_TRUE(paths_cross(r, std::vector<ArcId>{0, 1}, std::vector<ArcId>{2, 3}));
  EXPECT_TRUE(passages_cross(r, 0, 0, 1, 2, 3));
  // swapping the exits uncrosses them
  EXPECT_FALSE(paths_cross(r, std::vector<ArcId>{0, 3}, std::vector<ArcId>{2, 1}));
}

TEST(Crossing, SplitCopiesDecideCrossing) {
  // v = 0 at (-2, 0), w = 1 at (2, 0); u, x feed v; y, r leave w.
  // Two copies of (v, w): arc 2 bends up, arc 3 bends down.
  Graph g;
  g.vertex_count = 6;  // v, w, u, x, r, y
  g.add_arc(2, 0);     // 0: u -> v (from upper left)
  g.add_arc(3, 0);     // 1: x -> v (from lower left)
  g.add_arc(0, 1);     // 2: upper copy
  g.add_arc(0, 1);     // 3: lower copy
  g.add_arc(1, 4);     // 4: w -> r (lower right)
  g.add_arc(1, 5);     // 5: w -> y (upper right)
  const CyclicOrders orders = {{2, 0, 1, 3}, {5, 2, 3, 4}, {0}, {1}, {4}, {5}};
  const RotationSystem r(g, orders);
  ASSERT_TRUE(validate_planarity(r).planar);
  // upper in, upper copy, upper out and the same below: not crossing
  EXPECT_FALSE(paths_cross(r, std::vector<ArcId>{0, 2, 5}, std::vector<ArcId>{1, 3, 4}));
  // upper in, upper copy, lower out against lower in, lower copy, upper out
  EXPECT_TRUE(paths_cross(r, std::vector<ArcId>{0, 2, 4}, std::vector<ArcId>{1, 3, 5}));
}

TEST(Crossing, NoSharedInternalVertex) {
  const Cross c = cross();
  const RotationSystem r(c.g, c.orders);
  EXPECT_FALSE(paths_cross(r, std::vector<ArcId>{0}, std::vector<ArcId>{3}));
  EXPECT_THROW(paths_cross(r, std::vector<ArcId>{0, 1}, std::vector<ArcId>{1}), InputError);
}
