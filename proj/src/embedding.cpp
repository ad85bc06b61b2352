#include "ssuf/embedding.hpp"

#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "ssuf/errors.hpp"

namespace ssuf {

std::vector<std::string> RotationSystem::structure_issues(const Graph& g, const CyclicOrders& orders) {
  std::vector<std::string> issues;
  if (static_cast<int>(orders.size()) != g.vertex_count) {
    issues.push_back("rotation has " + std::to_string(orders.size()) + " vertex entries, graph has " +
                     std::to_string(g.vertex_count));
    return issues;
  }
  std::vector<int> seen_at_tail(g.arc_count(), 0);
  std::vector<int> seen_at_head(g.arc_count(), 0);
  for (VertexId v = 0; v < g.vertex_count; ++v) {
    for (ArcId a : orders[v]) {
      if (!g.contains_arc(a)) {
        issues.push_back("vertex " + std::to_string(v) + " lists unknown arc " + std::to_string(a));
        continue;
      }
      const Arc& arc = g.arcs[a];
      if (arc.tail == v) {
        ++seen_at_tail[a];
      } else if (arc.head == v) {
        ++seen_at_head[a];
      } else {
        issues.push_back("vertex " + std::to_string(v) + " lists non-incident arc " + std::to_string(a));
      }
    }
  }
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    if (g.arcs[a].tail == g.arcs[a].head) {
      issues.push_back("arc " + std::to_string(a) + " is a self-loop");
      continue;
    }
    if (seen_at_tail[a] != 1) {
      issues.push_back("arc " + std::to_string(a) + " appears " + std::to_string(seen_at_tail[a]) +
                       " times around its tail " + std::to_string(g.arcs[a].tail));
    }
    if (seen_at_head[a] != 1) {
      issues.push_back("arc " + std::to_string(a) + " appears " + std::to_string(seen_at_head[a]) +
                       " times around its head " + std::to_string(g.arcs[a].head));
    }
  }
  return issues;
}

RotationSystem::RotationSystem(const Graph& g, CyclicOrders orders)
    : orders_(std::move(orders)), ends_(g.arcs), pos_at_tail_(g.arc_count(), -1), pos_at_head_(g.arc_count(), -1) {
  if (auto issues = structure_issues(g, orders_); !issues.empty()) {
    throw InputError("malformed rotation system: " + issues.front());
  }
  for (VertexId v = 0; v < vertex_count(); ++v) {
    for (int i = 0; i < degree(v); ++i) {
      const ArcId a = orders_[v][i];
      (ends_[a].tail == v ? pos_at_tail_ : pos_at_head_)[a] = i;
    }
  }
}

bool RotationSystem::incident(VertexId v, ArcId a) const {
  return a >= 0 && a < arc_count() && v >= 0 && (ends_[a].tail == v || ends_[a].head == v);
}

int RotationSystem::position(VertexId v, ArcId a) const {
  if (!incident(v, a)) {
    throw InputError("arc " + std::to_string(a) + " is not incident to vertex " + std::to_string(v));
  }
  return ends_[a].tail == v ? pos_at_tail_[a] : pos_at_head_[a];
}

ArcId RotationSystem::successor(VertexId v, ArcId a) const {
  const int p = position(v, a);
  return orders_[v][(p + 1) % degree(v)];
}

ArcId RotationSystem::predecessor(VertexId v, ArcId a) const {
  const int p = position(v, a);
  return orders_[v][(p + degree(v) - 1) % degree(v)];
}

bool is_progression(const RotationSystem& rotation, VertexId v, std::span<const ArcId> arcs) {
  if (arcs.empty()) return true;
  const int m = rotation.degree(v);
  const int start = rotation.position(v, arcs.front());
  std::vector<char> used(m, 0);
  used[start] = 1;
  int previous_offset = 0;
  bool progression = true;
  for (std::size_t i = 1; i < arcs.size(); ++i) {
    const int p = rotation.position(v, arcs[i]);
    if (used[p]) throw InputError("progression arcs must be distinct");
    used[p] = 1;
    const int offset = (p - start + m) % m;
    if (offset <= previous_offset) progression = false;
    previous_offset = offset;
  }
  return progression;
}

bool is_progression(const RotationSystem& rotation, VertexId v, std::initializer_list<ArcId> arcs) {
  return is_progression(rotation, v, std::span<const ArcId>(arcs.begin(), arcs.size()));
}

PlanarityReport validate_planarity(const Graph& g, const CyclicOrders& orders) {
  return validate_planarity(RotationSystem(g, orders));
}

PlanarityReport validate_planarity(const RotationSystem& rotation) {
  const int arcs = rotation.arc_count();
  PlanarityReport report;

  // dart index: 2*a for forward, 2*a+1 for backward
  std::vector<char> visited(2 * static_cast<std::size_t>(arcs), 0);
  auto dart_end = [&](const Dart& d) { return d.forward ? rotation.ends(d.arc).head : rotation.ends(d.arc).tail; };
  auto dart_start = [&](const Dart& d) { return d.forward ? rotation.ends(d.arc).tail : rotation.ends(d.arc).head; };

  for (int start = 0; start < 2 * arcs; ++start) {
    if (visited[start]) continue;
    std::vector<Dart> face;
    Dart d{start / 2, start % 2 == 0};
    while (!visited[2 * d.arc + (d.forward ? 0 : 1)]) {
      visited[2 * d.arc + (d.forward ? 0 : 1)] = 1;
      face.push_back(d);
      const VertexId v = dart_end(d);
      const ArcId next = rotation.successor(v, d.arc);
      d = Dart{next, rotation.ends(next).tail == v};
    }
    report.faces.push_back(std::move(face));
  }

  // Union-find over vertices touched by arcs.
  const int n = rotation.vertex_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (ArcId a = 0; a < arcs; ++a) parent[find(rotation.ends(a).tail)] = find(rotation.ends(a).head);

  std::vector<long> vertices_in(n, 0), arcs_in(n, 0), faces_in(n, 0);
  int isolated = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (rotation.degree(v) == 0) {
      ++isolated;
    } else {
      ++vertices_in[find(v)];
    }
  }
  for (ArcId a = 0; a < arcs; ++a) ++arcs_in[find(rotation.ends(a).tail)];
  for (const auto& face : report.faces) ++faces_in[find(dart_start(face.front()))];

  report.planar = true;
  int edge_components = 0;
  long face_total = 1;
  std::ostringstream why;
  for (VertexId r = 0; r < n; ++r) {
    if (find(r) != r || arcs_in[r] == 0) continue;
    ++edge_components;
    face_total += faces_in[r] - 1;
    const long euler = vertices_in[r] - arcs_in[r] + faces_in[r];
    if (euler != 2) {
      report.planar = false;
      why << "component of vertex " << r << ": V-E+F = " << vertices_in[r] << "-" << arcs_in[r] << "+"
          << faces_in[r] << " = " << euler << " != 2; ";
    }
  }
  report.component_count = edge_components + isolated;
  report.face_count = static_cast<int>(face_total);
  report.message = report.planar ? "planar" : why.str();
  return report;
}

bool passages_cross(const RotationSystem& rotation, VertexId v, ArcId in1, ArcId out1, ArcId in2, ArcId out2) {
  return is_progression(rotation, v, {in1, in2, out1, out2}) || is_progression(rotation, v, {in2, in1, out2, out1});
}

bool paths_cross(const RotationSystem& rotation, std::span<const ArcId> first, std::span<const ArcId> second) {
  std::unordered_set<ArcId> first_arcs(first.begin(), first.end());
  for (ArcId a : second) {
    if (first_arcs.contains(a)) throw InputError("paths share arc " + std::to_string(a));
  }
  // internal vertex -> (in arc, out arc) along the first path
  std::unordered_map<VertexId, std::pair<ArcId, ArcId>> first_passages;
  for (std::size_t i = 0; i + 1 < first.size(); ++i) {
    first_passages.emplace(rotation.ends(first[i]).head, std::pair{first[i], first[i + 1]});
  }
  for (std::size_t i = 0; i + 1 < second.size(); ++i) {
    const VertexId v = rotation.ends(second[i]).head;
    const auto it = first_passages.find(v);
    if (it == first_passages.end()) continue;
    if (passages_cross(rotation, v, it->second.first, it->second.second, second[i], second[i + 1])) return true;
  }
  return false;
}

}  // namespace ssuf
