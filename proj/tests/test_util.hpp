#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "ssuf/generator.hpp"
#include "ssuf/instance.hpp"

namespace ssuf::testing {

struct ArcSpec {
  VertexId tail;
  VertexId head;
  std::string x;
};

/// Straight-line instance: one point per vertex, rotation from the drawing.
inline PssufInstance straight_line(const std::vector<Point>& at, VertexId source,
                                   const std::vector<std::pair<VertexId, std::string>>& terminals,
                                   const std::vector<ArcSpec>& arcs) {
  PssufInstance inst;
  inst.graph.vertex_count = static_cast<int>(at.size());
  inst.source = source;
  for (const auto& [v, d] : terminals) inst.terminals.push_back({v, Rational::parse(d)});
  for (const ArcSpec& a : arcs) {
    inst.graph.add_arc(a.tail, a.head);
    inst.flow.push_back(Rational::parse(a.x));
  }
  inst.rotation = rotation_from_points(inst.graph, at);
  return inst;
}

/// s -> t with x = d = q.
inline PssufInstance single_arc(const std::string& q = "1") {
  return straight_line({{0, 0}, {1, 0}}, 0, {{1, q}}, {{0, 1, q}});
}

inline std::vector<Rational> rationals(std::initializer_list<const char*> values) {
  std::vector<Rational> out;
  for (const char* v : values) out.push_back(Rational::parse(v));
  return out;
}

}  // namespace ssuf::testing
