#include "ssuf/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "ssuf/errors.hpp"
#include "ssuf/generator.hpp"

namespace ssuf {

PssufInstance fig2_instance() {
  PssufInstance inst;
  inst.graph.vertex_count = 11;
  inst.source = 0;
  inst.terminals = {{1, Rational(7)}, {2, Rational(5)}, {3, Rational(3)}, {4, Rational(2)}};
  struct Row {
    VertexId tail, head;
    const char* x;
  };
  const Row rows[] = {{8, 1, "4.2"},  {5, 1, "2.8"},  {6, 2, "1.25"}, {5, 2, "1.25"}, {0, 2, "2.5"},  {0, 4, "1.2"},
                      {0, 5, "5.45"}, {0, 6, "5.65"}, {0, 9, "2.2"},  {6, 7, "2.9"},  {7, 8, "1.4"},  {5, 8, "1.4"},
                      {6, 9, "1.5"},  {7, 3, "1.5"},  {9, 4, "0.8"},  {9, 10, "2.9"}, {10, 3, "1.5"}, {10, 8, "1.4"}};
  for (const Row& r : rows) {
    inst.graph.add_arc(r.tail, r.head);
    inst.flow.push_back(Rational::parse(r.x));
  }
  // drawing coordinates times 100
  const std::vector<Point> at = {{716, -904},  {660, -1500}, {1066, -1174}, {1306, -656}, {350, -630},  {368, -1170},
                                 {1058, -766}, {1330, -900}, {1440, -1500}, {800, -444}, {1492, -538}};
  inst.rotation = rotation_from_points(inst.graph, at);
  return inst;
}

PathList fig2_published_paths() {
  PathList out;
  out.paths = {{6, 1},     {6, 11, 0},     {6, 3}, {4},     {7, 2}, {7, 9, 10, 0},
               {7, 9, 13}, {7, 12, 15, 16}, {8, 15, 17, 0},  {8, 14}, {5}};
  for (const char* w : {"14/5", "7/5", "5/4", "5/2", "5/4", "7/5", "3/2", "3/2", "7/5", "4/5", "6/5"}) {
    out.weights.push_back(Rational::parse(w));
  }
  return out;
}

namespace {

enum class Bend { none, left, right };

/// Builds a rotation from per-endpoint drawing angles, for curved arcs.
struct AngleDrawing {
  std::vector<std::pair<double, double>> at;
  std::map<VertexId, std::vector<std::pair<long, ArcId>>> around;

  ArcId add(PssufInstance& inst, VertexId u, VertexId v, Bend bend, const Rational& x) {
    const double pi = std::acos(-1.0);
    const double theta = std::atan2(at[v].second - at[u].second, at[v].first - at[u].first) * 180.0 / pi;
    double out_angle = theta, in_angle = theta + 180.0;
    if (bend == Bend::left) {
      out_angle = theta + 30.0;
      in_angle = theta + 150.0;
    } else if (bend == Bend::right) {
      out_angle = theta - 30.0;
      in_angle = theta + 210.0;
    }
    auto tenths = [](double deg) {
      long t = std::lround(deg * 10.0) % 3600;
      return t < 0 ? t + 3600 : t;
    };
    const ArcId a = inst.graph.add_arc(u, v);
    inst.flow.push_back(x);
    around[u].push_back({tenths(out_angle), a});
    around[v].push_back({tenths(in_angle), a});
    return a;
  }

  CyclicOrders orders(int n) {
    CyclicOrders out(n);
    for (auto& [v, list] : around) {
      std::sort(list.begin(), list.end());
      for (const auto& entry : list) out[v].push_back(entry.second);
    }
    return out;
  }
};

}  // namespace

Fig1Gadget fig1_gadget() {
  Fig1Gadget g;
  PssufInstance& inst = g.instance;
  constexpr VertexId s = 0, t1 = 17, t2 = 18, t3 = 19, p1 = 20, p2 = 21, p3 = 22;
  auto a_of = [](int k) { return 2 * k - 1; };
  auto b_of = [](int k) { return 2 * k; };
  inst.graph.vertex_count = 23;
  inst.source = s;
  inst.terminals = {{t1, Rational(2)}, {t2, Rational(2)}, {t3, Rational(2)}};

  AngleDrawing draw;
  const double xscale = 1.3;
  draw.at.resize(23);
  draw.at[s] = {0, 0};
  for (int k = 1; k <= 8; ++k) {
    const int column = k <= 4 ? k : k - 4;
    const double y = k <= 4 ? 1 : -1;
    draw.at[a_of(k)] = {xscale * (2 * column - 1), y};
    draw.at[b_of(k)] = {xscale * (2 * column), y};
  }
  draw.at[t1] = {xscale * 9, 0};
  draw.at[t2] = {xscale * 10, 0};
  draw.at[t3] = {xscale * 11, 0};
  draw.at[p1] = {xscale * 2.5, 0};
  draw.at[p2] = {xscale * 4.5, 0};
  draw.at[p3] = {xscale * 6.5, 0};

  for (int k = 1; k <= 8; ++k) g.black_arcs.push_back(draw.add(inst, a_of(k), b_of(k), Bend::none, Rational(3)));
  auto black = [&](int k) { return g.black_arcs[k - 1]; };
  auto unit = [&](VertexId u, VertexId v, Bend bend) { return draw.add(inst, u, v, bend, Rational(1)); };
  const Bend L = Bend::left, R = Bend::right, N = Bend::none;

  g.paths.resize(3);
  g.paths[0][0] = {unit(s, a_of(1), N), black(1), unit(b_of(1), a_of(2), N), black(2), unit(b_of(2), a_of(3), N),
                   black(3), unit(b_of(3), a_of(4), N), black(4), unit(b_of(4), t1, N)};
  g.paths[0][1] = {unit(s, a_of(5), N), black(5), unit(b_of(5), a_of(6), N), black(6), unit(b_of(6), a_of(7), N),
                   black(7), unit(b_of(7), a_of(8), N), black(8), unit(b_of(8), t1, N)};
  g.paths[1][0] = {unit(s, a_of(1), L),  black(1), unit(b_of(1), a_of(2), L), black(2),
                   unit(b_of(2), p2, N), unit(p2, a_of(7), N), black(7),       unit(b_of(7), a_of(8), R),
                   black(8),             unit(b_of(8), t2, R)};
  g.paths[1][1] = {unit(s, a_of(5), L),  black(5), unit(b_of(5), a_of(6), R), black(6),
                   unit(b_of(6), p2, N), unit(p2, a_of(3), N), black(3),       unit(b_of(3), a_of(4), L),
                   black(4),             unit(b_of(4), t2, L)};
  g.paths[2][0] = {unit(s, a_of(1), R),  black(1), unit(b_of(1), p1, N),   unit(p1, a_of(6), N),
                   black(6),             unit(b_of(6), a_of(7), R), black(7), unit(b_of(7), p3, N),
                   unit(p3, a_of(4), N), black(4),             unit(b_of(4), t3, L)};
  g.paths[2][1] = {unit(s, a_of(5), R),  black(5), unit(b_of(5), p1, N),   unit(p1, a_of(2), N),
                   black(2),             unit(b_of(2), a_of(3), L), black(3), unit(b_of(3), p3, N),
                   unit(p3, a_of(8), N), black(8),             unit(b_of(8), t3, R)};
  inst.rotation = draw.orders(inst.graph.vertex_count);
  return g;
}

PssufInstance k_disjoint_instance(int k) {
  if (k < 1) throw InputError("k must be positive");
  PssufInstance inst;
  inst.graph.vertex_count = k + 2;
  inst.source = 0;
  const VertexId t = k + 1;
  inst.terminals = {{t, Rational(k)}};
  std::vector<Point> at(k + 2);
  at[0] = {k - 1, 2};
  at[t] = {k - 1, -2};
  for (int i = 1; i <= k; ++i) {
    at[i] = {2L * (i - 1), 0};
    inst.graph.add_arc(0, i);
    inst.graph.add_arc(i, t);
    inst.flow.push_back(Rational(1));
    inst.flow.push_back(Rational(1));
  }
  inst.rotation = rotation_from_points(inst.graph, at);
  return inst;
}

PssufInstance diamond_instance() {
  PssufInstance inst;
  inst.graph.vertex_count = 4;
  inst.source = 0;
  inst.terminals = {{3, Rational(1)}};
  inst.graph.add_arc(0, 1);
  inst.graph.add_arc(1, 3);
  inst.graph.add_arc(0, 2);
  inst.graph.add_arc(2, 3);
  inst.flow.assign(4, Rational(1, 2));
  inst.costs = std::vector<Rational>{Rational(1), Rational(1), Rational(2), Rational(2)};
  inst.rotation = rotation_from_points(inst.graph, {{0, 0}, {1, 1}, {1, -1}, {2, 0}});
  return inst;
}

PssufInstance tamper_instance() {
  PssufInstance inst;
  inst.graph.vertex_count = 4;  // s, v, t1, t2
  inst.source = 0;
  inst.terminals = {{2, Rational(1)}, {3, Rational(1)}};
  inst.graph.add_arc(0, 1);
  inst.graph.add_arc(1, 2);
  inst.graph.add_arc(1, 3);
  inst.graph.add_arc(0, 2);
  inst.graph.add_arc(0, 3);
  inst.flow = {Rational(999, 1000), Rational(999, 2000), Rational(999, 2000), Rational(1001, 2000),
               Rational(1001, 2000)};
  inst.rotation = rotation_from_points(inst.graph, {{0, 0}, {0, -2}, {-2, -4}, {2, -4}});
  return inst;
}

WpcsInstance half_integral_wpcs() {
  return WpcsInstance({{0, 5}, {1, 4}, {2, 3}}, {Rational(2), Rational(1), Rational(2)},
                      std::vector<Rational>(6, Rational(1, 2)));
}

WpcsInstance skewed_pair_wpcs(const Rational& eps) {
  return WpcsInstance({{0, 1}}, {Rational(1)}, {eps, Rational(1) - eps});
}

PssufInstance fixture_instance(const std::string& name, int k) {
  if (name == "fig1") return fig1_gadget().instance;
  if (name == "fig2") return fig2_instance();
  if (name == "k_disjoint") return k_disjoint_instance(k);
  if (name == "diamond") return diamond_instance();
  if (name == "tamper") return tamper_instance();
  throw InputError("unknown fixture '" + name + "'");
}

}  // namespace ssuf
