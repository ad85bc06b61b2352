#include "ssuf/generator.hpp"

#include <algorithm>
#include <limits>

#include "ssuf/errors.hpp"
#include "ssuf/fixtures.hpp"

namespace ssuf {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw InputError("empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t word;
  do {
    word = engine_();
  } while (word >= limit);
  return word % n;
}

long Rng::between(long lo, long hi) {
  if (lo > hi) throw InputError("empty range");
  return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Rational Rng::rational_between(const Rational& lo, const Rational& hi, long max_denominator) {
  if (lo > hi) throw InputError("empty rational range");
  for (int attempt = 0; attempt < 64; ++attempt) {
    const long den = between(1, max_denominator);
    const mpq_class lo_scaled = lo.raw() * den;
    const mpq_class hi_scaled = hi.raw() * den;
    mpz_class first, last;
    mpz_cdiv_q(first.get_mpz_t(), lo_scaled.get_num_mpz_t(), lo_scaled.get_den_mpz_t());
    mpz_fdiv_q(last.get_mpz_t(), hi_scaled.get_num_mpz_t(), hi_scaled.get_den_mpz_t());
    if (first > last) continue;
    return Rational(between(first.get_si(), last.get_si()), den);
  }
  return lo;
}

CyclicOrders rotation_from_points(const Graph& g, const std::vector<Point>& at) {
  CyclicOrders orders(g.vertex_count);
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    orders[g.arcs[a].tail].push_back(a);
    orders[g.arcs[a].head].push_back(a);
  }
  for (VertexId v = 0; v < g.vertex_count; ++v) {
    auto direction = [&](ArcId a) {
      const VertexId w = g.arcs[a].tail == v ? g.arcs[a].head : g.arcs[a].tail;
      return Point{at[w].x - at[v].x, at[w].y - at[v].y};
    };
    // angle in [0, 2pi) from the positive x axis
    auto lower_half = [](const Point& p) { return p.y < 0 || (p.y == 0 && p.x < 0); };
    std::sort(orders[v].begin(), orders[v].end(), [&](ArcId a, ArcId b) {
      const Point p = direction(a), q = direction(b);
      if (lower_half(p) != lower_half(q)) return !lower_half(p);
      const long cross = p.x * q.y - p.y * q.x;
      if (cross != 0) return cross > 0;
      return a < b;
    });
  }
  return orders;
}

namespace {

std::vector<char> can_reach(const Graph& g, VertexId target) {
  std::vector<std::vector<ArcId>> in(g.vertex_count);
  for (ArcId a = 0; a < g.arc_count(); ++a) in[g.arcs[a].head].push_back(a);
  std::vector<char> mark(g.vertex_count, 0);
  std::vector<VertexId> stack{target};
  mark[target] = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (ArcId a : in[v]) {
      if (!mark[g.arcs[a].tail]) {
        mark[g.arcs[a].tail] = 1;
        stack.push_back(g.arcs[a].tail);
      }
    }
  }
  return mark;
}

std::vector<ArcId> walk_to(const Adjacency& adj, const Graph& g, VertexId from, VertexId target,
                           const std::vector<char>& reaches, Rng& rng) {
  if (!reaches[from]) throw InputError("target " + std::to_string(target) + " is unreachable");
  std::vector<ArcId> path;
  std::vector<ArcId> options;
  for (VertexId v = from; v != target;) {
    options.clear();
    for (ArcId a : adj.out[v]) {
      if (reaches[g.arcs[a].head]) options.push_back(a);
    }
    const ArcId a = options[rng.below(options.size())];
    path.push_back(a);
    v = g.arcs[a].head;
  }
  return path;
}

struct Layout {
  Graph graph;
  std::vector<Point> at;
  VertexId source = 0;
  std::vector<VertexId> boundary;
};

Layout grid_layout(int rows, int cols) {
  Layout out;
  out.graph.vertex_count = rows * cols;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      out.at.push_back({c, -r});
      if (c + 1 < cols) out.graph.add_arc(id(r, c), id(r, c + 1));
      if (r + 1 < rows) out.graph.add_arc(id(r, c), id(r + 1, c));
      const bool edge = r == 0 || c == 0 || r == rows - 1 || c == cols - 1;
      if (edge && id(r, c) != 0) out.boundary.push_back(id(r, c));
    }
  }
  return out;
}

Layout fan_layout(int layers, int width) {
  Layout out;
  out.graph.vertex_count = 1 + layers * width;
  out.at.push_back({width - 1, 0});
  auto id = [width](int k, int i) { return 1 + k * width + i; };
  for (int k = 0; k < layers; ++k) {
    for (int i = 0; i < width; ++i) out.at.push_back({2L * i, -2L * (k + 1)});
  }
  for (int i = 0; i < width; ++i) out.graph.add_arc(0, id(0, i));
  for (int k = 0; k < layers; ++k) {
    for (int i = 0; i < width; ++i) {
      if (i + 1 < width) out.graph.add_arc(id(k, i), id(k, i + 1));
      if (k + 1 < layers) {
        out.graph.add_arc(id(k, i), id(k + 1, i));
        if (i + 1 < width) out.graph.add_arc(id(k, i), id(k + 1, i + 1));
      }
      if (k == layers - 1 || i == 0 || i == width - 1) out.boundary.push_back(id(k, i));
    }
  }
  return out;
}

}  // namespace

std::vector<ArcId> random_path(const Graph& g, VertexId from, VertexId target, Rng& rng) {
  return walk_to(Adjacency(g), g, from, target, can_reach(g, target), rng);
}

std::vector<Rational> random_costs(int arc_count, const Rational& hi, Rng& rng) {
  std::vector<Rational> costs;
  costs.reserve(arc_count);
  for (int a = 0; a < arc_count; ++a) costs.push_back(rng.rational_between(Rational(0), hi, 12));
  return costs;
}

PssufInstance generate(const GeneratorSpec& spec) {
  if (spec.kind == GeneratorKind::fixture) return fixture_instance(spec.fixture, spec.rows);
  if (spec.rows < 1 || spec.cols < 1) throw InputError("rows and cols must be positive");
  if (spec.terminal_count < 0) throw InputError("terminal count must be nonnegative");

  Layout layout = spec.kind == GeneratorKind::grid ? grid_layout(spec.rows, spec.cols)
                                                   : fan_layout(spec.rows, spec.cols);
  if (layout.graph.arc_count() == 0) throw InputError("spec produces an empty graph");
  if (spec.terminal_count > static_cast<int>(layout.boundary.size())) {
    throw InputError("only " + std::to_string(layout.boundary.size()) + " boundary vertices for " +
                     std::to_string(spec.terminal_count) + " terminals");
  }

  Rng rng(spec.seed);
  std::vector<VertexId> pool = layout.boundary;
  for (std::size_t i = 0; i < pool.size(); ++i) std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
  std::vector<VertexId> chosen(pool.begin(), pool.begin() + spec.terminal_count);
  std::sort(chosen.begin(), chosen.end());

  PssufInstance inst;
  inst.source = layout.source;
  inst.flow.assign(layout.graph.arc_count(), Rational(0));
  for (VertexId t : chosen) inst.terminals.push_back({t, Rational(0)});

  const Adjacency adj(layout.graph);
  std::vector<std::vector<char>> reaches;
  for (VertexId t : chosen) reaches.push_back(can_reach(layout.graph, t));
  const int samples = chosen.empty() ? 0 : std::max(spec.path_samples, spec.terminal_count);
  for (int j = 0; j < samples; ++j) {
    const std::size_t k = j < spec.terminal_count ? j : rng.below(chosen.size());
    const Rational w = rng.rational_between(spec.demand_lo, spec.demand_hi, 12);
    for (ArcId a : walk_to(adj, layout.graph, layout.source, chosen[k], reaches[k], rng)) inst.flow[a] += w;
    inst.terminals[k].d += w;
  }
  inst.rotation = rotation_from_points(layout.graph, layout.at);
  inst.graph = std::move(layout.graph);
  return inst;
}

}  // namespace ssuf
