#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ssuf/instance.hpp"

namespace ssuf {

enum class GeneratorKind { grid, layered_fan, fixture };

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::grid;
  int rows = 4;
  int cols = 4;
  int terminal_count = 3;
  int path_samples = 20;
  /// Sample weights are drawn from [lo, hi] with denominators 1..12.
  Rational demand_lo{1, 4};
  Rational demand_hi{2};
  std::uint64_t seed = 1;
  /// For kind == fixture: "fig1", "fig2", "k_disjoint", "diamond", "tamper".
  std::string fixture = "fig2";
};

/// Same spec, same instance, on every platform: draws come straight from
/// mt19937_64 words with rejection sampling instead of std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  long between(long lo, long hi);
  Rational rational_between(const Rational& lo, const Rational& hi, long max_denominator);

 private:
  std::mt19937_64 engine_;
};

struct Point {
  long x = 0;
  long y = 0;
};

/// Counterclockwise order of incident arcs for a straight-line drawing.
CyclicOrders rotation_from_points(const Graph& g, const std::vector<Point>& at);

/// Throws InputError if the spec describes an empty graph or too many terminals.
PssufInstance generate(const GeneratorSpec& spec);

/// Uniform random choice among out-arcs that can still reach `target`.
std::vector<ArcId> random_path(const Graph& g, VertexId from, VertexId target, Rng& rng);

/// Costs drawn from [0, hi] with denominators 1..12, one per arc.
std::vector<Rational> random_costs(int arc_count, const Rational& hi, Rng& rng);

}  // namespace ssuf
