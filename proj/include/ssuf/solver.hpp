#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ssuf/discrepancy.hpp"
#include "ssuf/instance.hpp"
#include "ssuf/path_decomposition.hpp"

namespace ssuf {

enum class BoundMultiplier { one = 1, two = 2 };

struct Certificate {
  Rational max_abs_deviation;
  Rational bound;
  std::optional<Rational> cost;
  std::optional<Rational> cost_bound;
};

/// One path per terminal in the caller's graph.
struct UnsplittableFlow {
  std::map<VertexId, std::vector<ArcId>> paths;
  std::vector<Rational> arc_flow;
  /// x(a) - flow(a) per arc.
  std::vector<Rational> deviation;
  Certificate certificate;
  std::vector<VertexId> dropped_terminals;
};

/// Intermediate results of one solve, for inspection and benchmarks.
struct SolveTrace {
  NormalizeResult normalized;
  StripResult stripped;
  ArcSplitDecomposition decomposition;
  std::optional<WpcsInstance> wpcs;
  std::vector<Rational> path_costs;
  Selection selection;
  UnsplittableFlow flow;
};

/// Selection instance of a decomposition: one set per terminal, y_i = lambda_i / d_t.
/// Throws DecompositionInconsistency when weights do not add up to the demands.
WpcsInstance build_wpcs(const ArcSplitDecomposition& decomposition, const std::vector<Terminal>& terminals);

/// Per-arc deviation at most d_max. Throws InvalidInstance on invalid input.
UnsplittableFlow solve(const PssufInstance& instance);

/// Per-arc deviation at most 2 d_max and c.flow <= c.x. Costs must be
/// nonnegative and one per arc (InputError otherwise).
UnsplittableFlow solve_with_costs(const PssufInstance& instance, const std::vector<Rational>& costs);

SolveTrace solve_traced(const PssufInstance& instance, const std::optional<std::vector<Rational>>& costs);

struct VerificationReport {
  std::vector<std::string> failures;
  Rational max_abs_deviation;
  Rational bound;
  std::optional<Rational> cost;
  std::optional<Rational> cost_bound;

  bool ok() const { return failures.empty(); }
};

/// Re-derives the flow of `solution` from its paths and checks paths,
/// per-arc bounds and, with costs, c.flow <= c.x.
VerificationReport verify_solution(const PssufInstance& instance, const UnsplittableFlow& solution,
                                   BoundMultiplier multiplier,
                                   const std::optional<std::vector<Rational>>& costs = std::nullopt);

}  // namespace ssuf
