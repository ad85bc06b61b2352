#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ssuf/discrepancy.hpp"
#include "ssuf/instance.hpp"

namespace ssuf {

/// Max of |y^d(I) - z^d(I)| over every circular interval I, summed term by
/// term. Quadratic, meant as a cross-check for interval_discrepancy.
Rational naive_interval_discrepancy(const WpcsInstance& wpcs, const std::vector<Rational>& z);

/// Minimum over all integral selections of the circular-interval
/// discrepancy, with the first selection attaining it (sets enumerated in
/// order, earlier indices first). Throws CapExceeded if prod |S| > cap.
std::pair<Rational, Selection> oracle_selection_minimax(const WpcsInstance& wpcs, long cap = 1000000);

/// Every s-t path of a DAG, in lexicographic order of arc ids along the
/// way. Throws CapExceeded past `cap` paths.
std::vector<std::vector<ArcId>> enumerate_simple_paths(const Graph& g, VertexId s, VertexId t, long cap = 100000);

/// Smallest max_a |x(a) - flow(a)| over all unsplittable flows, or nullopt if
/// some terminal with positive demand is unreachable. Zero-demand terminals
/// are ignored. Throws CapExceeded if the product of path counts exceeds `cap`.
std::optional<Rational> oracle_min_deviation(const PssufInstance& instance, long cap = 100000);

/// True iff some unsplittable flow stays within multiplier * d_max on every arc.
bool oracle_enumerate_unsplittable(const PssufInstance& instance, const Rational& multiplier, long cap = 100000);

}  // namespace ssuf
