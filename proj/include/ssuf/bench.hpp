#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "ssuf/rational.hpp"

namespace ssuf {

struct BenchRow {
  int size = 0;
  int vertices = 0;
  /// Number of paths in the decomposition.
  int path_count = 0;
  /// Median over the repeats.
  double wall_ms = 0;
  /// max deviation / d_max.
  Rational deviation_ratio;
};

/// Solves one n x n grid instance per size (4 terminals, n path samples)
/// and times solve() only.
std::vector<BenchRow> run_grid_bench(const std::vector<int>& sizes, std::uint64_t seed = 2024, int repeats = 3);

/// size,l,wall_ms,max_deviation_ratio
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace ssuf
