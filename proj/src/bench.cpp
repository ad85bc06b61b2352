#include "ssuf/bench.hpp"

#include <algorithm>
#include <chrono>

#include "ssuf/errors.hpp"
#include "ssuf/generator.hpp"
#include "ssuf/solver.hpp"

namespace ssuf {

std::vector<BenchRow> run_grid_bench(const std::vector<int>& sizes, std::uint64_t seed, int repeats) {
  if (repeats < 1) throw InputError("repeats must be positive");
  std::vector<BenchRow> rows;
  for (int n : sizes) {
    GeneratorSpec spec;
    spec.kind = GeneratorKind::grid;
    spec.rows = n;
    spec.cols = n;
    spec.terminal_count = std::min(4, 2 * n - 2);
    spec.path_samples = n;
    spec.seed = seed;
    const PssufInstance inst = generate(spec);

    std::vector<double> times;
    UnsplittableFlow flow;
    for (int r = 0; r < repeats; ++r) {
      const auto start = std::chrono::steady_clock::now();
      flow = solve(inst);
      const auto stop = std::chrono::steady_clock::now();
      times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
    }
    std::sort(times.begin(), times.end());

    BenchRow row;
    row.size = n;
    row.vertices = inst.graph.vertex_count;
    row.path_count = solve_traced(inst, std::nullopt).decomposition.path_count();
    row.wall_ms = times[times.size() / 2];
    const Rational d_max = inst.d_max();
    row.deviation_ratio = d_max.is_zero() ? Rational(0) : flow.certificate.max_abs_deviation / d_max;
    rows.push_back(row);
  }
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "size,l,wall_ms,max_deviation_ratio\n";
  for (const BenchRow& r : rows) {
    out << r.size << ',' << r.path_count << ',' << r.wall_ms << ',' << r.deviation_ratio.str() << '\n';
  }
}

}  // namespace ssuf
