// ssuf: command line front end.
// Exit codes: 0 success, 1 invalid input or failed check, 2 usage error.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ssuf/bench.hpp"
#include "ssuf/dot_export.hpp"
#include "ssuf/errors.hpp"
#include "ssuf/generator.hpp"
#include "ssuf/json_io.hpp"
#include "ssuf/solver.hpp"

using namespace ssuf;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json load(const std::string& path) {
  if (path != "-" && !std::filesystem::exists(path)) throw UsageError("no such file: " + path);
  return read_json(path);
}

PssufInstance load_valid_instance(const std::string& path) {
  PssufInstance inst = instance_from_json(load(path));
  const ValidationReport report = validate_instance(inst);
  if (!report.ok()) throw InvalidInstance(report.summary());
  return inst;
}

int cmd_validate(const std::string& path) {
  const PssufInstance inst = instance_from_json(load(path));
  const ValidationReport report = validate_instance(inst);
  if (report.ok()) {
    std::cout << "ok: " << inst.graph.vertex_count << " vertices, " << inst.graph.arc_count() << " arcs, "
              << inst.terminals.size() << " terminals, d_max " << inst.d_max() << "\n";
    return 0;
  }
  std::cout << report.summary() << "\n";
  return 1;
}

int cmd_decompose(const std::string& path, const std::string& dot_path, const std::string& out_path) {
  const PssufInstance inst = load_valid_instance(path);
  const SolveTrace trace = solve_traced(inst, std::nullopt);
  const NiceReport nice = check_nice(trace.stripped.instance, trace.decomposition);
  if (!dot_path.empty()) {
    std::ofstream dot(dot_path);
    if (!dot) throw InputError("cannot write " + dot_path);
    dot << decomposition_to_dot(trace.decomposition, trace.stripped.instance.source);
  }
  Json doc = decomposition_to_json(trace.decomposition);
  doc["nice"] = nice.ok();
  write_json(out_path, doc);
  if (!nice.ok()) {
    std::cerr << nice.summary() << "\n";
    return 1;
  }
  return 0;
}

int cmd_solve(const std::string& path, bool with_costs, const std::string& out_path) {
  const PssufInstance inst = load_valid_instance(path);
  UnsplittableFlow sol;
  if (with_costs) {
    if (!inst.costs) throw InputError("--costs needs a cost on every arc of the instance");
    sol = solve_with_costs(inst, *inst.costs);
  } else {
    sol = solve(inst);
  }
  write_json(out_path, solution_to_json(sol));
  return 0;
}

int cmd_verify(const std::string& inst_path, const std::string& sol_path, int multiplier, bool with_costs) {
  const PssufInstance inst = load_valid_instance(inst_path);
  const UnsplittableFlow sol = solution_from_json(load(sol_path));
  std::optional<std::vector<Rational>> costs;
  if (with_costs) {
    if (!inst.costs) throw InputError("--costs needs a cost on every arc of the instance");
    costs = inst.costs;
  }
  const VerificationReport report =
      verify_solution(inst, sol, multiplier == 2 ? BoundMultiplier::two : BoundMultiplier::one, costs);
  std::cout << (report.ok() ? "pass" : "fail") << ": max deviation " << report.max_abs_deviation << ", bound "
            << report.bound;
  if (report.cost) std::cout << ", cost " << *report.cost << " <= " << *report.cost_bound << "?";
  std::cout << "\n";
  for (const std::string& f : report.failures) std::cout << "  " << f << "\n";
  return report.ok() ? 0 : 1;
}

int cmd_wpcs_select(const std::string& path, bool with_costs) {
  const Json doc = load(path);
  const WpcsInstance wpcs = wpcs_from_json(doc);
  Selection sel;
  Json out;
  if (with_costs) {
    const auto c = wpcs_costs_from_json(doc);
    if (!c) throw InputError("--costs needs a \"c\" array");
    sel = select_with_costs(wpcs, *c);
    out["cost"] = rational_to_json(dot(*c, sel.z));
    out["cost_bound"] = rational_to_json(dot(*c, wpcs.y()));
  } else {
    sel = prefix_greedy_select(wpcs);
  }
  out["z"] = Json::array();
  for (const Rational& z : sel.z) out["z"].push_back(rational_to_json(z));
  out["prefix_discrepancy"] = rational_to_json(prefix_discrepancy(wpcs, sel.z));
  out["interval_discrepancy"] = rational_to_json(interval_discrepancy(wpcs, sel.z));
  out["d_max"] = rational_to_json(wpcs.d_max());
  write_json("-", out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar single-source unsplittable flow rounding"};
  app.require_subcommand(1);

  std::string file, second, out_path = "-", dot_path;
  bool with_costs = false;
  int multiplier = 1;

  auto* validate = app.add_subcommand("validate", "Check an instance file");
  validate->add_option("file", file, "Instance JSON, or - for stdin")->required();

  auto* decompose = app.add_subcommand("decompose", "Print a nice path decomposition");
  decompose->add_option("file", file)->required();
  decompose->add_option("--dot", dot_path, "Also write the split graph as Graphviz");
  decompose->add_option("--out", out_path, "Output JSON (default stdout)");

  auto* solve_cmd = app.add_subcommand("solve", "Round the flow to one path per terminal");
  solve_cmd->add_option("file", file)->required();
  solve_cmd->add_flag("--costs", with_costs, "Use the arc costs of the instance");
  solve_cmd->add_option("--out", out_path, "Output JSON (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check a solution against an instance");
  verify->add_option("file", file)->required();
  verify->add_option("solution", second)->required();
  verify->add_option("--multiplier", multiplier, "Per-arc bound in units of d_max")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  verify->add_flag("--costs", with_costs, "Also check the cost bound");

  auto* wpcs = app.add_subcommand("wpcs-select", "Round a selection instance");
  wpcs->add_option("file", file)->required();
  wpcs->add_flag("--costs", with_costs, "Respect the \"c\" vector");

  GeneratorSpec spec;
  std::string kind = "grid";
  std::string demand_lo = spec.demand_lo.str(), demand_hi = spec.demand_hi.str();
  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("--kind", kind)->check(CLI::IsMember({"grid", "layered_fan", "fixture"}));
  gen->add_option("--rows", spec.rows);
  gen->add_option("--cols", spec.cols);
  gen->add_option("--terminals", spec.terminal_count);
  gen->add_option("--samples", spec.path_samples);
  gen->add_option("--demand-lo", demand_lo);
  gen->add_option("--demand-hi", demand_hi);
  gen->add_option("--seed", spec.seed);
  gen->add_option("--fixture", spec.fixture, "fig1, fig2, k_disjoint (k = --rows), diamond, tamper");
  gen->add_option("--out", out_path);

  std::vector<int> sizes{25, 50, 100, 200};
  std::uint64_t bench_seed = 2024;
  int repeats = 3;
  auto* bench = app.add_subcommand("bench", "Time solve on n x n grids, CSV on stdout");
  bench->add_option("--sizes", sizes)->delimiter(',');
  bench->add_option("--seed", bench_seed);
  bench->add_option("--repeats", repeats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*validate) return cmd_validate(file);
    if (*decompose) return cmd_decompose(file, dot_path, out_path);
    if (*solve_cmd) return cmd_solve(file, with_costs, out_path);
    if (*verify) return cmd_verify(file, second, multiplier, with_costs);
    if (*wpcs) return cmd_wpcs_select(file, with_costs);
    if (*gen) {
      spec.kind = kind == "grid" ? GeneratorKind::grid
                                 : (kind == "layered_fan" ? GeneratorKind::layered_fan : GeneratorKind::fixture);
      spec.demand_lo = Rational::parse(demand_lo);
      spec.demand_hi = Rational::parse(demand_hi);
      write_json(out_path, instance_to_json(generate(spec)));
      return 0;
    }
    if (*bench) {
      write_bench_csv(std::cout, run_grid_bench(sizes, bench_seed, repeats));
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
