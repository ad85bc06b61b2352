#include "ssuf/json_io.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "ssuf/errors.hpp"

namespace ssuf {

namespace {

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return doc.at(key);
}

int int_from_json(const Json& value, const char* what) {
  if (!value.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return value.get<int>();
}

}  // namespace

Rational rational_from_json(const Json& value) {
  if (value.is_number_integer()) return Rational(value.get<long>());
  if (value.is_string()) {
    try {
      return Rational::parse(value.get<std::string>());
    } catch (const std::exception& e) {
      throw InputError(e.what());
    }
  }
  throw InputError("expected a rational string such as \"7/2\", got " + value.dump());
}

Json rational_to_json(const Rational& q) { return q.str(); }

PssufInstance instance_from_json(const Json& doc) {
  PssufInstance inst;
  try {
    inst.graph.vertex_count = int_from_json(field(doc, "vertices"), "vertices");
    if (inst.graph.vertex_count < 0) throw InputError("vertices must be nonnegative");
    inst.source = int_from_json(field(doc, "source"), "source");

    for (const Json& t : field(doc, "terminals")) {
      inst.terminals.push_back({int_from_json(field(t, "v"), "terminal v"), rational_from_json(field(t, "d"))});
    }

    const Json& arcs = field(doc, "arcs");
    if (!arcs.is_array()) throw InputError("arcs must be an array");
    const int m = static_cast<int>(arcs.size());
    inst.graph.arcs.resize(m);
    inst.flow.resize(m);
    std::vector<Rational> costs(m);
    std::vector<char> seen(m, 0);
    int with_cost = 0;
    for (const Json& a : arcs) {
      const int id = int_from_json(field(a, "id"), "arc id");
      if (id < 0 || id >= m || seen[id]) throw InputError("arc ids must be exactly 0.." + std::to_string(m - 1));
      seen[id] = 1;
      inst.graph.arcs[id] = {int_from_json(field(a, "tail"), "tail"), int_from_json(field(a, "head"), "head")};
      inst.flow[id] = rational_from_json(field(a, "x"));
      if (a.contains("cost")) {
        costs[id] = rational_from_json(a.at("cost"));
        ++with_cost;
      }
    }
    if (with_cost == m && m > 0) {
      inst.costs = std::move(costs);
    } else if (with_cost != 0) {
      throw InputError("either every arc or no arc may carry a cost");
    }

    inst.rotation.assign(std::max(inst.graph.vertex_count, 0), {});
    const Json& rotation = field(doc, "rotation");
    if (!rotation.is_object()) throw InputError("rotation must be an object keyed by vertex id");
    for (const auto& [key, order] : rotation.items()) {
      int v = -1;
      try {
        std::size_t used = 0;
        v = std::stoi(key, &used);
        if (used != key.size()) v = -1;
      } catch (const std::exception&) {
        v = -1;
      }
      if (v < 0 || v >= inst.graph.vertex_count) throw InputError("rotation key '" + key + "' is not a vertex");
      for (const Json& a : order) inst.rotation[v].push_back(int_from_json(a, "rotation entry"));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(e.what());
  }
  return inst;
}

Json instance_to_json(const PssufInstance& inst) {
  Json doc;
  doc["vertices"] = inst.graph.vertex_count;
  doc["source"] = inst.source;
  doc["terminals"] = Json::array();
  for (const Terminal& t : inst.terminals) doc["terminals"].push_back({{"v", t.v}, {"d", rational_to_json(t.d)}});
  doc["arcs"] = Json::array();
  for (ArcId a = 0; a < inst.graph.arc_count(); ++a) {
    Json arc{{"id", a}, {"tail", inst.graph.arcs[a].tail}, {"head", inst.graph.arcs[a].head},
             {"x", rational_to_json(inst.flow[a])}};
    if (inst.costs) arc["cost"] = rational_to_json((*inst.costs)[a]);
    doc["arcs"].push_back(std::move(arc));
  }
  doc["rotation"] = Json::object();
  for (std::size_t v = 0; v < inst.rotation.size(); ++v) doc["rotation"][std::to_string(v)] = inst.rotation[v];
  return doc;
}

Json solution_to_json(const UnsplittableFlow& solution) {
  Json doc;
  doc["paths"] = Json::object();
  for (const auto& [t, path] : solution.paths) doc["paths"][std::to_string(t)] = path;
  doc["arc_flow"] = Json::object();
  for (std::size_t a = 0; a < solution.arc_flow.size(); ++a) {
    doc["arc_flow"][std::to_string(a)] = rational_to_json(solution.arc_flow[a]);
  }
  Json cert{{"max_abs_deviation", rational_to_json(solution.certificate.max_abs_deviation)},
            {"bound", rational_to_json(solution.certificate.bound)}};
  if (solution.certificate.cost) cert["cost"] = rational_to_json(*solution.certificate.cost);
  if (solution.certificate.cost_bound) cert["cost_bound"] = rational_to_json(*solution.certificate.cost_bound);
  doc["certificate"] = std::move(cert);
  doc["dropped_terminals"] = solution.dropped_terminals;
  return doc;
}

UnsplittableFlow solution_from_json(const Json& doc) {
  UnsplittableFlow sol;
  try {
    for (const auto& [key, path] : field(doc, "paths").items()) {
      std::vector<ArcId>& out = sol.paths[std::stoi(key)];
      for (const Json& a : path) out.push_back(int_from_json(a, "path arc"));
    }
    if (doc.contains("arc_flow")) {
      const Json& flows = doc.at("arc_flow");
      sol.arc_flow.resize(flows.size());
      for (const auto& [key, value] : flows.items()) {
        const int a = std::stoi(key);
        if (a < 0 || a >= static_cast<int>(flows.size())) throw InputError("arc_flow keys must be dense");
        sol.arc_flow[a] = rational_from_json(value);
      }
    }
  } catch (const InputError&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(e.what());
  } catch (const std::logic_error& e) {  // stoi
    throw InputError(std::string("bad key in solution: ") + e.what());
  }
  return sol;
}

Json decomposition_to_json(const ArcSplitDecomposition& dec) {
  Json doc;
  doc["vertices"] = dec.split_graph.vertex_count;
  doc["split_arcs"] = Json::array();
  for (ArcId f = 0; f < dec.split_graph.arc_count(); ++f) {
    doc["split_arcs"].push_back({{"id", f}, {"tail", dec.split_graph.arcs[f].tail},
                                 {"head", dec.split_graph.arcs[f].head}, {"phi", dec.phi[f]}});
  }
  doc["phi"] = dec.phi;
  doc["split_rotation"] = Json::object();
  for (std::size_t v = 0; v < dec.split_rotation.size(); ++v) {
    doc["split_rotation"][std::to_string(v)] = dec.split_rotation[v];
  }
  doc["paths"] = dec.paths;
  doc["lambda"] = Json::array();
  for (const Rational& w : dec.weights) doc["lambda"].push_back(rational_to_json(w));
  doc["terminal_of"] = dec.terminal_of;
  return doc;
}

WpcsInstance wpcs_from_json(const Json& doc) {
  try {
    const int l = int_from_json(field(doc, "l"), "l");
    std::vector<std::vector<int>> sets;
    for (const Json& s : field(doc, "sets")) {
      sets.emplace_back();
      for (const Json& i : s) sets.back().push_back(int_from_json(i, "set index"));
    }
    std::vector<Rational> d, y;
    for (const Json& v : field(doc, "d")) d.push_back(rational_from_json(v));
    for (const Json& v : field(doc, "y")) y.push_back(rational_from_json(v));
    if (static_cast<int>(y.size()) != l) throw InputError("y must have l entries");
    return WpcsInstance(std::move(sets), std::move(d), std::move(y));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(e.what());
  }
}

std::optional<std::vector<Rational>> wpcs_costs_from_json(const Json& doc) {
  if (!doc.contains("c")) return std::nullopt;
  std::vector<Rational> c;
  for (const Json& v : doc.at("c")) c.push_back(rational_from_json(v));
  return c;
}

Json wpcs_to_json(const WpcsInstance& wpcs, const std::optional<std::vector<Rational>>& costs) {
  Json doc;
  doc["l"] = wpcs.size();
  doc["sets"] = wpcs.sets();
  doc["d"] = Json::array();
  for (const Rational& d : wpcs.demands()) doc["d"].push_back(rational_to_json(d));
  doc["y"] = Json::array();
  for (const Rational& y : wpcs.y()) doc["y"].push_back(rational_to_json(y));
  if (costs) {
    doc["c"] = Json::array();
    for (const Rational& c : *costs) doc["c"].push_back(rational_to_json(c));
  }
  return doc;
}

Json read_json(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    buffer << in.rdbuf();
  }
  try {
    return Json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_json(const std::string& path, const Json& doc) {
  if (path == "-") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << doc.dump(2) << "\n";
}

}  // namespace ssuf
