#pragma once

#include <array>
#include <string>
#include <vector>

#include "ssuf/discrepancy.hpp"
#include "ssuf/instance.hpp"

namespace ssuf {

/// Four-terminal example with demands (7, 5, 3, 2) on 11 vertices and 18 arcs.
/// Vertex 0 is s, 1..4 are t1..t4.
PssufInstance fig2_instance();

/// The 11 weighted paths drawn for the same instance, in their published order.
struct PathList {
  std::vector<std::vector<ArcId>> paths;
  std::vector<Rational> weights;
};
PathList fig2_published_paths();

/// Three-terminal gadget: every terminal has two unit paths and each of the
/// eight first/second combinations shares exactly one black arc with x = 3.
struct Fig1Gadget {
  PssufInstance instance;
  /// paths[k][r] is path r of terminal k.
  std::vector<std::array<std::vector<ArcId>, 2>> paths;
  std::vector<ArcId> black_arcs;
};
Fig1Gadget fig1_gadget();

/// s -> v_i -> t for i < k with unit flow, one terminal of demand k.
PssufInstance k_disjoint_instance(int k);

/// Two s-t paths with x = 1/2 each, d = 1; the upper one costs 1 per arc, the lower 2.
PssufInstance diamond_instance();

/// Two terminals reachable through a shared middle vertex or directly;
/// routing both through the middle misses the d_max bound by 1/1000.
PssufInstance tamper_instance();

/// l = 6, sets {0,5}, {1,4}, {2,3}, d = (2, 1, 2), y = 1/2.
WpcsInstance half_integral_wpcs();

/// l = 2, one set, d = 1, y = (eps, 1 - eps).
WpcsInstance skewed_pair_wpcs(const Rational& eps);

/// By name: "fig1", "fig2", "k_disjoint" (uses k), "diamond", "tamper".
PssufInstance fixture_instance(const std::string& name, int k = 3);

}  // namespace ssuf
