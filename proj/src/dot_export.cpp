#include "ssuf/dot_export.hpp"

#include <array>
#include <map>
#include <sstream>

namespace ssuf {

namespace {

constexpr std::array<const char*, 10> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                                  "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};

std::string order_label(const std::vector<ArcId>& order) {
  std::string out = "(";
  for (std::size_t i = 0; i < order.size(); ++i) out += (i ? " " : "") + std::to_string(order[i]);
  return out + ")";
}

}  // namespace

std::string instance_to_dot(const PssufInstance& inst) {
  std::ostringstream out;
  out << "digraph pssuf {\n  node [shape=ellipse];\n";
  for (VertexId v = 0; v < inst.graph.vertex_count; ++v) {
    out << "  " << v << " [label=\"" << v;
    if (v == inst.source) out << " s";
    if (const int t = inst.terminal_index(v); t >= 0) out << " t d=" << inst.terminals[t].d;
    if (static_cast<std::size_t>(v) < inst.rotation.size()) out << "\\n" << order_label(inst.rotation[v]);
    out << "\"" << (v == inst.source ? ", shape=doublecircle" : "") << "];\n";
  }
  for (ArcId a = 0; a < inst.graph.arc_count(); ++a) {
    out << "  " << inst.graph.arcs[a].tail << " -> " << inst.graph.arcs[a].head << " [label=\"" << a;
    if (static_cast<std::size_t>(a) < inst.flow.size()) out << ": " << inst.flow[a];
    out << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string decomposition_to_dot(const ArcSplitDecomposition& dec, VertexId source) {
  std::map<VertexId, std::size_t> color_of;
  for (VertexId t : dec.terminal_of) color_of.emplace(t, color_of.size());
  std::ostringstream out;
  out << "digraph split {\n";
  for (VertexId v = 0; v < dec.split_graph.vertex_count; ++v) {
    out << "  " << v << " [label=\"" << v << (v == source ? " s" : "") << "\\n"
        << order_label(dec.split_rotation[v]) << "\"];\n";
  }
  for (int i = 0; i < dec.path_count(); ++i) {
    const char* color = kPalette[color_of[dec.terminal_of[i]] % kPalette.size()];
    for (ArcId f : dec.paths[i]) {
      out << "  " << dec.split_graph.arcs[f].tail << " -> " << dec.split_graph.arcs[f].head << " [color=\"" << color
          << "\", label=\"P" << i << " " << f << "/" << dec.phi[f] << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace ssuf
