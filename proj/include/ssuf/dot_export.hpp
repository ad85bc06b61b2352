#pragma once

#include <string>

#include "ssuf/instance.hpp"
#include "ssuf/path_decomposition.hpp"

namespace ssuf {

/// Graphviz text; each vertex label carries its cyclic arc order.
std::string instance_to_dot(const PssufInstance& instance);

/// The split graph with every path colored by its terminal.
std::string decomposition_to_dot(const ArcSplitDecomposition& decomposition, VertexId source);

}  // namespace ssuf
