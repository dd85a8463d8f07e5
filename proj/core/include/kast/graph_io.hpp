#pragma once

#include <iosfwd>
#include <string>

#include "kast/graph.hpp"

namespace kast {

// JSON document with `vertices`, `edges`, `faces`, `surface` and
// `infinite_face`. Faces list edge ids with forward flags.
std::string graph_to_json(const EmbeddedGraph& g, int indent = 2);
EmbeddedGraph graph_from_json(const std::string& text);
EmbeddedGraph read_graph_file(const std::string& path);

}  // namespace kast
