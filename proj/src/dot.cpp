#include "wrt/dot.hpp"

#include <algorithm>

namespace wrt {
namespace {

std::string_view fill_for(Color c) {
  switch (c) {
    case Color::kRed: return "red";
    case Color::kBlue: return "blue";
    case Color::kGreen: return "green";
    case Color::kUncolored: return "white";
  }
  return "white";
}

}  // namespace

std::string to_dot(const RootedTree& tree, const PartitionResult* partition) {
  std::vector<Side> side(tree.size(), Side::kNone);
  if (partition) {
    for (VertexId v : partition->a) side[v] = Side::kA;
    for (VertexId v : partition->b) side[v] = Side::kB;
  }
  std::string out = "digraph tree {\n  node [style=filled, fillcolor=white, shape=ellipse];\n";
  for (std::size_t i = 0; i < tree.size(); ++i) {
    const auto v = static_cast<VertexId>(i);
    std::string label = std::to_string(v) + "\\n" + tree.weight(v).to_string();
    std::string attrs;
    if (partition) {
      attrs += ", fillcolor=";
      attrs += fill_for(partition->colors[v]);
      if (side[v] == Side::kA) {
        attrs += ", shape=box";
        label += "\\nA";
      } else if (side[v] == Side::kB) {
        attrs += ", shape=diamond";
        label += "\\nB";
      }
    }
    out += "  " + std::to_string(v) + " [label=\"" + label + "\"" + attrs + "];\n";
  }
  for (std::size_t i = 0; i < tree.size(); ++i) {
    const auto v = static_cast<VertexId>(i);
    for (VertexId c : tree.children(v)) out += "  " + std::to_string(v) + " -> " + std::to_string(c) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace wrt
