// Graphviz DOT rendering of a weighted rooted tree.

#ifndef WRT_DOT_HPP_
#define WRT_DOT_HPP_

#include <string>

#include "wrt/partition.hpp"
#include "wrt/rooted_tree.hpp"

namespace wrt {

// Without a partition every vertex is drawn white. With one, vertices are
// filled red/blue/green/white by colour, A members are boxes, B members
// diamonds, and the set name is appended to the label.
std::string to_dot(const RootedTree& tree, const PartitionResult* partition = nullptr);

}  // namespace wrt

#endif  // WRT_DOT_HPP_
