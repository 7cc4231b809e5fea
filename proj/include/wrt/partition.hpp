// Greedy construction of two unrelated vertex sets by descending a spine of
// heaviest branches.
//
// At each spine vertex the child subtrees ("branches") are sorted by weight
// and every branch except the heaviest is handed to the lighter of the two
// sets. The spine vertex is coloured by where its side branches went. When
// the descent reaches a leaf (the last root) that leaf joins the lighter set,
// degree-2 green spine vertices directly above it take its colour, and the
// maximal same-coloured spine suffix is absorbed into the leaf's set. Whatever
// remains of the spine is a root path assigned to neither set.
//
// If no root path reaches a third of the total weight, both sets end up with
// at least a third of it.

#ifndef WRT_PARTITION_HPP_
#define WRT_PARTITION_HPP_

#include <string_view>
#include <vector>

#include "wrt/rational.hpp"
#include "wrt/rooted_tree.hpp"

namespace wrt {

enum class Color { kUncolored, kRed, kBlue, kGreen };

std::string_view to_string(Color color);

enum class Side { kNone, kA, kB };

std::string_view to_string(Side side);

// Per-vertex subtree weight and smallest vertex id, plus the preorder index
// that lets a branch name its vertex set as a contiguous slice.
struct SubtreeSummary {
  explicit SubtreeSummary(const RootedTree& tree);

  AncestorIndex index;
  std::vector<Rational> weight;
  std::vector<VertexId> min_id;
};

struct Branch {
  VertexId root;
  Rational weight;
  VertexId min_id;
};

// Child subtrees of v sorted by (weight, smallest contained id); heaviest last.
std::vector<Branch> branches_of(const RootedTree& tree, const SubtreeSummary& summary, VertexId v);
std::vector<Branch> branches_of(const RootedTree& tree, VertexId v);

enum class TraceKind {
  kBranchAssigned,   // vertex = branch root, side = receiving set
  kRootColored,      // vertex = spine vertex, color
  kDescend,          // vertex = next spine vertex
  kLastRootAssigned, // vertex = r*, side, color
  kRecolored,        // vertex, new color
  kAbsorbed,         // vertex, side
};

std::string_view to_string(TraceKind kind);

struct TraceEvent {
  TraceKind kind;
  VertexId vertex;
  Side side = Side::kNone;
  Color color = Color::kUncolored;
  // Set weights after the event.
  Rational weight_a;
  Rational weight_b;
};

struct PartitionResult {
  std::vector<VertexId> a;  // ascending
  std::vector<VertexId> b;  // ascending
  std::vector<Color> colors;
  VertexId r_star = kNoVertex;
  std::vector<VertexId> residual_path;  // root first
  std::vector<TraceEvent> trace;
  Rational weight_a;
  Rational weight_b;
};

PartitionResult build_partition(const RootedTree& tree);
PartitionResult build_partition(const RootedTree& tree, const SubtreeSummary& summary);

struct ReplayedPartition {
  std::vector<VertexId> a;
  std::vector<VertexId> b;
  std::vector<Color> colors;
};

// Rebuilds A, B and the colouring from a trace alone.
ReplayedPartition replay_trace(const RootedTree& tree, const std::vector<TraceEvent>& trace);

}  // namespace wrt

#endif  // WRT_PARTITION_HPP_
