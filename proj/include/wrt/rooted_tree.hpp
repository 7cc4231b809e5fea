// Vertex-weighted rooted trees, the line-oriented tree file format, and
// ancestor/relatedness queries.

#ifndef WRT_ROOTED_TREE_HPP_
#define WRT_ROOTED_TREE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wrt/rational.hpp"

namespace wrt {

using VertexId = std::int32_t;
inline constexpr VertexId kNoVertex = -1;

enum class TreeErrorKind {
  kDuplicateVertex,
  kMultipleRoots,
  kNoRoot,
  kCycle,
  kNegativeWeight,
  kMalformedLine,
};

std::string_view to_string(TreeErrorKind kind);

// Raised for invalid tree input. line() is 1-based and refers to the input
// text; it is 0 for trees built directly from arrays.
class TreeError : public std::runtime_error {
 public:
  TreeError(TreeErrorKind kind, std::size_t line, const std::string& detail);

  TreeErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  TreeErrorKind kind_;
  std::size_t line_;
};

class InvalidVertex : public std::out_of_range {
 public:
  explicit InvalidVertex(VertexId v);
  VertexId vertex() const { return vertex_; }

 private:
  VertexId vertex_;
};

// Immutable rooted tree on vertices 0..n-1. Children are kept in ascending
// id order, which every traversal in the library relies on for determinism.
class RootedTree {
 public:
  // parents[v] is kNoVertex for the root. Validates everything the file
  // parser validates except line numbers. Throws TreeError.
  static RootedTree from_parents(std::vector<VertexId> parents, std::vector<Rational> weights);

  std::size_t size() const { return parent_.size(); }
  VertexId root() const { return root_; }
  VertexId parent(VertexId v) const { return parent_[check(v)]; }
  std::span<const VertexId> children(VertexId v) const {
    check(v);
    return {child_list_.data() + child_offset_[v], child_list_.data() + child_offset_[v + 1]};
  }
  const Rational& weight(VertexId v) const { return weight_[check(v)]; }
  const Rational& total_weight() const { return total_weight_; }
  // Number of incident tree edges, parent edge included.
  std::size_t degree(VertexId v) const {
    return children(v).size() + (parent_[v] == kNoVertex ? 0 : 1);
  }
  bool contains(VertexId v) const { return v >= 0 && static_cast<std::size_t>(v) < size(); }

  std::span<const VertexId> parents() const { return parent_; }
  std::span<const Rational> weights() const { return weight_; }

  bool operator==(const RootedTree& other) const {
    return parent_ == other.parent_ && weight_ == other.weight_;
  }

 private:
  friend RootedTree parse_tree(std::string_view text);

  RootedTree() = default;
  // `lines[v]` is the input line of vertex v, or empty for array input.
  static RootedTree build(std::vector<VertexId> parents, std::vector<Rational> weights,
                          const std::vector<std::size_t>& lines, std::size_t header_line);
  std::size_t check(VertexId v) const {
    if (!contains(v)) throw InvalidVertex(v);
    return static_cast<std::size_t>(v);
  }

  VertexId root_ = kNoVertex;
  std::vector<VertexId> parent_;
  std::vector<std::size_t> child_offset_;
  std::vector<VertexId> child_list_;
  std::vector<Rational> weight_;
  Rational total_weight_;
};

// Parses the tree file format:
//   # optional comment lines
//   n
//   id parent weight      (n lines, parent '-' for the root, weight "p" or "p/q")
RootedTree parse_tree(std::string_view text);

// Inverse of parse_tree: header line, then one line per vertex in id order.
std::string to_text(const RootedTree& tree);

inline const Rational& total_weight(const RootedTree& tree) { return tree.total_weight(); }

// Preorder entry/exit stamps from one depth-first traversal (children in
// ascending id order). exit(v) is the entry stamp of the last vertex in the
// subtree of v, so the subtree occupies preorder()[entry(v) .. exit(v)].
class AncestorIndex {
 public:
  explicit AncestorIndex(const RootedTree& tree);

  std::size_t entry(VertexId v) const { return entry_[v]; }
  std::size_t exit(VertexId v) const { return exit_[v]; }
  std::size_t subtree_size(VertexId v) const { return exit_[v] - entry_[v] + 1; }
  std::span<const VertexId> preorder() const { return order_; }
  std::span<const VertexId> subtree(VertexId v) const {
    return std::span<const VertexId>(order_).subspan(entry_[v], subtree_size(v));
  }

  // Ancestor-or-self; no bounds checking.
  bool is_ancestor_or_self(VertexId x, VertexId y) const {
    return entry_[x] <= entry_[y] && exit_[y] <= exit_[x];
  }

 private:
  std::vector<VertexId> order_;
  std::vector<std::size_t> entry_;
  std::vector<std::size_t> exit_;
};

// Every vertex is a descendant of itself, so is_related(x, x) holds.
bool is_related(const RootedTree& tree, const AncestorIndex& index, VertexId x, VertexId y);

// Returns some pair (a, b), a in `a_set`, b in `b_set`, that is related, or
// nullopt when the sets are unrelated. Runs in O(k log k) for k = |A| + |B|.
std::optional<std::pair<VertexId, VertexId>> find_related_pair(const RootedTree& tree,
                                                               const AncestorIndex& index,
                                                               std::span<const VertexId> a_set,
                                                               std::span<const VertexId> b_set);

bool are_unrelated_sets(const RootedTree& tree, const AncestorIndex& index,
                        std::span<const VertexId> a_set, std::span<const VertexId> b_set);

// Vertices from the root down to u.
std::vector<VertexId> root_path(const RootedTree& tree, VertexId u);

Rational weight_of(const RootedTree& tree, std::span<const VertexId> vertices);

}  // namespace wrt

#endif  // WRT_ROOTED_TREE_HPP_
