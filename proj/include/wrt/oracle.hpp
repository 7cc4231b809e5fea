// Exhaustive ground truth for small trees. Nothing here shares code with the
// solver beyond the tree type itself.

#ifndef WRT_ORACLE_HPP_
#define WRT_ORACLE_HPP_

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "wrt/rational.hpp"
#include "wrt/rooted_tree.hpp"

namespace wrt {

class TooLarge : public std::runtime_error {
 public:
  TooLarge(std::size_t n, std::size_t max_n);
};

struct OracleOptions {
  std::size_t max_n = 15;
  // Worker threads for the pair search; 1 runs the plain recursion.
  unsigned jobs = 1;
};

struct OracleResult {
  Rational best_path_weight;
  // max over unrelated (A, B) of min(w(A), w(B)); empty sets allowed.
  Rational best_pair_value;
  // Canonical optimum: the smallest assigned id sits in A, then (A, B) is
  // lexicographically smallest as sorted id lists.
  std::vector<VertexId> a;
  std::vector<VertexId> b;
};

// Max root-path weight by walking parent links from every vertex.
Rational oracle_best_path(const RootedTree& tree);

// Throws TooLarge when the tree has more than options.max_n vertices.
OracleResult oracle_best_pair(const RootedTree& tree, const OracleOptions& options = {});

// 3 * max(best path, best pair) >= W.
bool theorem_check(const RootedTree& tree, const OracleOptions& options = {});

}  // namespace wrt

#endif  // WRT_ORACLE_HPP_
