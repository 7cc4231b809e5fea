// Tree generators: the tight caterpillar family, seeded random trees and an
// exhaustive stream of small shapes.

#ifndef WRT_GENERATORS_HPP_
#define WRT_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "wrt/rational.hpp"
#include "wrt/rooted_tree.hpp"

namespace wrt {

class InvalidParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct TightFamilyParams {
  int m = 2;
  Rational eps = Rational(1, 20);
};

// Largest admissible eps for a given m: 1 / (3 m (m + 1)).
Rational max_tight_eps(int m);

// Caterpillar with spine s_0..s_m (ids 0..m, s_0 the root). s_0 weighs
// 1/3 - m*eps, every other spine vertex eps. Each s_i carries two leaves
// a_i = m+1+2i and b_i = m+2+2i of weight 1/(3(m+1)). Total weight is 1,
// root-to-leaf paths weigh between 1/3 and 1/3 + 1/(3(m+1)), and the best
// unrelated pair is worth exactly 1/3.
RootedTree gen_tight_family(const TightFamilyParams& params);

std::vector<VertexId> tight_family_a_leaves(int m);
std::vector<VertexId> tight_family_b_leaves(int m);

// Deterministic 64-bit stream: std::mt19937_64 seeded with `seed`, bounded
// draws by rejection sampling so sequences match on every platform.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed);
  // Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

// Uniform attachment: vertex i > 0 picks its parent uniformly from 0..i-1,
// then its weight uniformly from 0..max_weight. Draw order per vertex is
// parent first, weight second.
RootedTree gen_random_tree(std::size_t n, std::uint64_t seed, std::uint64_t max_weight);

// Same shape, fresh integer weights drawn uniformly from 0..max_weight.
RootedTree reweight(const RootedTree& tree, std::uint64_t seed, std::uint64_t max_weight);

// Every parent array with parent(i) in 0..i-1, in lexicographic order, with
// unit weights. Yields (n-1)! trees. Requires 1 <= n <= 9.
class ParentArrayStream {
 public:
  explicit ParentArrayStream(std::size_t n);

  std::optional<RootedTree> next();
  std::size_t size() const;

 private:
  std::vector<VertexId> parents_;
  bool done_ = false;
};

}  // namespace wrt

#endif  // WRT_GENERATORS_HPP_
