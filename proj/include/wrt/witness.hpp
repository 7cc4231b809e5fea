// Certificates for the one-third dichotomy on weighted rooted trees: either a
// root path carrying at least a third of the total weight, or two unrelated
// vertex sets that each carry at least a third.

#ifndef WRT_WITNESS_HPP_
#define WRT_WITNESS_HPP_

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "wrt/partition.hpp"
#include "wrt/rational.hpp"
#include "wrt/rooted_tree.hpp"

namespace wrt {

struct PathWitness {
  VertexId u = kNoVertex;
  std::vector<VertexId> path;
  Rational weight;

  bool operator==(const PathWitness&) const = default;
};

struct PairWitness {
  std::vector<VertexId> a;
  std::vector<VertexId> b;
  Rational weight_a;
  Rational weight_b;

  bool operator==(const PairWitness&) const = default;
};

using Witness = std::variant<PathWitness, PairWitness>;

// The largest fraction for which a witness always exists.
inline Rational one_third() { return Rational(1, 3); }

struct BestPath {
  VertexId u = kNoVertex;
  Rational weight;
};

// Heaviest root path; ties go to the smallest endpoint id.
BestPath best_root_path(const RootedTree& tree);
BestPath best_root_path(const RootedTree& tree, const AncestorIndex& index);

// The pair branch missed its threshold although the threshold is at most 1/3.
// Either the implementation is wrong or the tree is a counterexample; the
// payload is everything needed to reproduce it.
class TheoremViolation : public std::runtime_error {
 public:
  TheoremViolation(const RootedTree& tree, PartitionResult partition, Rational threshold);

  const RootedTree& tree() const { return tree_; }
  const PartitionResult& partition() const { return partition_; }
  const Rational& threshold() const { return threshold_; }

 private:
  RootedTree tree_;
  PartitionResult partition_;
  Rational threshold_;
};

// The pair branch missed a threshold above 1/3, where no witness is promised.
class NoWitness : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Returns the best root path when 3 * weight >= W (more generally
// weight >= threshold * W), otherwise the partition pair after checking that
// both sides meet the threshold. Throws std::invalid_argument for a threshold
// outside [0, 1], TheoremViolation or NoWitness when the pair falls short.
Witness solve(const RootedTree& tree, const Rational& threshold = one_third());

enum class ViolationKind {
  kEmptyPath,
  kNotRootPath,
  kEndpointMismatch,
  kWeightMismatch,
  kBelowThreshold,
  kOverlap,
  kRelatedPair,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string message;
};

struct VerifyReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

// Lists every condition the witness breaks at fraction `threshold` of the
// total weight. Throws InvalidVertex for ids outside the tree.
VerifyReport verify(const RootedTree& tree, const Witness& witness, const Rational& threshold = one_third());

// Ids in each set are sorted ascending; duplicates are dropped.
Witness canonicalize(Witness witness);

}  // namespace wrt

#endif  // WRT_WITNESS_HPP_
