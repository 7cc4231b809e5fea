#include "wrt/witness.hpp"

#include <algorithm>
#include <iterator>

namespace wrt {
namespace {

std::vector<VertexId> sorted_unique(std::vector<VertexId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

void check_ids(const RootedTree& tree, const std::vector<VertexId>& ids) {
  for (VertexId v : ids) {
    if (!tree.contains(v)) throw InvalidVertex(v);
  }
}

std::string join(const std::vector<VertexId>& ids, std::size_t limit = 10) {
  std::string out;
  for (std::size_t i = 0; i < ids.size() && i < limit; ++i) {
    if (i) out += ",";
    out += std::to_string(ids[i]);
  }
  if (ids.size() > limit) out += ",...";
  return out;
}

std::string what_for(const RootedTree& tree, const PartitionResult& partition, const Rational& threshold) {
  return "pair witness below " + threshold.to_string() + " of total " + tree.total_weight().to_string() +
         ": w(A)=" + partition.weight_a.to_string() + " w(B)=" + partition.weight_b.to_string();
}

}  // namespace

BestPath best_root_path(const RootedTree& tree) { return best_root_path(tree, AncestorIndex(tree)); }

BestPath best_root_path(const RootedTree& tree, const AncestorIndex& index) {
  std::vector<Rational> prefix(tree.size());
  for (VertexId v : index.preorder()) {
    const VertexId p = tree.parent(v);
    prefix[v] = p == kNoVertex ? tree.weight(v) : prefix[p] + tree.weight(v);
  }
  BestPath best{0, prefix[0]};
  for (std::size_t v = 1; v < prefix.size(); ++v) {
    if (prefix[v] > best.weight) best = {static_cast<VertexId>(v), prefix[v]};
  }
  return best;
}

TheoremViolation::TheoremViolation(const RootedTree& tree, PartitionResult partition, Rational threshold)
    : std::runtime_error(what_for(tree, partition, threshold)),
      tree_(tree),
      partition_(std::move(partition)),
      threshold_(std::move(threshold)) {}

Witness solve(const RootedTree& tree, const Rational& threshold) {
  if (threshold.is_negative() || threshold > Rational(1)) {
    throw std::invalid_argument("threshold " + threshold.to_string() + " outside [0, 1]");
  }
  const Rational& total = tree.total_weight();
  if (total.is_zero()) return PathWitness{tree.root(), {tree.root()}, Rational()};

  const SubtreeSummary summary(tree);
  const Rational needed = threshold * total;
  BestPath best = best_root_path(tree, summary.index);
  if (best.weight >= needed) return PathWitness{best.u, root_path(tree, best.u), std::move(best.weight)};

  PartitionResult partition = build_partition(tree, summary);
  if (partition.weight_a < needed || partition.weight_b < needed) {
    if (threshold <= one_third()) throw TheoremViolation(tree, std::move(partition), threshold);
    throw NoWitness(what_for(tree, partition, threshold));
  }
  return PairWitness{std::move(partition.a), std::move(partition.b), std::move(partition.weight_a),
                     std::move(partition.weight_b)};
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kEmptyPath: return "empty path";
    case ViolationKind::kNotRootPath: return "not a root path";
    case ViolationKind::kEndpointMismatch: return "endpoint mismatch";
    case ViolationKind::kWeightMismatch: return "weight mismatch";
    case ViolationKind::kBelowThreshold: return "below threshold";
    case ViolationKind::kOverlap: return "overlapping sets";
    case ViolationKind::kRelatedPair: return "related pair";
  }
  return "unknown";
}

std::string VerifyReport::to_string() const {
  std::string out;
  for (const Violation& v : violations) {
    out += wrt::to_string(v.kind);
    out += ": ";
    out += v.message;
    out += '\n';
  }
  return out;
}

VerifyReport verify(const RootedTree& tree, const Witness& witness, const Rational& threshold) {
  VerifyReport report;
  auto add = [&](ViolationKind kind, std::string message) { report.violations.push_back({kind, std::move(message)}); };
  const Rational needed = threshold * tree.total_weight();

  if (const auto* path = std::get_if<PathWitness>(&witness)) {
    if (!tree.contains(path->u)) throw InvalidVertex(path->u);
    check_ids(tree, path->path);
    if (path->path.empty()) {
      add(ViolationKind::kEmptyPath, "path has no vertices");
    } else {
      if (path->path.front() != tree.root()) {
        add(ViolationKind::kNotRootPath,
            "path starts at " + std::to_string(path->path.front()) + ", root is " + std::to_string(tree.root()));
      }
      for (std::size_t i = 1; i < path->path.size(); ++i) {
        if (tree.parent(path->path[i]) != path->path[i - 1]) {
          add(ViolationKind::kNotRootPath, std::to_string(path->path[i - 1]) + " is not the parent of " +
                                               std::to_string(path->path[i]));
          break;
        }
      }
      if (path->path.back() != path->u) {
        add(ViolationKind::kEndpointMismatch,
            "path ends at " + std::to_string(path->path.back()) + ", endpoint is " + std::to_string(path->u));
      }
    }
    const Rational actual = weight_of(tree, path->path);
    if (actual != path->weight) {
      add(ViolationKind::kWeightMismatch, "claimed " + path->weight.to_string() + ", actual " + actual.to_string());
    }
    if (actual < needed) {
      add(ViolationKind::kBelowThreshold, "path weight " + actual.to_string() + " < " + threshold.to_string() +
                                              " * " + tree.total_weight().to_string());
    }
    return report;
  }

  const auto& pair = std::get<PairWitness>(witness);
  check_ids(tree, pair.a);
  check_ids(tree, pair.b);
  const std::vector<VertexId> a = sorted_unique(pair.a);
  const std::vector<VertexId> b = sorted_unique(pair.b);
  const Rational actual_a = weight_of(tree, a);
  const Rational actual_b = weight_of(tree, b);
  if (actual_a != pair.weight_a) {
    add(ViolationKind::kWeightMismatch, "A claimed " + pair.weight_a.to_string() + ", actual " + actual_a.to_string());
  }
  if (actual_b != pair.weight_b) {
    add(ViolationKind::kWeightMismatch, "B claimed " + pair.weight_b.to_string() + ", actual " + actual_b.to_string());
  }

  std::vector<VertexId> shared;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(shared));
  if (!shared.empty()) add(ViolationKind::kOverlap, "vertices in both sets: " + join(shared));

  std::vector<VertexId> only_a;
  std::vector<VertexId> only_b;
  std::set_difference(a.begin(), a.end(), shared.begin(), shared.end(), std::back_inserter(only_a));
  std::set_difference(b.begin(), b.end(), shared.begin(), shared.end(), std::back_inserter(only_b));
  const AncestorIndex index(tree);
  if (auto related = find_related_pair(tree, index, only_a, only_b)) {
    add(ViolationKind::kRelatedPair, "(" + std::to_string(related->first) + "," + std::to_string(related->second) +
                                         ") are related");
  }

  if (actual_a < needed) {
    add(ViolationKind::kBelowThreshold, "w(A) " + actual_a.to_string() + " < " + threshold.to_string() + " * " +
                                            tree.total_weight().to_string());
  }
  if (actual_b < needed) {
    add(ViolationKind::kBelowThreshold, "w(B) " + actual_b.to_string() + " < " + threshold.to_string() + " * " +
                                            tree.total_weight().to_string());
  }
  return report;
}

Witness canonicalize(Witness witness) {
  if (auto* pair = std::get_if<PairWitness>(&witness)) {
    pair->a = sorted_unique(std::move(pair->a));
    pair->b = sorted_unique(std::move(pair->b));
  }
  return witness;
}

}  // namespace wrt
