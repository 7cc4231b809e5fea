#include "wrt/generators.hpp"

#include <limits>
#include <string>

namespace wrt {

Rational max_tight_eps(int m) {
  if (m < 1) throw InvalidParams("m must be positive");
  return Rational(1, 3 * static_cast<std::int64_t>(m) * (m + 1));
}

RootedTree gen_tight_family(const TightFamilyParams& params) {
  const int m = params.m;
  if (m < 2) throw InvalidParams("tight family needs m >= 2, got " + std::to_string(m));
  if (m > 10'000'000) throw InvalidParams("m too large: " + std::to_string(m));
  if (params.eps.is_negative() || params.eps.is_zero()) {
    throw InvalidParams("eps must be positive, got " + params.eps.to_string());
  }
  if (params.eps > max_tight_eps(m)) {
    throw InvalidParams("eps " + params.eps.to_string() + " exceeds 1/(3m(m+1)) = " + max_tight_eps(m).to_string());
  }
  const std::size_t n = 3 * static_cast<std::size_t>(m + 1);
  std::vector<VertexId> parents(n);
  std::vector<Rational> weights(n);
  const Rational leaf(1, 3 * static_cast<std::int64_t>(m + 1));
  for (int i = 0; i <= m; ++i) {
    parents[i] = i == 0 ? kNoVertex : i - 1;
    weights[i] = i == 0 ? Rational(1, 3) - Rational(m) * params.eps : params.eps;
    const auto a = static_cast<std::size_t>(m + 1 + 2 * i);
    parents[a] = i;
    parents[a + 1] = i;
    weights[a] = leaf;
    weights[a + 1] = leaf;
  }
  return RootedTree::from_parents(std::move(parents), std::move(weights));
}

std::vector<VertexId> tight_family_a_leaves(int m) {
  std::vector<VertexId> out;
  for (int i = 0; i <= m; ++i) out.push_back(m + 1 + 2 * i);
  return out;
}

std::vector<VertexId> tight_family_b_leaves(int m) {
  std::vector<VertexId> out;
  for (int i = 0; i <= m; ++i) out.push_back(m + 2 + 2 * i);
  return out;
}

SeededRng::SeededRng(std::uint64_t seed) : engine_(seed) {}

std::uint64_t SeededRng::below(std::uint64_t bound) {
  // Reject the low 2^64 mod bound draws so every residue is equally likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  std::uint64_t r = engine_();
  while (r < threshold) r = engine_();
  return r % bound;
}

namespace {

void check_max_weight(std::uint64_t max_weight) {
  if (max_weight > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max() - 1)) {
    throw InvalidParams("max weight too large: " + std::to_string(max_weight));
  }
}

}  // namespace

RootedTree gen_random_tree(std::size_t n, std::uint64_t seed, std::uint64_t max_weight) {
  if (n == 0) throw InvalidParams("random tree needs n >= 1");
  if (n > static_cast<std::size_t>(std::numeric_limits<VertexId>::max())) throw InvalidParams("n too large");
  check_max_weight(max_weight);
  SeededRng rng(seed);
  std::vector<VertexId> parents(n);
  std::vector<Rational> weights(n);
  for (std::size_t i = 0; i < n; ++i) {
    parents[i] = i == 0 ? kNoVertex : static_cast<VertexId>(rng.below(i));
    weights[i] = Rational(static_cast<std::int64_t>(rng.below(max_weight + 1)));
  }
  return RootedTree::from_parents(std::move(parents), std::move(weights));
}

RootedTree reweight(const RootedTree& tree, std::uint64_t seed, std::uint64_t max_weight) {
  check_max_weight(max_weight);
  SeededRng rng(seed);
  std::vector<Rational> weights(tree.size());
  for (auto& w : weights) w = Rational(static_cast<std::int64_t>(rng.below(max_weight + 1)));
  return RootedTree::from_parents({tree.parents().begin(), tree.parents().end()}, std::move(weights));
}

ParentArrayStream::ParentArrayStream(std::size_t n) : parents_(n, 0) {
  if (n < 1 || n > 9) throw InvalidParams("parent-array enumeration needs 1 <= n <= 9, got " + std::to_string(n));
  parents_[0] = kNoVertex;
}

std::optional<RootedTree> ParentArrayStream::next() {
  if (done_) return std::nullopt;
  RootedTree tree = RootedTree::from_parents(parents_, std::vector<Rational>(parents_.size(), Rational(1)));
  // Odometer step: parent(i) ranges over 0..i-1, last position fastest.
  std::size_t i = parents_.size();
  while (i-- > 1) {
    if (++parents_[i] < static_cast<VertexId>(i)) break;
    parents_[i] = 0;
  }
  if (i == 0 || parents_.size() == 1) done_ = true;
  return tree;
}

std::size_t ParentArrayStream::size() const {
  std::size_t count = 1;
  for (std::size_t i = 2; i < parents_.size(); ++i) count *= i;
  return count;
}

}  // namespace wrt
