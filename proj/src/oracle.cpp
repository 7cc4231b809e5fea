#include "wrt/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <thread>

namespace wrt {
namespace {

enum : std::uint8_t { kFree = 0, kInA = 1, kInB = 2 };

// Orders an assignment canonically and compares it against the incumbent.
struct Candidate {
  std::vector<VertexId> a;
  std::vector<VertexId> b;
};

Candidate canonical(std::vector<VertexId> a, std::vector<VertexId> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (!b.empty() && (a.empty() || b.front() < a.front())) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

bool lex_less(const Candidate& l, const Candidate& r) {
  if (l.a != r.a) return l.a < r.a;
  return l.b < r.b;
}

template <typename Scalar>
struct Best {
  bool found = false;
  Scalar value{};
  Candidate pair;

  void offer(const Scalar& v, Candidate c) {
    if (!found || v > value || (v == value && lex_less(c, pair))) {
      found = true;
      value = v;
      pair = std::move(c);
    }
  }
  void merge(Best other) {
    if (other.found) offer(other.value, std::move(other.pair));
  }
};

// Three-way assignment search over vertices in preorder. A vertex may join a
// set only when no ancestor already sits in the other set; descendants are
// checked when their turn comes, so every explored assignment is unrelated.
template <typename Scalar>
class PairSearch {
 public:
  PairSearch(std::vector<VertexId> ids, std::vector<int> parent_pos, std::vector<Scalar> weights)
      : ids_(std::move(ids)),
        parent_pos_(std::move(parent_pos)),
        weight_(std::move(weights)),
        rest_(weight_.size() + 1),
        side_(weight_.size(), kFree),
        under_a_(weight_.size(), 0),
        under_b_(weight_.size(), 0) {
    for (std::size_t k = weight_.size(); k-- > 0;) rest_[k] = rest_[k + 1] + weight_[k];
  }

  std::size_t size() const { return weight_.size(); }

  Best<Scalar> run() {
    best_ = {};
    recurse(0, Scalar{}, Scalar{}, false);
    return std::move(best_);
  }

  struct Prefix {
    std::vector<std::uint8_t> sides;
    Scalar wa{};
    Scalar wb{};
    bool any = false;
  };

  // All valid assignments of the first `depth` preorder positions.
  std::vector<Prefix> prefixes(std::size_t depth) {
    std::vector<Prefix> out;
    collect(0, depth, Scalar{}, Scalar{}, false, out);
    return out;
  }

  Best<Scalar> run_from(const Prefix& prefix) {
    best_ = {};
    const std::size_t depth = prefix.sides.size();
    for (std::size_t k = 0; k < depth; ++k) {
      mark_under(k);
      side_[k] = prefix.sides[k];
    }
    recurse(depth, prefix.wa, prefix.wb, prefix.any);
    return std::move(best_);
  }

 private:
  void mark_under(std::size_t k) {
    const int p = parent_pos_[k];
    under_a_[k] = p >= 0 && (under_a_[p] || side_[p] == kInA);
    under_b_[k] = p >= 0 && (under_b_[p] || side_[p] == kInB);
  }

  void recurse(std::size_t k, const Scalar& wa, const Scalar& wb, bool any) {
    const Scalar& low = std::min(wa, wb);
    if (k == size()) {
      if (!best_.found || low >= best_.value) offer(low);
      return;
    }
    if (best_.found && low + rest_[k] < best_.value) return;
    mark_under(k);
    side_[k] = kFree;
    recurse(k + 1, wa, wb, any);
    if (!under_b_[k]) {
      side_[k] = kInA;
      recurse(k + 1, wa + weight_[k], wb, true);
    }
    // The first assigned vertex always goes to A; this drops mirrored pairs.
    if (!under_a_[k] && any) {
      side_[k] = kInB;
      recurse(k + 1, wa, wb + weight_[k], true);
    }
    side_[k] = kFree;
  }

  void collect(std::size_t k, std::size_t depth, const Scalar& wa, const Scalar& wb, bool any,
               std::vector<Prefix>& out) {
    if (k == depth) {
      out.push_back({std::vector<std::uint8_t>(side_.begin(), side_.begin() + depth), wa, wb, any});
      return;
    }
    mark_under(k);
    side_[k] = kFree;
    collect(k + 1, depth, wa, wb, any, out);
    if (!under_b_[k]) {
      side_[k] = kInA;
      collect(k + 1, depth, wa + weight_[k], wb, true, out);
    }
    if (!under_a_[k] && any) {
      side_[k] = kInB;
      collect(k + 1, depth, wa, wb + weight_[k], true, out);
    }
    side_[k] = kFree;
  }

  void offer(const Scalar& value) {
    std::vector<VertexId> a;
    std::vector<VertexId> b;
    for (std::size_t k = 0; k < size(); ++k) {
      if (side_[k] == kInA) a.push_back(ids_[k]);
      if (side_[k] == kInB) b.push_back(ids_[k]);
    }
    best_.offer(value, canonical(std::move(a), std::move(b)));
  }

  std::vector<VertexId> ids_;
  std::vector<int> parent_pos_;
  std::vector<Scalar> weight_;
  std::vector<Scalar> rest_;
  std::vector<std::uint8_t> side_;
  std::vector<std::uint8_t> under_a_;
  std::vector<std::uint8_t> under_b_;
  Best<Scalar> best_;
};

void preorder(const RootedTree& tree, VertexId v, std::vector<VertexId>& out) {
  out.push_back(v);
  for (VertexId c : tree.children(v)) preorder(tree, c, out);
}

template <typename Scalar>
Best<Scalar> search(PairSearch<Scalar> search, unsigned jobs) {
  if (jobs <= 1 || search.size() < 2) return search.run();

  const std::size_t depth = std::min<std::size_t>(search.size(), 8);
  const auto tasks = search.prefixes(depth);
  std::vector<Best<Scalar>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&, search]() mutable {
    for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = search.run_from(tasks[i]);
  };
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  Best<Scalar> merged;
  for (auto& r : results) merged.merge(std::move(r));
  return merged;
}

}  // namespace

TooLarge::TooLarge(std::size_t n, std::size_t max_n)
    : std::runtime_error("tree has " + std::to_string(n) + " vertices, oracle limit is " + std::to_string(max_n)) {}

Rational oracle_best_path(const RootedTree& tree) {
  Rational best;
  for (std::size_t v = 0; v < tree.size(); ++v) {
    Rational sum;
    for (VertexId u = static_cast<VertexId>(v); u != kNoVertex; u = tree.parent(u)) sum += tree.weight(u);
    if (sum > best) best = sum;
  }
  return best;
}

OracleResult oracle_best_pair(const RootedTree& tree, const OracleOptions& options) {
  const std::size_t n = tree.size();
  if (n > options.max_n) throw TooLarge(n, options.max_n);

  std::vector<VertexId> order;
  order.reserve(n);
  preorder(tree, tree.root(), order);
  std::vector<int> pos_of(n);
  for (std::size_t k = 0; k < n; ++k) pos_of[order[k]] = static_cast<int>(k);
  std::vector<int> parent_pos(n);
  for (std::size_t k = 0; k < n; ++k) {
    const VertexId p = tree.parent(order[k]);
    parent_pos[k] = p == kNoVertex ? -1 : pos_of[p];
  }

  // Integer weights over a common denominator when they fit in 62 bits.
  mpz_class common = 1;
  for (const Rational& w : tree.weights()) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), w.to_mpq().get_den_mpz_t());
  std::vector<mpz_class> scaled(n);
  mpz_class scaled_total = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const mpq_class w = tree.weight(order[k]).to_mpq();
    scaled[k] = w.get_num() * (common / w.get_den());
    scaled_total += scaled[k];
  }

  OracleResult result;
  result.best_path_weight = oracle_best_path(tree);
  if (scaled_total < (mpz_class(1) << 62)) {
    std::vector<std::int64_t> weights(n);
    for (std::size_t k = 0; k < n; ++k) weights[k] = scaled[k].get_si();
    auto best = search(PairSearch<std::int64_t>(order, parent_pos, std::move(weights)), options.jobs);
    result.best_pair_value = Rational(mpq_class(mpz_class(static_cast<long>(best.value)), common));
    result.a = std::move(best.pair.a);
    result.b = std::move(best.pair.b);
  } else {
    std::vector<Rational> weights(n);
    for (std::size_t k = 0; k < n; ++k) weights[k] = tree.weight(order[k]);
    auto best = search(PairSearch<Rational>(order, parent_pos, std::move(weights)), options.jobs);
    result.best_pair_value = std::move(best.value);
    result.a = std::move(best.pair.a);
    result.b = std::move(best.pair.b);
  }
  return result;
}

bool theorem_check(const RootedTree& tree, const OracleOptions& options) {
  const OracleResult r = oracle_best_pair(tree, options);
  const Rational& best = std::max(r.best_path_weight, r.best_pair_value);
  return best * Rational(3) >= tree.total_weight();
}

}  // namespace wrt
