#include "wrt/oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "test_util.hpp"
#include "wrt/generators.hpp"
#include "wrt/witness.hpp"

namespace wrt {
namespace {

using testing::naive_ancestor;
using testing::path3;
using testing::star;
using V = std::vector<VertexId>;

// Plain 3^n enumeration with pairwise relatedness checks; shares nothing with
// the pruned search.
OracleResult unpruned(const RootedTree& t) {
  const std::size_t n = t.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  OracleResult best;
  bool found = false;
  for (std::size_t code = 0; code < total; ++code) {
    V a, b;
    std::size_t c = code;
    for (std::size_t v = 0; v < n; ++v, c /= 3) {
      if (c % 3 == 1) a.push_back(static_cast<VertexId>(v));
      if (c % 3 == 2) b.push_back(static_cast<VertexId>(v));
    }
    bool ok = true;
    for (VertexId x : a) {
      for (VertexId y : b) ok = ok && !naive_ancestor(t, x, y) && !naive_ancestor(t, y, x);
    }
    if (!ok) continue;
    if (!b.empty() && (a.empty() || b.front() < a.front())) std::swap(a, b);
    const Rational value = std::min(weight_of(t, a), weight_of(t, b));
    if (!found || value > best.best_pair_value ||
        (value == best.best_pair_value && std::tie(a, b) < std::tie(best.a, best.b))) {
      found = true;
      best.best_pair_value = value;
      best.a = a;
      best.b = b;
    }
  }
  return best;
}

TEST(OracleBestPathTest, Examples) {
  EXPECT_EQ(oracle_best_path(star()), Rational(1, 4));
  EXPECT_EQ(oracle_best_path(path3()), Rational(1));
  EXPECT_EQ(oracle_best_path(gen_tight_family({2, Rational(1, 20)})), Rational(4, 9));
}

TEST(OracleBestPairTest, Star) {
  const OracleResult r = oracle_best_pair(star());
  EXPECT_EQ(r.best_pair_value, Rational(1, 2));
  EXPECT_EQ(r.a, (V{1, 2}));
  EXPECT_EQ(r.b, (V{3, 4}));
  EXPECT_EQ(r.best_path_weight, Rational(1, 4));
}

TEST(OracleBestPairTest, PathHasNoUsefulPair) {
  const OracleResult r = oracle_best_pair(path3());
  EXPECT_EQ(r.best_pair_value, Rational());
  EXPECT_TRUE(r.a.empty());
  EXPECT_TRUE(r.b.empty());
}

TEST(OracleBestPairTest, TightCaterpillar) {
  const RootedTree t = gen_tight_family({2, Rational(1, 20)});
  const OracleResult r = oracle_best_pair(t);
  EXPECT_EQ(r.best_pair_value, Rational(1, 3));
  // The a-leaves against the b-leaves reach the optimum too.
  const V a{3, 5, 7}, b{4, 6, 8};
  const AncestorIndex idx(t);
  EXPECT_TRUE(are_unrelated_sets(t, idx, a, b));
  EXPECT_EQ(std::min(weight_of(t, a), weight_of(t, b)), r.best_pair_value);
  EXPECT_TRUE(are_unrelated_sets(t, idx, r.a, r.b));
  EXPECT_EQ(std::min(weight_of(t, r.a), weight_of(t, r.b)), r.best_pair_value);
}

TEST(OracleBestPairTest, TooLarge) {
  const RootedTree t = gen_random_tree(16, 1, 5);
  EXPECT_THROW(oracle_best_pair(t), TooLarge);
  EXPECT_NO_THROW(oracle_best_pair(t, {16, 1}));
  EXPECT_THROW(theorem_check(t), TooLarge);
}

TEST(TheoremCheckTest, Examples) {
  EXPECT_TRUE(theorem_check(star()));
  EXPECT_TRUE(theorem_check(path3()));
  const RootedTree cat = gen_tight_family({2, Rational(1, 20)});
  EXPECT_TRUE(theorem_check(cat));
  const OracleResult r = oracle_best_pair(cat);
  EXPECT_EQ(std::max(r.best_path_weight, r.best_pair_value) - Rational(1, 3), Rational(1, 9));
}

TEST(OracleTest, PrunedMatchesUnpruned) {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      RootedTree t = gen_random_tree(n, seed * 31 + n, seed % 2 ? 4 : 30);
      if (seed % 5 == 0) {
        std::vector<Rational> w(t.weights().begin(), t.weights().end());
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = w[i] / Rational(static_cast<std::int64_t>(i + 2));
        t = testing::with_weights(t, w);
      }
      const OracleResult fast = oracle_best_pair(t);
      const OracleResult slow = unpruned(t);
      ASSERT_EQ(fast.best_pair_value, slow.best_pair_value) << to_text(t);
      ASSERT_EQ(fast.a, slow.a) << to_text(t);
      ASSERT_EQ(fast.b, slow.b) << to_text(t);
    }
  }
}

TEST(OracleTest, RationalFallbackMatchesIntegerPath) {
  // Denominators whose lcm overflows 62 bits force the Rational search.
  const RootedTree base = gen_random_tree(9, 5, 10);
  std::vector<Rational> w;
  const std::int64_t primes[] = {1000003, 1000033, 1000037, 1000039, 1000081, 1000099, 1000117, 1000121, 1000133};
  for (std::size_t i = 0; i < base.size(); ++i) w.push_back(base.weights()[i] / Rational(primes[i]));
  const RootedTree t = testing::with_weights(base, w);
  const OracleResult fast = oracle_best_pair(t);
  const OracleResult slow = unpruned(t);
  EXPECT_EQ(fast.best_pair_value, slow.best_pair_value);
  EXPECT_EQ(fast.a, slow.a);
  EXPECT_EQ(fast.b, slow.b);
}

TEST(OracleTest, ParallelMatchesSequential) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const RootedTree t = gen_random_tree(6 + seed % 9, seed, seed % 3 ? 3 : 100);
    const OracleResult seq = oracle_best_pair(t, {15, 1});
    const OracleResult par = oracle_best_pair(t, {15, 4});
    ASSERT_EQ(seq.best_pair_value, par.best_pair_value);
    ASSERT_EQ(seq.a, par.a);
    ASSERT_EQ(seq.b, par.b);
  }
  const RootedTree cat = gen_tight_family({4, max_tight_eps(4)});
  const OracleResult seq = oracle_best_pair(cat, {30, 1});
  const OracleResult par = oracle_best_pair(cat, {30, 3});
  EXPECT_EQ(seq.best_pair_value, par.best_pair_value);
  EXPECT_EQ(seq.a, par.a);
  EXPECT_EQ(seq.b, par.b);
}

TEST(OracleTest, BestPathAgreesWithSolver) {
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    const RootedTree t = gen_random_tree(1 + seed % 80, seed, seed % 4 ? 1000 : 2);
    ASSERT_EQ(oracle_best_path(t), best_root_path(t).weight) << "seed " << seed;
  }
}

// Solver pair never beats the optimum, and the theorem holds on every
// weighted small shape.
TEST(OracleTest, ExhaustiveShapesRespectOptimum) {
  for (std::size_t n = 1; n <= 8; ++n) {
    ParentArrayStream shapes(n);
    std::uint64_t shape_id = 0;
    while (auto shape = shapes.next()) {
      const int weightings = n == 8 ? 2 : 20;
      for (int j = 0; j < weightings; ++j) {
        const RootedTree t = reweight(*shape, shape_id * 20 + j + n * 1000000, 9);
        const OracleResult r = oracle_best_pair(t);
        ASSERT_GE(std::max(r.best_path_weight, r.best_pair_value) * Rational(3), t.total_weight());
        const Witness w = solve(t);
        if (const auto* p = std::get_if<PairWitness>(&w)) {
          ASSERT_LE(std::min(p->weight_a, p->weight_b), r.best_pair_value);
        }
      }
      ++shape_id;
    }
  }
}

}  // namespace
}  // namespace wrt
