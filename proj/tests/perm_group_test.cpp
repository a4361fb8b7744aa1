#include <gtest/gtest.h>

#include <random>
#include <set>
#include <vector>

#include "ddf/perm_group.hpp"

using namespace ddf;

namespace {

std::set<Permutation> closure(const std::vector<Permutation>& gens, std::size_t n) {
  std::set<Permutation> seen{identity_permutation(n)};
  std::vector<Permutation> todo{identity_permutation(n)};
  while (!todo.empty()) {
    const Permutation x = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      Permutation y = compose(g, x);
      if (seen.insert(y).second) todo.push_back(std::move(y));
    }
  }
  return seen;
}

Permutation cycle(std::size_t n, std::initializer_list<Index> pts) {
  Permutation p = identity_permutation(n);
  std::vector<Index> c(pts);
  for (std::size_t i = 0; i < c.size(); ++i) p[c[i]] = c[(i + 1) % c.size()];
  return p;
}

}  // namespace

TEST(Permutation, Helpers) {
  const Permutation a{1, 2, 0};
  const Permutation b{0, 2, 1};
  EXPECT_EQ(compose(a, b), (Permutation{1, 0, 2}));
  EXPECT_EQ(compose(a, inverse(a)), identity_permutation(3));
  EXPECT_TRUE(is_permutation(a, 3));
  EXPECT_FALSE(is_permutation({0, 0, 1}, 3));
  EXPECT_FALSE(is_permutation({0, 1}, 3));
  EXPECT_FALSE(is_permutation({0, 1, 3}, 3));
  EXPECT_TRUE(is_identity(identity_permutation(5)));
  EXPECT_FALSE(is_identity(a));
}

TEST(SchreierSims, KnownGroups) {
  EXPECT_EQ(permutation_group_order({}, 5), 1u);
  // symmetric groups from a transposition and an n-cycle
  std::uint64_t fact = 1;
  for (std::size_t n = 2; n <= 10; ++n) {
    fact *= n;
    Permutation c(n);
    for (Index i = 0; i < n; ++i) c[i] = static_cast<Index>((i + 1) % n);
    EXPECT_EQ(permutation_group_order({cycle(n, {0, 1}), c}, n), fact) << n;
  }
  // dihedral of order 2n
  for (std::size_t n = 3; n <= 12; ++n) {
    Permutation rot(n), ref(n);
    for (Index i = 0; i < n; ++i) {
      rot[i] = static_cast<Index>((i + 1) % n);
      ref[i] = static_cast<Index>((n - i) % n);
    }
    EXPECT_EQ(permutation_group_order({rot, ref}, n), 2 * n);
  }
  // alternating group A_6 from 3-cycles
  EXPECT_EQ(permutation_group_order({cycle(6, {0, 1, 2}), cycle(6, {1, 2, 3}), cycle(6, {2, 3, 4}), cycle(6, {3, 4, 5})}, 6),
            360u);
  // Mathieu M11 on 11 points
  EXPECT_EQ(permutation_group_order({Permutation{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 0}, Permutation{0, 1, 6, 9, 5, 3, 10, 2, 8, 4, 7}}, 11),
            7920u);
}

TEST(SchreierSims, RandomAgainstClosure) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 6;
    const std::size_t k = 1 + rng() % 3;
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i < k; ++i) {
      Permutation p = identity_permutation(n);
      // sparse generators keep many groups small and non-trivial
      const int swaps = 1 + static_cast<int>(rng() % 3);
      for (int s = 0; s < swaps; ++s) std::swap(p[rng() % n], p[rng() % n]);
      gens.push_back(p);
    }
    const auto elems = closure(gens, n);
    SimsTable t(n);
    for (const auto& g : gens) t.add_generator(g);
    ASSERT_EQ(t.order(), elems.size());
    // membership agrees with the closure on every permutation of small degree
    if (n <= 5) {
      Permutation p = identity_permutation(n);
      do {
        ASSERT_EQ(t.contains(p), elems.count(p) != 0);
      } while (std::next_permutation(p.begin(), p.end()));
    }
  }
}

TEST(SchreierSims, AddGeneratorReportsGrowth) {
  SimsTable t(4);
  EXPECT_FALSE(t.add_generator(identity_permutation(4)));
  EXPECT_TRUE(t.add_generator(cycle(4, {0, 1, 2, 3})));
  EXPECT_FALSE(t.add_generator(compose(cycle(4, {0, 1, 2, 3}), cycle(4, {0, 1, 2, 3}))));
  const auto v = t.version();
  EXPECT_TRUE(t.add_generator(cycle(4, {0, 1})));
  EXPECT_GT(t.version(), v);
  EXPECT_EQ(t.order(), 24u);
}

TEST(SchreierSims, TransversalShape) {
  SimsTable t(5);
  t.add_generator(cycle(5, {0, 1, 2, 3, 4}));
  t.add_generator(cycle(5, {0, 1}));
  for (std::size_t k = 0; k < 5; ++k) {
    const auto& level = t.transversal(k);
    ASSERT_EQ(level.size(), k + 1);
    for (std::size_t j = 0; j <= k; ++j) {
      if (level[j].empty()) continue;
      EXPECT_EQ(level[j][k], j);
      for (std::size_t above = k + 1; above < 5; ++above) EXPECT_EQ(level[j][above], above);
    }
  }
}

TEST(SchreierSims, OrderOverflow) {
  // S_21 has order above 2^64
  Permutation c(21);
  for (Index i = 0; i < 21; ++i) c[i] = (i + 1) % 21;
  try {
    permutation_group_order({cycle(21, {0, 1}), c}, 21);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeExceeded);
  }
}
