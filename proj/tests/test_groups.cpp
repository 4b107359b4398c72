#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "qrg/classes.hpp"
#include "qrg/code.hpp"
#include "qrg/error.hpp"
#include "qrg/groups.hpp"
#include "qrg/matrix.hpp"

using namespace qrg;

namespace {

std::size_t brute_force_class_count(const GroupTable& g) {
  std::vector<char> seen(g.order(), 0);
  std::size_t count = 0;
  for (Ordinal x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    ++count;
    for (Ordinal y = 0; y < g.order(); ++y) seen[g.mul(g.mul(y, x), g.inv(y))] = 1;
  }
  return count;
}

void expect_group_axioms(const GroupTable& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Ordinal> pick(0, static_cast<Ordinal>(g.order() - 1));
  for (int i = 0; i < 1000; ++i) {
    const Ordinal x = pick(rng), y = pick(rng), z = pick(rng);
    ASSERT_EQ(g.mul(g.inv(x), x), g.identity());
    ASSERT_EQ(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
  }
}

void expect_closed(const GroupTable& g) {
  for (Ordinal x = 0; x < g.order(); ++x) {
    for (Ordinal s : g.generators()) {
      const Encoding e = compose(g.algebra(), g.encoding(x), g.encoding(s));
      ASSERT_TRUE(g.find(e).has_value()) << "element " << x << " times generator " << s;
    }
  }
}

std::uint64_t factorial(std::uint64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::Internal;
}

}  // namespace

TEST(Groups, SLOrders) {
  EXPECT_EQ(build_sl(2, 3, 1).order(), 24u);
  EXPECT_EQ(build_sl(2, 3, 2).order(), 648u);
  EXPECT_EQ(build_sl(3, 2, 1).order(), 168u);
  for (auto [p, n] : {std::pair{3u, 1u}, {5u, 1u}, {7u, 1u}, {3u, 2u}, {5u, 2u}}) {
    const std::uint64_t q = static_cast<std::uint64_t>(std::pow(p, n));
    const std::uint64_t formula = q * q * q / (p * p) * (p * p - 1);
    EXPECT_EQ(build_sl(2, p, n).order(), formula);
    EXPECT_EQ(sl_order(2, p, n), formula);
  }
}

TEST(Groups, SpOrders) {
  EXPECT_EQ(build_sp(1, 5, 1).order(), 120u);
  EXPECT_EQ(build_sp(2, 2, 1).order(), 720u);
  EXPECT_EQ(build_sp(2, 3, 1).order(), 51840u);
}

TEST(Groups, PermutationOrders) {
  EXPECT_EQ(build_alt(4).order(), 12u);
  EXPECT_EQ(build_alt(7).order(), 2520u);
  EXPECT_EQ(build_sym(3).order(), 6u);
  EXPECT_EQ(build_quaternion().order(), 8u);
}

TEST(Groups, TreeOrders) {
  for (std::uint64_t k : {2u, 3u}) {
    const std::uint64_t formula = factorial(k + 1) / 2 * static_cast<std::uint64_t>(std::pow(factorial(k), k + 1)) / 2;
    EXPECT_EQ(build_tree_level(static_cast<std::uint32_t>(k), 2).order(), formula);
    EXPECT_EQ(tree_order(static_cast<std::uint32_t>(k), 2), formula);
  }
  EXPECT_EQ(build_tree_level(6, 1).order(), 2520u);
}

TEST(Groups, BudgetIsEnforced) {
  EXPECT_EQ(kind_of([] { build_sl(2, 5, 2, 1000); }), ErrorKind::TooLarge);
  EXPECT_EQ(kind_of([] { build_sl(4, 5, 1); }), ErrorKind::TooLarge);
}

TEST(Groups, AxiomsAndClosure) {
  for (const auto& g : {build_sl(2, 5, 1), build_sl(2, 3, 2), build_sp(2, 2, 1), build_alt(6), build_tree_level(2, 2),
                        build_abelian({2, 6}), build_quaternion()}) {
    SCOPED_TRACE(display_name(g.descriptor()));
    expect_group_axioms(g, 7);
    expect_closed(g);
  }
}

TEST(Groups, LargeTableAxioms) {
  const auto g = build_sp(2, 3, 1);
  EXPECT_FALSE(g.has_cayley_table());
  expect_group_axioms(g, 11);
}

TEST(Groups, RebuildRoundTrips) {
  const auto g = build_sp(1, 3, 2);
  const auto h = rebuild(g.descriptor());
  ASSERT_EQ(g.order(), h.order());
  for (Ordinal x = 0; x < g.order(); ++x) ASSERT_EQ(g.encoding(x), h.encoding(x));
}

TEST(Groups, AbelianIsomorphismTypes) {
  EXPECT_EQ(abelian_groups_of_order(16).size(), 5u);
  EXPECT_EQ(abelian_groups_of_order(32).size(), 7u);
  EXPECT_EQ(abelian_groups_of_order(12).size(), 2u);
  EXPECT_EQ(abelian_groups_of_order(1).size(), 1u);
  for (const auto& f : abelian_groups_of_order(24)) {
    EXPECT_EQ(std::accumulate(f.begin(), f.end(), 1u, std::multiplies<>()), 24u);
    EXPECT_EQ(build_abelian(f).order(), 24u);
  }
}

TEST(Classes, CountsMatchBruteForce) {
  EXPECT_EQ(conjugacy_classes(build_sl(2, 3, 1)).count(), 7u);
  EXPECT_EQ(conjugacy_classes(build_sl(2, 5, 1)).count(), 9u);
  EXPECT_EQ(conjugacy_classes(build_abelian({})).count(), 1u);
  for (const auto& g : {build_sl(2, 3, 2), build_alt(5), build_sym(5), build_tree_level(2, 2), build_quaternion()}) {
    EXPECT_EQ(conjugacy_classes(g).count(), brute_force_class_count(g)) << display_name(g.descriptor());
  }
}

TEST(Classes, CoefficientsMatchTripleCount) {
  for (const auto& g : {build_sl(2, 3, 1), build_sym(4), build_sp(2, 2, 1)}) {
    SCOPED_TRACE(display_name(g.descriptor()));
    const ClassData cd = conjugacy_classes(g);
    const std::size_t r = cd.count();
    std::vector<std::uint32_t> counts(r * r * r, 0);
    for (Ordinal x = 0; x < g.order(); ++x) {
      for (Ordinal y = 0; y < g.order(); ++y) {
        const Ordinal z = g.mul(x, y);
        const std::uint32_t k = cd.class_of[z];
        if (cd.representatives[k] == z) ++counts[(cd.class_of[x] * r + cd.class_of[y]) * r + k];
      }
    }
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < r; ++k) ASSERT_EQ(cd.coefficient(i, j, k), counts[(i * r + j) * r + k]);
  }
}

TEST(Classes, SizesAndInverses) {
  const auto g = build_alt(6);
  const ClassData cd = conjugacy_classes(g);
  EXPECT_EQ(std::accumulate(cd.sizes.begin(), cd.sizes.end(), std::uint64_t{0}), g.order());
  for (std::size_t c = 0; c < cd.count(); ++c) {
    EXPECT_EQ(cd.class_of[g.inv(cd.representatives[c])], cd.inverse_class[c]);
    EXPECT_EQ(g.element_order(cd.representatives[c]), cd.element_orders[c]);
    EXPECT_EQ(cd.exponent % cd.element_orders[c], 0u);
  }
  EXPECT_EQ(cd.exponent, 60u);
}

TEST(Stabilizers, ProjectiveIndices) {
  EXPECT_EQ(stabilizer_subgroup(build_sl(2, 3, 1), StabilizerAction::Projective).index, 4u);
  EXPECT_EQ(stabilizer_subgroup(build_sl(3, 2, 1), StabilizerAction::Projective).index, 7u);
  const auto sp = build_sp(2, 3, 1);
  const auto h = stabilizer_subgroup(sp, StabilizerAction::Projective);
  EXPECT_EQ(h.index, 40u);
  EXPECT_EQ(h.members.size() * 40, sp.order());
}

TEST(Stabilizers, AreSubgroups) {
  const auto g = build_sl(2, 5, 1);
  for (auto action : {StabilizerAction::Projective, StabilizerAction::Natural}) {
    EXPECT_TRUE(is_subgroup(g, stabilizer_subgroup(g, action).members));
  }
  const auto alt = build_alt(7);
  const auto h = point_stabilizer(alt, 0);
  EXPECT_EQ(h.index, 7u);
  EXPECT_TRUE(is_subgroup(alt, h.members));
  EXPECT_FALSE(is_subgroup(alt, {0, 1}));
}

TEST(Matrices, SymplecticIdentities) {
  std::mt19937_64 rng(3);
  for (auto [k, p, n] : {std::array{2u, 3u, 1u}, {2u, 5u, 1u}, {3u, 3u, 1u}, {2u, 3u, 2u}}) {
    const std::uint32_t q = static_cast<std::uint32_t>(std::pow(p, n));
    std::uniform_int_distribution<std::uint32_t> residue(0, q - 1);
    const auto G = [&](std::uint32_t i, std::uint32_t j) { return g_matrix(k, q, i, j); };
    for (int trial = 0; trial < 100; ++trial) {
      std::uint32_t t = 0;
      while (t % p == 0) t = residue(rng);
      std::vector<std::uint32_t> a(k - 1);
      for (auto& x : a) x = residue(rng);
      const ModMatrix d = d_alpha(sp_alpha(k, q, t, a));
      const ModMatrix di = *inverse(d);
      ASSERT_TRUE(is_symplectic(d));
      const auto conj = [&](const ModMatrix& m) { return multiply(multiply(d, m), di); };
      const auto pw = [&](const ModMatrix& m, std::uint64_t e) { return power(m, e % q); };
      ASSERT_EQ(conj(G(1, 1)), pw(G(1, 1), std::uint64_t{t} * t));
      for (std::uint32_t j = 2; j <= k; ++j) {
        const std::uint64_t aj = a[j - 2];
        ASSERT_EQ(conj(G(1, j)), multiply(pw(G(1, 1), 2 * t * aj), pw(G(1, j), t)));
      }
      const std::uint64_t a1 = a[0];
      ASSERT_EQ(conj(G(2, 2)), multiply(multiply(pw(G(1, 1), a1 * a1), pw(G(1, 2), a1)), G(2, 2)));
      for (std::uint32_t j = 3; j <= k; ++j) {
        const std::uint64_t aj = a[j - 2];
        ASSERT_EQ(conj(G(2, j)),
                  multiply(multiply(multiply(pw(G(1, 1), 2 * a1 * aj), pw(G(1, j), a1)), pw(G(1, 2), aj)), G(2, j)));
      }
    }
  }
}

TEST(Matrices, GeneratorsAreSymplectic) {
  const auto g = build_sp(2, 3, 1);
  for (Ordinal s : g.generators()) EXPECT_TRUE(is_symplectic(decode_matrix(g.encoding(s), 3)));
}

TEST(Code, EvenWeightVectors) {
  EXPECT_EQ(build_even_weight_code(3).vectors, (std::vector<BinaryVector>{0, 3, 5, 6}));
  EXPECT_EQ(build_even_weight_code(7).vectors.size(), 64u);
  const auto c8 = build_even_weight_code(8);
  EXPECT_TRUE(std::binary_search(c8.vectors.begin(), c8.vectors.end(), BinaryVector{0xFF}));
}

namespace {

// Invariant subspaces are exactly the sums of spans of single Alt_m orbits.
std::set<std::uint32_t> invariant_dimensions_oracle(std::uint32_t m) {
  std::vector<std::vector<std::uint32_t>> even;
  std::vector<std::uint32_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0u);
  do {
    std::uint32_t inversions = 0;
    for (std::uint32_t i = 0; i < m; ++i)
      for (std::uint32_t j = i + 1; j < m; ++j) inversions += perm[i] > perm[j];
    if (inversions % 2 == 0) even.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  const auto apply = [&](std::uint32_t v, const std::vector<std::uint32_t>& s) {
    std::uint32_t w = 0;
    for (std::uint32_t i = 0; i < m; ++i)
      if (v >> i & 1) w |= 1u << s[i];
    return w;
  };
  const auto closure = [&](std::set<std::uint32_t> s) {
    std::vector<std::uint32_t> elems(s.begin(), s.end());
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (s.insert(elems[i] ^ elems[j]).second) elems.push_back(elems[i] ^ elems[j]);
    return s;
  };
  std::set<std::set<std::uint32_t>> spans;
  for (std::uint32_t v = 0; v < (1u << m); ++v) {
    if (__builtin_popcount(v) % 2) continue;
    std::set<std::uint32_t> orbit = {0};
    for (const auto& s : even) orbit.insert(apply(v, s));
    spans.insert(closure(orbit));
  }
  std::set<std::set<std::uint32_t>> all = spans;
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& a : std::vector(all.begin(), all.end()))
      for (const auto& b : spans) {
        std::set<std::uint32_t> u = a;
        u.insert(b.begin(), b.end());
        grew |= all.insert(closure(u)).second;
      }
  }
  std::set<std::uint32_t> dims;
  for (const auto& s : all) dims.insert(static_cast<std::uint32_t>(std::log2(s.size())));
  return dims;
}

}  // namespace

TEST(Code, InvariantScan) {
  for (std::uint32_t m : {3u, 5u, 7u, 8u}) {
    const InvariantScan scan = alt_invariant_subgroup_scan(build_even_weight_code(m));
    std::set<std::uint32_t> dims;
    for (const auto& s : scan.subspaces) dims.insert(s.dimension());
    EXPECT_EQ(dims, invariant_dimensions_oracle(m)) << "m = " << m;
    EXPECT_EQ(scan.code_dimension, m - 1);
  }
  const auto s7 = alt_invariant_subgroup_scan(build_even_weight_code(7));
  EXPECT_EQ(s7.subspaces.size(), 2u);
  EXPECT_EQ(s7.min_rank, 6u);
  const auto s8 = alt_invariant_subgroup_scan(build_even_weight_code(8));
  ASSERT_EQ(s8.subspaces.size(), 3u);
  EXPECT_TRUE(s8.subspaces[1].contains(0xFF));
  EXPECT_EQ(s8.min_rank, 6u);
}
