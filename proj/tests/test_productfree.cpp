#include <gtest/gtest.h>

#include <algorithm>

#include "qrg/error.hpp"
#include "qrg/groups.hpp"
#include "qrg/productfree.hpp"

using namespace qrg;

namespace {

// Largest product-free subset by trying every subset; only for |G| <= 16.
std::size_t brute_force_pf(const GroupTable& g) {
  const std::size_t n = g.order();
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size <= best || (mask & 1)) continue;
    bool ok = true;
    for (Ordinal x = 0; x < n && ok; ++x)
      for (Ordinal y = 0; y < n && ok; ++y)
        if ((mask >> x & 1) && (mask >> y & 1) && (mask >> g.mul(x, y) & 1)) ok = false;
    if (ok) best = size;
  }
  return best;
}

std::vector<Ordinal> subgroup_of_multiples(const GroupTable& z, std::uint32_t d) {
  std::vector<Ordinal> h;
  for (Ordinal x = 0; x < z.order(); ++x)
    if (z.encoding(x)[0] % d == 0) h.push_back(x);
  return h;
}

}  // namespace

TEST(ProductFree, Verify) {
  const auto z9 = build_cyclic(9);
  EXPECT_TRUE(verify_product_free(z9, {}));
  EXPECT_FALSE(verify_product_free(z9, {0, 4}));
  std::vector<Ordinal> s;
  for (std::uint16_t v : {3, 4, 5}) s.push_back(z9.ordinal(std::u16string(1, static_cast<char16_t>(v))));
  EXPECT_TRUE(verify_product_free(z9, s));
  EXPECT_THROW(verify_product_free(z9, {100}), Error);
}

TEST(ProductFree, ExactSpotValues) {
  const auto z7 = exact_max_product_free(build_cyclic(7));
  EXPECT_EQ(z7.size, 2u);
  EXPECT_EQ(z7.density, Rational(2, 7));
  const auto z10 = exact_max_product_free(build_cyclic(10));
  EXPECT_EQ(z10.density, Rational(1, 2));
  const auto q8 = exact_max_product_free(build_quaternion());
  EXPECT_EQ(q8.size, 4u);
  EXPECT_TRUE(q8.optimal);
}

TEST(ProductFree, ExactMatchesBruteForce) {
  for (const auto& g : {build_cyclic(11), build_abelian({2, 6}), build_quaternion(), build_sym(3), build_alt(4),
                        build_abelian({4, 4}), build_cyclic(15)}) {
    const auto r = exact_max_product_free(g);
    EXPECT_TRUE(r.optimal);
    EXPECT_TRUE(verify_product_free(g, r.witness));
    EXPECT_EQ(r.size, brute_force_pf(g)) << display_name(g.descriptor());
  }
}

TEST(ProductFree, NonAbelianValues) {
  EXPECT_EQ(exact_max_product_free(build_sl(2, 3, 1)).size, 8u);
  EXPECT_EQ(exact_max_product_free(build_sym(4)).density, Rational(1, 2));
}

TEST(ProductFree, DensityAtMostHalfAndDeterministic) {
  for (const auto& g : {build_sl(2, 3, 1), build_abelian({3, 9}), build_tree_level(2, 2)}) {
    const auto a = exact_max_product_free(g);
    const auto b = exact_max_product_free(g);
    EXPECT_LE(a.density, Rational(1, 2));
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_EQ(a.nodes, b.nodes);
  }
}

TEST(ProductFree, BudgetReturnsBestFound) {
  const auto g = build_sl(2, 5, 1);
  const auto r = exact_max_product_free(g, 1000);
  EXPECT_TRUE(r.budget_exceeded);
  EXPECT_FALSE(r.optimal);
  EXPECT_TRUE(verify_product_free(g, r.witness));
  EXPECT_THROW(exact_max_product_free(build_sl(2, 7, 1)), Error);
}

TEST(ProductFree, Cosets) {
  const auto sl = build_sl(2, 3, 1);
  const auto c = coset_product_free(sl, stabilizer_subgroup(sl, StabilizerAction::Projective).members);
  EXPECT_EQ(c.density, Rational(1, 4));
  EXPECT_TRUE(verify_product_free(sl, c.witness));
  EXPECT_LE(c.density, exact_max_product_free(sl).density);

  const auto z9 = build_cyclic(9);
  const auto c9 = coset_product_free(z9, subgroup_of_multiples(z9, 3));
  EXPECT_EQ(c9.density, Rational(1, 3));
  EXPECT_TRUE(verify_product_free(z9, c9.witness));

  const auto alt = build_alt(7);
  const auto c7 = coset_product_free(alt, point_stabilizer(alt, 0).members);
  EXPECT_EQ(c7.density, Rational(1, 7));
  EXPECT_TRUE(verify_product_free(alt, c7.witness));

  std::vector<Ordinal> everything(z9.order());
  for (Ordinal x = 0; x < z9.order(); ++x) everything[x] = x;
  EXPECT_THROW(coset_product_free(z9, everything), Error);
  EXPECT_THROW(coset_product_free(z9, {0, 1}), Error);
}

TEST(ProductFree, Greedy) {
  EXPECT_EQ(greedy_product_free(build_abelian({})).size, 0u);
  EXPECT_EQ(greedy_product_free(build_cyclic(7)).size, 2u);
  const auto g = build_sl(2, 5, 1);
  const auto coset = coset_product_free(g, stabilizer_subgroup(g, StabilizerAction::Projective).members);
  const auto grown = greedy_product_free(g, std::nullopt, coset.witness);
  EXPECT_GE(grown.size, 20u);
  EXPECT_TRUE(verify_product_free(g, grown.witness));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto r = greedy_product_free(build_sl(2, 7, 1), seed);
    EXPECT_TRUE(verify_product_free(build_sl(2, 7, 1), r.witness));
  }
  EXPECT_THROW(greedy_product_free(g, std::nullopt, {0}), Error);
}

TEST(ProductFree, GreenRuzsaAgreement) {
  for (const auto& f : {std::vector<std::uint32_t>{10}, {9}, {3, 3}, {7}, {2, 2, 4}}) {
    const auto r = formula_vs_search(f);
    EXPECT_TRUE(r.pass) << r.quantity;
  }
}
