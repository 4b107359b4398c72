#include <gtest/gtest.h>

#include <cmath>

#include "qrg/bounds.hpp"
#include "qrg/error.hpp"
#include "qrg/groups.hpp"

using namespace qrg;

namespace {

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

TEST(Bounds, DegreeFormulas) {
  EXPECT_EQ(h_bound(Family::SL2, 2, 7), Rational(3));
  EXPECT_EQ(h_bound(Family::SLk, 3, 3), Rational(6));
  EXPECT_EQ(h_bound(Family::Sp2k, 2, 3), Rational(3));
  EXPECT_EQ(hf_bound(Family::SL2, 2, 3, 2), Rational(3));
  EXPECT_EQ(hf_bound(Family::SLk, 3, 3, 1), Rational(6));
  EXPECT_EQ(hf_bound(Family::Sp2k, 2, 3, 1), Rational(3));
  EXPECT_EQ(bgc_bound(3, 2), Rational(4));
  EXPECT_EQ(bgc_bound(5, 2), Rational(12));
  EXPECT_EQ(bgc_bound(3, 3), Rational(12));
}

TEST(Bounds, FaithfulBoundAtNOneIsH) {
  for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
    EXPECT_EQ(hf_bound(Family::SL2, 2, p, 1), h_bound(Family::SL2, 2, p));
    for (std::uint32_t k : {3u, 4u}) EXPECT_EQ(hf_bound(Family::SLk, k, p, 1), h_bound(Family::SLk, k, p));
    for (std::uint32_t k : {1u, 2u, 3u}) EXPECT_EQ(hf_bound(Family::Sp2k, k, p, 1), h_bound(Family::Sp2k, k, p));
  }
}

TEST(Bounds, Preconditions) {
  EXPECT_EQ(kind_of([] { h_bound(Family::SL2, 2, 2); }), ErrorKind::UnsupportedPrime);
  EXPECT_EQ(kind_of([] { h_bound(Family::SLk, 2, 5); }), ErrorKind::OutOfTheoremRange);
  EXPECT_EQ(kind_of([] { h_bound(Family::SL2, 2, 9); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { bgc_bound(3, 1); }), ErrorKind::UnsupportedParameters);
  EXPECT_EQ(kind_of([] { pf_bounds_tree(5); }), ErrorKind::OutOfTheoremRange);
}

TEST(Bounds, ProductFreeIntervals) {
  const auto sl2 = pf_bounds_profinite(Family::SL2, 2, 7);
  EXPECT_EQ(sl2.lower, Rational(1, 8));
  EXPECT_NEAR(sl2.upper, std::cbrt(1.0 / 3.0), 1e-12);
  EXPECT_DOUBLE_EQ(sl2.effective_upper, 0.5);
  const auto slk = pf_bounds_profinite(Family::SLk, 3, 3);
  EXPECT_EQ(slk.lower, Rational(2, 26));
  EXPECT_NEAR(slk.upper, std::cbrt(1.0 / 18.0), 1e-12);
  const auto sp = pf_bounds_profinite(Family::Sp2k, 2, 3);
  EXPECT_EQ(sp.lower, Rational(2, 80));
  EXPECT_NEAR(sp.upper, std::cbrt(1.0 / 3.0), 1e-12);
  const auto tree6 = pf_bounds_tree(6);
  EXPECT_EQ(tree6.lower, Rational(1, 7));
  EXPECT_NEAR(tree6.upper, std::cbrt(1.0 / 5.0), 1e-12);
  EXPECT_EQ(pf_bounds_tree(7).lower, Rational(1, 8));
}

TEST(Bounds, GreenRuzsaSpotValues) {
  EXPECT_EQ(green_ruzsa_pf({10}), Rational(1, 2));
  EXPECT_EQ(green_ruzsa_pf({9}), Rational(1, 3));
  EXPECT_EQ(green_ruzsa_pf({7}), Rational(2, 7));
  EXPECT_EQ(green_ruzsa_pf({3, 3}), Rational(1, 3));
  EXPECT_EQ(green_ruzsa_pf({5}), Rational(2, 5));
  EXPECT_EQ(green_ruzsa_pf({7, 7}), Rational(2, 7));
  EXPECT_THROW(green_ruzsa_pf({}), Error);
}

TEST(Bounds, GreenRuzsaDependsOnlyOnTheGroup) {
  EXPECT_EQ(green_ruzsa_pf({2, 3}), green_ruzsa_pf({6}));
  EXPECT_EQ(green_ruzsa_pf({7, 13}), green_ruzsa_pf({91}));
  EXPECT_EQ(green_ruzsa_pf({3, 6}), green_ruzsa_pf({6, 3}));
}

TEST(Bounds, PadicAndSeries) {
  EXPECT_EQ(pf_padic(5), Rational(2, 5));
  EXPECT_EQ(pf_padic(7), Rational(1, 3));
  EXPECT_EQ(pf_padic(3), Rational(1, 3));
  EXPECT_EQ(pf_power_series(7), Rational(2, 7));
  EXPECT_EQ(pf_power_series(3), Rational(1, 3));
  EXPECT_EQ(pf_power_series(2), Rational(1, 2));
  for (std::uint32_t k : {1u, 2u, 5u}) EXPECT_EQ(pf_torus(k), Rational(1, 3));
}

TEST(Bounds, VerifyBound) {
  EXPECT_TRUE(verify_bound("m", 3, 3, Relation::GreaterEqual).pass);
  EXPECT_TRUE(verify_bound("m", 1, 1, Relation::GreaterEqual).pass);
  EXPECT_FALSE(verify_bound("m", 2, 3, Relation::GreaterEqual).pass);
  EXPECT_TRUE(verify_bound("pf", Rational(1, 2), Rational(1, 2), Relation::Equal).pass);
  EXPECT_FALSE(verify_bound("pf", Rational(1, 2), Rational(1, 3), Relation::LessEqual).pass);
}

TEST(Bounds, FamilyNames) {
  EXPECT_EQ(parse_family("sl2"), Family::SL2);
  EXPECT_EQ(parse_family("slk"), Family::SLk);
  EXPECT_EQ(parse_family("sp2k"), Family::Sp2k);
  EXPECT_THROW(parse_family("gl"), Error);
}
