#include <gtest/gtest.h>

#include <algorithm>
#include <complex>
#include <numbers>

#include "qrg/error.hpp"
#include "qrg/matrix.hpp"
#include "qrg/roots.hpp"

using namespace qrg;

namespace {

using Mat = Eigen::MatrixXcd;

// rho(L) for L = <e_1> in SL_2(F_3), acting on the eight nonzero vectors of F_3^2.
std::vector<Mat> sl2f3_family() {
  const ModMatrix e1 = sl_root_element(2, 3, 1);
  return {nonzero_vector_action(e1), nonzero_vector_action(multiply(e1, e1))};
}

const std::complex<double> kOmega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);

std::size_t root_with_value(const RootDecomposition& d, std::complex<double> value) {
  for (std::size_t i = 0; i < d.roots.size(); ++i)
    if (std::abs(d.roots[i].values[0] - value) < 1e-8) return i;
  return d.roots.size();
}

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

TEST(Roots, IdentityFamily) {
  const auto d = root_decomposition({Mat::Identity(5, 5)});
  ASSERT_EQ(d.roots.size(), 1u);
  EXPECT_EQ(d.roots[0].dimension(), 5u);
  EXPECT_NEAR(std::abs(d.roots[0].values[0] - 1.0), 0.0, 1e-12);
}

TEST(Roots, DiagonalFamily) {
  Mat a = Mat::Zero(4, 4), b = Mat::Zero(4, 4);
  a.diagonal() << 1.0, 1.0, -1.0, -1.0;
  b.diagonal() << 1.0, -1.0, 1.0, 1.0;
  const auto d = root_decomposition({a, b});
  EXPECT_EQ(d.dimensions(), (std::vector<std::size_t>{2, 1, 1}));
}

TEST(Roots, PermutationRepresentationOfL) {
  const auto family = sl2f3_family();
  const auto d = root_decomposition(family);
  ASSERT_EQ(d.dimensions(), (std::vector<std::size_t>{4, 2, 2}));

  Mat total = Mat::Zero(8, 8);
  for (std::size_t i = 0; i < d.roots.size(); ++i) {
    total += d.roots[i].projector();
    for (std::size_t j = 0; j < i; ++j) {
      EXPECT_LE((d.roots[i].basis.adjoint() * d.roots[j].basis).norm(), 1e-8);
    }
  }
  EXPECT_LE((total - Mat::Identity(8, 8)).norm(), 1e-8);
  for (std::size_t s = 0; s < family.size(); ++s) {
    Mat rebuilt = Mat::Zero(8, 8);
    for (const auto& r : d.roots) rebuilt += r.values[s] * r.projector();
    EXPECT_LE((family[s] - rebuilt).norm(), 1e-7);
  }
  EXPECT_NEAR(std::abs(d.roots[0].values[0] - 1.0), 0.0, 1e-8);
  EXPECT_LT(root_with_value(d, kOmega), 3u);
  EXPECT_LT(root_with_value(d, kOmega * kOmega), 3u);
}

TEST(Roots, AlphaSwapsNontrivialRoots) {
  const auto family = sl2f3_family();
  const auto d = root_decomposition(family);
  const Mat h = nonzero_vector_action(sl_alpha(2, 3, 2, {}));
  const std::size_t omega = root_with_value(d, kOmega);
  const std::size_t omega2 = root_with_value(d, kOmega * kOmega);
  const auto image = conjugated_root(family, h, d, omega);
  EXPECT_EQ(image.index, omega2);
  EXPECT_LE(image.projector_gap, 1e-8);
  EXPECT_EQ(conjugated_root(family, h, d, omega2).index, omega);
  EXPECT_EQ(conjugated_root(family, h, d, 0).index, 0u);
}

TEST(Roots, TrivialConjugations) {
  const auto family = sl2f3_family();
  const auto d = root_decomposition(family);
  const Mat scalar = std::polar(1.0, 0.7) * Mat::Identity(8, 8);
  for (std::size_t r = 0; r < d.roots.size(); ++r) {
    EXPECT_EQ(conjugated_root(family, Mat::Identity(8, 8), d, r).index, r);
    EXPECT_EQ(conjugated_root(family, scalar, d, r).index, r);
  }
}

TEST(Roots, Errors) {
  Mat a = Mat::Zero(2, 2), b = Mat::Zero(2, 2);
  a << 0, 1, 1, 0;
  b << 1, 0, 0, -1;
  EXPECT_EQ(kind_of([&] { root_decomposition({a, b}); }), ErrorKind::NotCommuting);
  EXPECT_EQ(kind_of([&] { root_decomposition({2.0 * a}); }), ErrorKind::NotUnitary);

  const auto family = sl2f3_family();
  const auto d = root_decomposition(family);
  // A transposition of two vectors that does not normalize <e_1>.
  Mat swap = Mat::Identity(8, 8);
  swap.row(0).swap(swap.row(3));
  EXPECT_EQ(kind_of([&] { conjugated_root(family, swap, d, 1); }), ErrorKind::NotNormalizing);
}

TEST(Roots, ActionIsAHomomorphism) {
  const ModMatrix a = sl_root_element(2, 5, 1);
  const ModMatrix b = sl_alpha(2, 5, 3, {});
  EXPECT_LE((nonzero_vector_action(multiply(a, b)) - nonzero_vector_action(a) * nonzero_vector_action(b)).norm(), 1e-12);
}
