#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "qrg/matrix.hpp"

namespace qrg {

/// A joint eigenvalue assignment r of a commuting family and its common
/// eigenspace V(r), given by an orthonormal basis in the columns of `basis`.
struct Root {
  std::vector<std::complex<double>> values;  // r(S) per family member
  Eigen::MatrixXcd basis;

  std::size_t dimension() const { return static_cast<std::size_t>(basis.cols()); }
  Eigen::MatrixXcd projector() const { return basis * basis.adjoint(); }
};

/// Roots ordered by decreasing dimension, then by their values.
struct RootDecomposition {
  std::vector<Root> roots;
  double tolerance = 1e-8;

  std::vector<std::size_t> dimensions() const;
};

/// Splits the space into common eigenspaces of a commuting family of unitary
/// matrices. NotCommuting / NotUnitary when the input is off by more than the
/// tolerance.
RootDecomposition root_decomposition(const std::vector<Eigen::MatrixXcd>& family,
                                     double tolerance = 1e-8, std::uint64_t seed = 42);

struct ConjugatedRoot {
  std::size_t index = 0;                     // position of r_h in the decomposition
  std::vector<std::complex<double>> values;  // r_h(S) = r(h S h^{-1})
  double projector_gap = 0.0;                // |P_{V(r_h)} - P_{h^{-1} V(r)}|
};

/// r_h for the root at `root`, with V(r_h) = h^{-1} V(r) checked through
/// projectors. NotUnitary for non-unitary h; NotNormalizing when some
/// h S h^{-1} is not scalar on V(r) or r_h is not a root.
ConjugatedRoot conjugated_root(const std::vector<Eigen::MatrixXcd>& family, const Eigen::MatrixXcd& h,
                               const RootDecomposition& decomposition, std::size_t root);

/// Permutation matrix of an invertible matrix over F_p acting on the nonzero
/// column vectors of F_p^k. Vector v is indexed by its base-p value minus one.
Eigen::MatrixXcd nonzero_vector_action(const ModMatrix& a);

}  // namespace qrg
