#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qrg {

/// Square matrix over Z/q, row-major, entries canonical in [0, q).
struct ModMatrix {
  std::uint32_t dim = 0;
  std::uint32_t modulus = 1;
  std::vector<std::uint32_t> entries;

  std::uint32_t at(std::uint32_t row, std::uint32_t col) const { return entries[row * dim + col]; }
  std::uint32_t& at(std::uint32_t row, std::uint32_t col) { return entries[row * dim + col]; }

  bool operator==(const ModMatrix&) const = default;
};

ModMatrix identity_matrix(std::uint32_t dim, std::uint32_t modulus);
ModMatrix multiply(const ModMatrix& a, const ModMatrix& b);
ModMatrix transpose(const ModMatrix& a);
ModMatrix power(const ModMatrix& a, std::uint64_t exponent);
ModMatrix negate(const ModMatrix& a);

/// Inverse over the local ring Z/p^n; nullopt when the matrix is singular mod p.
std::optional<ModMatrix> inverse(const ModMatrix& a);

/// Determinant when it is a unit of Z/q, nullopt otherwise.
std::optional<std::uint32_t> unit_determinant(const ModMatrix& a);

// Matrices used by the root-subspace arguments for SL_k and Sp_2k. Indices are
// one-based to match the usual matrix notation.

/// I + t*E_ij for i != j.
ModMatrix elementary(std::uint32_t dim, std::uint32_t modulus, std::uint32_t i, std::uint32_t j,
                     std::uint32_t t = 1);

/// The unipotent e_i = I + E_{i,k} of SL_k, 1 <= i <= k-1.
ModMatrix sl_root_element(std::uint32_t k, std::uint32_t modulus, std::uint32_t i);

/// Block diagonal diag(T, 1) where T has t, a_2..a_{k-1} in its first row and
/// t^{-1} in position (2,2). For k = 2 the block degenerates to T = (t), which
/// lies in GL_2 rather than SL_2.
ModMatrix sl_alpha(std::uint32_t k, std::uint32_t modulus, std::uint32_t t,
                   std::span<const std::uint32_t> a);

/// J = [[0, I_k], [-I_k, 0]].
ModMatrix symplectic_form(std::uint32_t k, std::uint32_t modulus);

/// U_sigma = [[I, sigma], [0, I]] for a symmetric k x k sigma.
ModMatrix u_sigma(const ModMatrix& sigma);

/// D_alpha = diag(alpha, (alpha^{-1})^T) for invertible alpha.
ModMatrix d_alpha(const ModMatrix& alpha);

/// Symmetric k x k matrix with ones at (i, j) and (j, i).
ModMatrix symmetric_unit(std::uint32_t k, std::uint32_t modulus, std::uint32_t i, std::uint32_t j);

/// G_ij = U_{E_ij}.
ModMatrix g_matrix(std::uint32_t k, std::uint32_t modulus, std::uint32_t i, std::uint32_t j);

/// k x k matrix with t, a_1..a_{k-1} in the first row and ones on the rest of
/// the diagonal.
ModMatrix sp_alpha(std::uint32_t k, std::uint32_t modulus, std::uint32_t t,
                   std::span<const std::uint32_t> a);

bool is_symplectic(const ModMatrix& a);

}  // namespace qrg
