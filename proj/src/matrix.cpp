#include "qrg/matrix.hpp"

#include <numeric>
#include <utility>

#include "qrg/error.hpp"
#include "qrg/modring.hpp"

namespace qrg {

namespace {

bool is_unit_mod(std::uint32_t v, std::uint32_t modulus) { return std::gcd(v, modulus) == 1; }

}  // namespace

ModMatrix identity_matrix(std::uint32_t dim, std::uint32_t modulus) {
  ModMatrix m{dim, modulus, std::vector<std::uint32_t>(dim * dim, 0)};
  for (std::uint32_t i = 0; i < dim; ++i) m.at(i, i) = 1 % modulus;
  return m;
}

ModMatrix multiply(const ModMatrix& a, const ModMatrix& b) {
  if (a.dim != b.dim || a.modulus != b.modulus) {
    fail(ErrorKind::InvalidArgument, "matrix shapes or moduli differ");
  }
  const std::uint32_t d = a.dim;
  ModMatrix c{d, a.modulus, std::vector<std::uint32_t>(d * d, 0)};
  for (std::uint32_t i = 0; i < d; ++i) {
    for (std::uint32_t j = 0; j < d; ++j) {
      std::uint64_t acc = 0;
      for (std::uint32_t l = 0; l < d; ++l) acc += std::uint64_t{a.at(i, l)} * b.at(l, j) % a.modulus;
      c.at(i, j) = static_cast<std::uint32_t>(acc % a.modulus);
    }
  }
  return c;
}

ModMatrix transpose(const ModMatrix& a) {
  ModMatrix t = a;
  for (std::uint32_t i = 0; i < a.dim; ++i)
    for (std::uint32_t j = 0; j < a.dim; ++j) t.at(i, j) = a.at(j, i);
  return t;
}

ModMatrix power(const ModMatrix& a, std::uint64_t exponent) {
  ModMatrix result = identity_matrix(a.dim, a.modulus);
  ModMatrix base = a;
  while (exponent > 0) {
    if (exponent & 1U) result = multiply(result, base);
    base = multiply(base, base);
    exponent >>= 1U;
  }
  return result;
}

ModMatrix negate(const ModMatrix& a) {
  ModMatrix n = a;
  for (auto& e : n.entries) e = (a.modulus - e) % a.modulus;
  return n;
}

std::optional<ModMatrix> inverse(const ModMatrix& a) {
  const std::uint32_t d = a.dim;
  const std::uint64_t q = a.modulus;
  ModMatrix work = a;
  ModMatrix inv = identity_matrix(d, a.modulus);
  auto swap_rows = [d](ModMatrix& m, std::uint32_t r1, std::uint32_t r2) {
    for (std::uint32_t c = 0; c < d; ++c) std::swap(m.at(r1, c), m.at(r2, c));
  };
  for (std::uint32_t col = 0; col < d; ++col) {
    std::uint32_t pivot = d;
    for (std::uint32_t r = col; r < d; ++r) {
      if (is_unit_mod(work.at(r, col), a.modulus)) {
        pivot = r;
        break;
      }
    }
    if (pivot == d) return std::nullopt;
    swap_rows(work, pivot, col);
    swap_rows(inv, pivot, col);
    const std::uint64_t scale = inverse_mod(work.at(col, col), q);
    for (std::uint32_t c = 0; c < d; ++c) {
      work.at(col, c) = static_cast<std::uint32_t>(work.at(col, c) * scale % q);
      inv.at(col, c) = static_cast<std::uint32_t>(inv.at(col, c) * scale % q);
    }
    for (std::uint32_t r = 0; r < d; ++r) {
      if (r == col || work.at(r, col) == 0) continue;
      const std::uint64_t factor = work.at(r, col);
      for (std::uint32_t c = 0; c < d; ++c) {
        work.at(r, c) = static_cast<std::uint32_t>((work.at(r, c) + q * q - factor * work.at(col, c)) % q);
        inv.at(r, c) = static_cast<std::uint32_t>((inv.at(r, c) + q * q - factor * inv.at(col, c)) % q);
      }
    }
  }
  return inv;
}

std::optional<std::uint32_t> unit_determinant(const ModMatrix& a) {
  const std::uint32_t d = a.dim;
  const std::uint64_t q = a.modulus;
  ModMatrix work = a;
  std::uint64_t det = 1 % q;
  for (std::uint32_t col = 0; col < d; ++col) {
    std::uint32_t pivot = d;
    for (std::uint32_t r = col; r < d; ++r) {
      if (is_unit_mod(work.at(r, col), a.modulus)) {
        pivot = r;
        break;
      }
    }
    if (pivot == d) return std::nullopt;
    if (pivot != col) {
      for (std::uint32_t c = 0; c < d; ++c) std::swap(work.at(pivot, c), work.at(col, c));
      det = (q - det) % q;
    }
    det = det * work.at(col, col) % q;
    const std::uint64_t inv_pivot = inverse_mod(work.at(col, col), q);
    for (std::uint32_t r = col + 1; r < d; ++r) {
      const std::uint64_t factor = work.at(r, col) * inv_pivot % q;
      if (factor == 0) continue;
      for (std::uint32_t c = col; c < d; ++c) {
        work.at(r, c) = static_cast<std::uint32_t>((work.at(r, c) + q * q - factor * work.at(col, c)) % q);
      }
    }
  }
  return static_cast<std::uint32_t>(det);
}

ModMatrix elementary(std::uint32_t dim, std::uint32_t modulus, std::uint32_t i, std::uint32_t j,
                     std::uint32_t t) {
  if (i == j || i == 0 || j == 0 || i > dim || j > dim) {
    fail(ErrorKind::InvalidArgument, "elementary matrix needs distinct indices in [1, dim]");
  }
  ModMatrix m = identity_matrix(dim, modulus);
  m.at(i - 1, j - 1) = t % modulus;
  return m;
}

ModMatrix sl_root_element(std::uint32_t k, std::uint32_t modulus, std::uint32_t i) {
  if (i == 0 || i >= k) fail(ErrorKind::InvalidArgument, "e_i needs 1 <= i <= k-1");
  return elementary(k, modulus, i, k, 1);
}

ModMatrix sl_alpha(std::uint32_t k, std::uint32_t modulus, std::uint32_t t,
                   std::span<const std::uint32_t> a) {
  if (k < 2) fail(ErrorKind::InvalidArgument, "alpha needs k >= 2");
  if (a.size() != (k >= 3 ? k - 2 : 0)) {
    fail(ErrorKind::InvalidArgument, "alpha for SL_k takes a_2..a_{k-1}");
  }
  ModMatrix m = identity_matrix(k, modulus);
  m.at(0, 0) = t % modulus;
  if (k >= 3) {
    m.at(1, 1) = static_cast<std::uint32_t>(inverse_mod(t, modulus));
    for (std::uint32_t j = 0; j < a.size(); ++j) m.at(0, j + 1) = a[j] % modulus;
  }
  return m;
}

ModMatrix symplectic_form(std::uint32_t k, std::uint32_t modulus) {
  ModMatrix j{2 * k, modulus, std::vector<std::uint32_t>(4 * k * k, 0)};
  for (std::uint32_t i = 0; i < k; ++i) {
    j.at(i, k + i) = 1 % modulus;
    j.at(k + i, i) = (modulus - 1) % modulus;
  }
  return j;
}

ModMatrix u_sigma(const ModMatrix& sigma) {
  const std::uint32_t k = sigma.dim;
  ModMatrix u = identity_matrix(2 * k, sigma.modulus);
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < k; ++j) u.at(i, k + j) = sigma.at(i, j);
  return u;
}

ModMatrix d_alpha(const ModMatrix& alpha) {
  const auto inv = inverse(alpha);
  if (!inv) fail(ErrorKind::NotAUnit, "D_alpha needs an invertible alpha");
  const ModMatrix tilde = transpose(*inv);
  const std::uint32_t k = alpha.dim;
  ModMatrix d{2 * k, alpha.modulus, std::vector<std::uint32_t>(4 * k * k, 0)};
  for (std::uint32_t i = 0; i < k; ++i) {
    for (std::uint32_t j = 0; j < k; ++j) {
      d.at(i, j) = alpha.at(i, j);
      d.at(k + i, k + j) = tilde.at(i, j);
    }
  }
  return d;
}

ModMatrix symmetric_unit(std::uint32_t k, std::uint32_t modulus, std::uint32_t i, std::uint32_t j) {
  if (i == 0 || j == 0 || i > k || j > k) fail(ErrorKind::InvalidArgument, "E_ij index out of range");
  ModMatrix e{k, modulus, std::vector<std::uint32_t>(k * k, 0)};
  e.at(i - 1, j - 1) = 1 % modulus;
  e.at(j - 1, i - 1) = 1 % modulus;
  return e;
}

ModMatrix g_matrix(std::uint32_t k, std::uint32_t modulus, std::uint32_t i, std::uint32_t j) {
  return u_sigma(symmetric_unit(k, modulus, i, j));
}

ModMatrix sp_alpha(std::uint32_t k, std::uint32_t modulus, std::uint32_t t,
                   std::span<const std::uint32_t> a) {
  if (a.size() + 1 != k) fail(ErrorKind::InvalidArgument, "alpha for Sp_2k takes a_1..a_{k-1}");
  ModMatrix m = identity_matrix(k, modulus);
  m.at(0, 0) = t % modulus;
  for (std::uint32_t j = 0; j < a.size(); ++j) m.at(0, j + 1) = a[j] % modulus;
  return m;
}

bool is_symplectic(const ModMatrix& a) {
  if (a.dim % 2 != 0) return false;
  const ModMatrix j = symplectic_form(a.dim / 2, a.modulus);
  return multiply(multiply(a, j), transpose(a)) == j;
}

}  // namespace qrg
