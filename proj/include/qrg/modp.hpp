#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace qrg::modp {

/// Dense linear algebra and polynomial root finding over the prime field F_l.
/// Matrices are row-major with an explicit column count.

struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint64_t> data;

  std::uint64_t& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  std::uint64_t at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

using Poly = std::vector<std::uint64_t>;  // coefficients, lowest degree first

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t l);
std::uint64_t inv(std::uint64_t a, std::uint64_t l);

/// Basis of {x : A x = 0}.
std::vector<std::vector<std::uint64_t>> nullspace(Matrix a, std::uint64_t l);

/// Characteristic polynomial det(xI - A) via reduction to Hessenberg form.
Poly charpoly(Matrix a, std::uint64_t l);

/// Distinct roots in F_l of a polynomial; sorted.
std::vector<std::uint64_t> distinct_roots(Poly f, std::uint64_t l, std::mt19937_64& rng);

/// Smallest prime l with l = 1 (mod e) and l^2 > bound_squared; 0 if none
/// below 2^31.
std::uint64_t working_prime(std::uint64_t e, std::uint64_t bound_squared);

/// A primitive e-th root of unity modulo the prime l (e divides l - 1).
std::uint64_t primitive_root_of_unity(std::uint64_t e, std::uint64_t l);

}  // namespace qrg::modp
