#pragma once

#include <compare>
#include <cstdint>

namespace qrg {

/// Largest modulus p^n the residue arithmetic accepts; products of two
/// canonical values then fit in 64 bits.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;

bool is_prime(std::uint64_t v);

/// p^n, throwing TooLarge above kMaxModulus and InvalidArgument when p is not
/// prime or n is zero.
std::uint64_t prime_power(std::uint32_t p, std::uint32_t n);

/// Inverse of a modulo m by extended Euclid; NotAUnit when gcd(a, m) != 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// An element of Z/p^n held in canonical form 0 <= value < p^n.
class Residue {
 public:
  Residue(std::int64_t value, std::uint32_t p, std::uint32_t n);

  std::uint64_t value() const noexcept { return value_; }
  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t n() const noexcept { return n_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  bool is_unit() const noexcept { return value_ % p_ != 0; }

  Residue operator+(const Residue& other) const;
  Residue operator-(const Residue& other) const;
  Residue operator*(const Residue& other) const;
  Residue operator-() const;

  bool operator==(const Residue& other) const = default;

 private:
  Residue(std::uint64_t value, std::uint32_t p, std::uint32_t n, std::uint64_t modulus)
      : value_(value), p_(p), n_(n), modulus_(modulus) {}
  void check_compatible(const Residue& other) const;

  std::uint64_t value_;
  std::uint32_t p_;
  std::uint32_t n_;
  std::uint64_t modulus_;
};

Residue unit_inverse(const Residue& a);

struct UnitCounts {
  std::uint64_t units = 0;
  std::uint64_t square_units = 0;
  bool operator==(const UnitCounts&) const = default;
};

/// (phi(p^n), phi(p^n)/2) for odd p. The unit group of Z/p^n is cyclic for odd
/// p, so exactly half the units are squares. p = 2 is rejected.
UnitCounts units_and_squares(std::uint32_t p, std::uint32_t n);

}  // namespace qrg
