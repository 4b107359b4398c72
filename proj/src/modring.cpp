#include "qrg/modring.hpp"

#include <string>

#include "qrg/error.hpp"

namespace qrg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::UnsupportedModulus: return "UnsupportedModulus";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorKind::PrimeSearchFailed: return "PrimeSearchFailed";
    case ErrorKind::TrivialGroup: return "TrivialGroup";
    case ErrorKind::NotCommuting: return "NotCommuting";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::NotNormalizing: return "NotNormalizing";
    case ErrorKind::UnsupportedPrime: return "UnsupportedPrime";
    case ErrorKind::UnsupportedParameters: return "UnsupportedParameters";
    case ErrorKind::OutOfTheoremRange: return "OutOfTheoremRange";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::MeanNotZero: return "MeanNotZero";
    case ErrorKind::PreconditionUnmet: return "PreconditionUnmet";
    case ErrorKind::NotProper: return "NotProper";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

std::uint64_t prime_power(std::uint32_t p, std::uint32_t n) {
  if (!is_prime(p)) fail(ErrorKind::InvalidArgument, "p = " + std::to_string(p) + " is not prime");
  if (n == 0) fail(ErrorKind::InvalidArgument, "exponent n must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    q *= p;
    if (q > kMaxModulus) {
      fail(ErrorKind::TooLarge, "modulus " + std::to_string(p) + "^" + std::to_string(n) +
                                    " exceeds 2^31");
    }
  }
  return q;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  std::int64_t old_r = static_cast<std::int64_t>(a % m), r = static_cast<std::int64_t>(m);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) {
    fail(ErrorKind::NotAUnit, std::to_string(a) + " is not a unit modulo " + std::to_string(m));
  }
  const auto mm = static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(((old_s % mm) + mm) % mm);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = static_cast<std::uint64_t>((unsigned __int128)result * base % m);
    base = static_cast<std::uint64_t>((unsigned __int128)base * base % m);
    exp >>= 1U;
  }
  return result;
}

Residue::Residue(std::int64_t value, std::uint32_t p, std::uint32_t n)
    : p_(p), n_(n), modulus_(prime_power(p, n)) {
  const auto m = static_cast<std::int64_t>(modulus_);
  value_ = static_cast<std::uint64_t>(((value % m) + m) % m);
}

void Residue::check_compatible(const Residue& other) const {
  if (p_ != other.p_ || n_ != other.n_) {
    fail(ErrorKind::InvalidArgument, "residues over different rings");
  }
}

Residue Residue::operator+(const Residue& other) const {
  check_compatible(other);
  return {(value_ + other.value_) % modulus_, p_, n_, modulus_};
}

Residue Residue::operator-(const Residue& other) const {
  check_compatible(other);
  return {(value_ + modulus_ - other.value_) % modulus_, p_, n_, modulus_};
}

Residue Residue::operator*(const Residue& other) const {
  check_compatible(other);
  return {value_ * other.value_ % modulus_, p_, n_, modulus_};
}

Residue Residue::operator-() const { return {(modulus_ - value_) % modulus_, p_, n_, modulus_}; }

Residue unit_inverse(const Residue& a) {
  if (!a.is_unit()) {
    fail(ErrorKind::NotAUnit, std::to_string(a.value()) + " shares the factor " +
                                  std::to_string(a.p()) + " with the modulus");
  }
  return Residue(static_cast<std::int64_t>(inverse_mod(a.value(), a.modulus())), a.p(), a.n());
}

UnitCounts units_and_squares(std::uint32_t p, std::uint32_t n) {
  if (p == 2) {
    fail(ErrorKind::UnsupportedModulus, "square-unit count for p = 2 is not phi/2");
  }
  const std::uint64_t q = prime_power(p, n);
  const std::uint64_t phi = q - q / p;
  return {phi, phi / 2};
}

}  // namespace qrg
