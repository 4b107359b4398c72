#include "qrg/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "qrg/error.hpp"
#include "qrg/modring.hpp"

namespace qrg {

namespace {

void require_prime(std::uint32_t p) {
  if (!is_prime(p)) fail(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
}

void require_odd_prime(std::uint32_t p) {
  require_prime(p);
  if (p == 2) fail(ErrorKind::UnsupportedPrime, "the degree bounds assume p >= 3");
}

void require_rank(Family family, std::uint32_t k) {
  if (family == Family::SL2 && k != 2) fail(ErrorKind::InvalidArgument, "SL_2 takes k = 2");
  if (family == Family::SLk && k < 3) fail(ErrorKind::OutOfTheoremRange, "the SL_k row needs k >= 3");
  if (family == Family::Sp2k && k < 1) fail(ErrorKind::OutOfTheoremRange, "Sp_2k needs k >= 1");
}

// Integer powers here stay far below 2^63 for every parameter the library can
// enumerate; larger requests are rejected rather than wrapped.
std::int64_t checked_pow(std::int64_t base, std::uint64_t exp) {
  std::int64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (result > std::numeric_limits<std::int64_t>::max() / base) {
      fail(ErrorKind::TooLarge, "bound value exceeds 64-bit range");
    }
    result *= base;
  }
  return result;
}

double inverse_cube_root(const Rational& x) { return 1.0 / std::cbrt(to_double(x)); }

PfInterval interval(Rational lower, const Rational& cubed) {
  PfInterval out;
  out.lower = lower;
  out.upper = inverse_cube_root(cubed);
  out.effective_upper = std::min(out.upper, 0.5);
  return out;
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::SL2: return "sl2";
    case Family::SLk: return "slk";
    case Family::Sp2k: return "sp2k";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "sl2") return Family::SL2;
  if (name == "slk" || name == "sl") return Family::SLk;
  if (name == "sp2k" || name == "sp") return Family::Sp2k;
  fail(ErrorKind::UnsupportedFamily, "unknown family '" + std::string(name) + "'");
}

Rational h_bound(Family family, std::uint32_t k, std::uint32_t p) {
  require_odd_prime(p);
  require_rank(family, k);
  switch (family) {
    case Family::SL2: return Rational(p - 1, 2);
    case Family::SLk: return Rational(checked_pow(p, k - 1) - checked_pow(p, k - 2));
    case Family::Sp2k: return Rational((p - 1) * checked_pow(p, k - 1), 2);
  }
  fail(ErrorKind::Internal, "unreachable family");
}

Rational hf_bound(Family family, std::uint32_t k, std::uint32_t p, std::uint32_t n) {
  require_odd_prime(p);
  require_rank(family, k);
  if (n < 1) fail(ErrorKind::InvalidArgument, "n >= 1");
  const std::int64_t units = checked_pow(p, n) - checked_pow(p, n - 1);
  switch (family) {
    case Family::SL2: return Rational(units, 2);
    case Family::SLk: return Rational(units * checked_pow(p, std::uint64_t{k - 2} * n));
    case Family::Sp2k: return Rational(units * checked_pow(p, std::uint64_t{k - 1} * n), 2);
  }
  fail(ErrorKind::Internal, "unreachable family");
}

Rational bgc_bound(std::uint32_t p, std::uint32_t n) {
  require_odd_prime(p);
  if (n < 2) fail(ErrorKind::UnsupportedParameters, "the Bourgain-Gamburd bound needs n >= 2");
  return Rational(checked_pow(p, n - 2) * (std::int64_t{p} * p - 1), 2);
}

PfInterval pf_bounds_profinite(Family family, std::uint32_t k, std::uint32_t p) {
  require_odd_prime(p);
  switch (family) {
    case Family::SL2:
      if (k != 2) fail(ErrorKind::OutOfTheoremRange, "SL_2 takes k = 2");
      return interval(Rational(1, p + 1), Rational(p - 1, 2));
    case Family::SLk:
      if (k < 3) fail(ErrorKind::OutOfTheoremRange, "the SL_k bounds need k >= 3");
      return interval(Rational(p - 1, checked_pow(p, k) - 1), Rational(checked_pow(p, k) - checked_pow(p, k - 1)));
    case Family::Sp2k:
      if (k < 2) fail(ErrorKind::OutOfTheoremRange, "the Sp_2k bounds need k >= 2");
      return interval(Rational(p - 1, checked_pow(p, 2 * k) - 1), Rational((p - 1) * checked_pow(p, k - 1), 2));
  }
  fail(ErrorKind::Internal, "unreachable family");
}

PfInterval pf_bounds_tree(std::uint32_t k) {
  if (k < 6) fail(ErrorKind::OutOfTheoremRange, "the tree bounds need k >= 6");
  return interval(Rational(1, k + 1), Rational(k - 1));
}

Rational green_ruzsa_pf(const std::vector<std::uint32_t>& factors) {
  if (factors.empty()) fail(ErrorKind::InvalidArgument, "need at least one invariant factor");
  std::uint64_t n = 1;
  std::uint64_t m = 1;
  for (auto f : factors) {
    if (f == 0) fail(ErrorKind::InvalidArgument, "factors must be positive");
    n *= f;
    m = std::lcm(m, std::uint64_t{f});
  }
  // Primes dividing n are the primes dividing some factor.
  std::uint64_t smallest = 0;
  for (auto f : factors) {
    std::uint64_t rest = f;
    for (std::uint64_t q = 2; q * q <= rest; ++q) {
      if (rest % q != 0) continue;
      if (q % 3 == 2 && (smallest == 0 || q < smallest)) smallest = q;
      while (rest % q == 0) rest /= q;
    }
    if (rest > 1 && rest % 3 == 2 && (smallest == 0 || rest < smallest)) smallest = rest;
  }
  if (smallest != 0) return Rational(1, 3) + Rational(1, 3 * static_cast<std::int64_t>(smallest));
  if (n % 3 == 0) return Rational(1, 3);
  return Rational(1, 3) - Rational(1, 3 * static_cast<std::int64_t>(m));
}

Rational pf_padic(std::uint32_t p) {
  require_prime(p);
  if (p % 3 == 2) return Rational(1, 3) + Rational(1, 3 * std::int64_t{p});
  return Rational(1, 3);
}

Rational pf_power_series(std::uint32_t p) {
  require_prime(p);
  if (p % 3 == 2) return Rational(1, 3) + Rational(1, 3 * std::int64_t{p});
  if (p == 3) return Rational(1, 3);
  return Rational(1, 3) - Rational(1, 3 * std::int64_t{p});
}

Rational pf_torus(std::uint32_t k) {
  if (k < 1) fail(ErrorKind::InvalidArgument, "torus dimension must be positive");
  return Rational(1, 3);
}

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::GreaterEqual: return ">=";
    case Relation::LessEqual: return "<=";
    case Relation::Equal: return "=";
  }
  return "?";
}

BoundReport verify_bound(std::string quantity, Rational computed, Rational formula, Relation relation,
                         std::vector<std::string> refs) {
  BoundReport report{std::move(quantity), computed, formula, relation, false, std::move(refs)};
  switch (relation) {
    case Relation::GreaterEqual: report.pass = computed >= formula; break;
    case Relation::LessEqual: report.pass = computed <= formula; break;
    case Relation::Equal: report.pass = computed == formula; break;
  }
  return report;
}

}  // namespace qrg
