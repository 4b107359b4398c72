#pragma once

#include <concepts>
#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace boost {

// Boost 1.74's mixed rational/integer equality recurses forever under C++20's
// reversed-operator rules. Compare against Rational(i) instead.
template <std::integral T>
bool operator==(const rational<std::int64_t>&, const T&) = delete;

}  // namespace boost

namespace qrg {

using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

/// Integer power of a non-negative base; overflow is the caller's problem at
/// the desk-scale parameters used here.
inline std::int64_t ipow(std::int64_t base, unsigned exp) {
  std::int64_t result = 1;
  for (unsigned i = 0; i < exp; ++i) result *= base;
  return result;
}

}  // namespace qrg
