#pragma once

#include <cstdint>
#include <vector>

#include "qrg/group_table.hpp"

namespace qrg {

/// Class-multiplication coefficients are stored densely (r^3 entries), so
/// they are only computed up to this many classes.
inline constexpr std::size_t kMaxClassesForCoefficients = 200;

/// Conjugacy-class structure of a GroupTable. Class 0 is the identity; the
/// remaining classes are ordered by the encoding of their representative,
/// which is the smallest encoding in the class.
struct ClassData {
  std::vector<std::uint32_t> class_of;  // per ordinal
  std::vector<std::uint64_t> sizes;
  std::vector<Ordinal> representatives;
  std::vector<std::uint32_t> inverse_class;
  std::vector<std::uint64_t> element_orders;  // order of the representative
  std::uint64_t exponent = 1;
  /// a[i][j][k] = #{(x, y) : x in C_i, y in C_j, x*y = representative of C_k}.
  std::vector<std::uint32_t> coefficients;

  std::size_t count() const { return sizes.size(); }
  bool has_coefficients() const { return !coefficients.empty(); }
  std::uint32_t coefficient(std::size_t i, std::size_t j, std::size_t k) const {
    const std::size_t r = count();
    return coefficients[(i * r + j) * r + k];
  }
};

ClassData conjugacy_classes(const GroupTable& g, bool with_coefficients = true);

/// Class containing rep(cls)^e.
std::uint32_t power_class(const GroupTable& g, const ClassData& classes, std::uint32_t cls,
                          std::uint64_t e);

}  // namespace qrg
