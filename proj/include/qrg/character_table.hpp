#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "qrg/classes.hpp"
#include "qrg/group_table.hpp"

namespace qrg {

/// Exact irreducible characters. The value of character c on class j is
///   chi_c(g_j) = sum_t m[c][j][t] * zeta_o^t,   o = element order of g_j,
/// with zeta_o = exp(2 pi i / o). Since zeta_o = zeta_e^{e/o}, the same vector
/// read at e-indices t*e/o gives the expansion over e-th roots of unity.
struct CharacterTable {
  GroupDescriptor group;
  std::uint64_t group_order = 0;
  std::uint64_t exponent = 1;
  std::uint64_t working_prime = 0;
  std::vector<std::uint64_t> class_sizes;
  std::vector<std::uint64_t> class_orders;
  std::vector<std::uint64_t> degrees;  // character 0 is the trivial one
  std::vector<std::vector<std::vector<std::uint32_t>>> multiplicities;
  std::vector<std::vector<std::uint32_t>> kernels;  // class indices, ascending

  std::size_t count() const { return degrees.size(); }
  std::complex<double> value(std::size_t character, std::size_t cls) const;
  /// Multiplicity of zeta_e^t in chi(g_cls).
  std::uint32_t multiplicity_at_exponent(std::size_t character, std::size_t cls,
                                         std::uint64_t t) const;
};

/// Dixon's method over F_l with l = 1 (mod exponent) and l > 2 sqrt|G|. Needs
/// the class-multiplication coefficients.
CharacterTable character_table(const GroupTable& g, const ClassData& classes,
                               std::uint64_t seed = 42);

/// m(G). TrivialGroup when G = {1}.
std::uint64_t min_nontrivial_degree(const CharacterTable& table);

struct FaithfulDegree {
  std::uint64_t degree = 0;  // min total degree of irreducibles with trivial kernel intersection
  std::vector<std::size_t> characters;  // a set attaining it
  std::optional<std::uint64_t> single_irreducible;  // min degree of a faithful irreducible
};

/// m_f(G), searched over subsets of nontrivial irreducibles by branch and
/// bound. TrivialGroup when G = {1}.
FaithfulDegree min_faithful_degree(const CharacterTable& table, const ClassData& classes);

/// Ordinals in the kernel of a character, ascending.
std::vector<Ordinal> kernel_elements(const CharacterTable& table, const ClassData& classes,
                                     std::size_t character);

/// Floating-point cross-check: eigenvalue multiplicities of a random Hermitian
/// central element acting on the regular representation are the squared
/// degrees. Returns the degrees in ascending order. TooLarge above |G| = 200.
std::vector<std::uint64_t> regular_representation_degrees(const GroupTable& g,
                                                          const ClassData& classes,
                                                          std::uint64_t seed = 42);

}  // namespace qrg
