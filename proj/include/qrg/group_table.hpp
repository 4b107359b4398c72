#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "qrg/matrix.hpp"

namespace qrg {

using Ordinal = std::uint32_t;

/// Canonical element encoding: row-major residues for matrices, image lists
/// for permutations, coordinates for abelian groups. One char16_t per entry.
using Encoding = std::u16string;
using EncodingView = std::u16string_view;

inline constexpr std::uint64_t kDefaultElementBudget = 100000;
inline constexpr std::size_t kCayleyCacheLimit = 5000;

struct MatrixAlgebra {
  std::uint32_t dim;
  std::uint32_t modulus;
};

/// Permutations of {0..degree-1}; (a*b)(x) = a(b(x)).
struct PermutationAlgebra {
  std::uint32_t degree;
};

/// Additive group Z/f_1 x ... x Z/f_r.
struct AbelianAlgebra {
  std::vector<std::uint32_t> factors;
};

using ElementAlgebra = std::variant<MatrixAlgebra, PermutationAlgebra, AbelianAlgebra>;

Encoding compose(const ElementAlgebra& algebra, EncodingView a, EncodingView b);
Encoding invert(const ElementAlgebra& algebra, EncodingView a);
Encoding identity_encoding(const ElementAlgebra& algebra);

Encoding encode(const ModMatrix& m);
ModMatrix decode_matrix(EncodingView e, std::uint32_t modulus);
Encoding encode_permutation(const std::vector<std::uint32_t>& images);

/// Family tag plus the parameters needed to rebuild the table.
struct GroupDescriptor {
  std::string family;  // sl, sp, alt, sym, tree, abelian, quaternion
  std::uint32_t k = 0;
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::uint32_t depth = 0;
  std::vector<std::uint32_t> factors;
  std::uint64_t order = 0;
  std::uint32_t generator_count = 0;

  bool operator==(const GroupDescriptor&) const = default;
};

std::string display_name(const GroupDescriptor& d);

/// An enumerated finite group. Ordinals are assigned in breadth-first
/// discovery order from the identity (ordinal 0). Immutable after
/// construction apart from the lazily built Cayley cache, which is guarded.
class GroupTable {
 public:
  /// Breadth-first closure of `generators`; TooLarge once more than
  /// `element_budget` elements are discovered.
  static GroupTable close(ElementAlgebra algebra, const std::vector<Encoding>& generators,
                          GroupDescriptor descriptor, std::uint64_t element_budget);

  GroupTable(GroupTable&&) noexcept;
  GroupTable& operator=(GroupTable&&) noexcept;
  ~GroupTable();

  std::size_t order() const;
  Ordinal identity() const { return 0; }
  Ordinal mul(Ordinal a, Ordinal b) const;
  Ordinal inv(Ordinal a) const;
  Ordinal power(Ordinal a, std::uint64_t exponent) const;
  std::uint64_t element_order(Ordinal a) const;

  EncodingView encoding(Ordinal a) const;
  std::optional<Ordinal> find(EncodingView e) const;
  Ordinal ordinal(EncodingView e) const;

  const std::vector<Ordinal>& generators() const;
  const GroupDescriptor& descriptor() const;
  const ElementAlgebra& algebra() const;

  /// Builds the full multiplication table when order() <= kCayleyCacheLimit;
  /// later mul() calls are then table lookups. No-op for larger groups.
  void ensure_cayley_table() const;
  bool has_cayley_table() const;

 private:
  struct Impl;
  explicit GroupTable(std::unique_ptr<Impl> impl);
  std::unique_ptr<Impl> impl_;
};

}  // namespace qrg
