#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace qrg {

/// Vectors of F_2^m packed into the low m bits (bit i is coordinate i+1).
using BinaryVector = std::uint32_t;

/// The even-weight code {v in F_2^m : v_1 + ... + v_m = 0}, the quotient of
/// the positive branch permutations by the branch-wise alternating groups.
struct EvenWeightCode {
  std::uint32_t length = 0;
  std::vector<BinaryVector> vectors;  // increasing order

  std::uint32_t dimension() const { return length == 0 ? 0 : length - 1; }
};

EvenWeightCode build_even_weight_code(std::uint32_t m);

/// Coordinate permutation: bit i of v moves to bit perm[i].
BinaryVector permute_coordinates(BinaryVector v, const std::vector<std::uint32_t>& perm);

/// A linear subspace held as its reduced row-echelon basis; equal subspaces
/// have equal bases.
struct BinarySubspace {
  std::vector<BinaryVector> basis;

  std::uint32_t dimension() const { return static_cast<std::uint32_t>(basis.size()); }
  bool contains(BinaryVector v) const;
  std::vector<BinaryVector> elements() const;
  bool operator==(const BinarySubspace&) const = default;
  auto operator<=>(const BinarySubspace&) const = default;
};

BinarySubspace span_of(const std::vector<BinaryVector>& vectors);

struct InvariantScan {
  std::vector<BinarySubspace> subspaces;  // sorted by dimension, then basis
  std::uint32_t code_dimension = 0;
  /// min of dim(L) - dim(K) over invariant K != L; empty when L = {0}.
  std::optional<std::uint32_t> min_rank;
};

/// Every Alt_m-invariant subspace of the code. Invariant subspaces are sums of
/// orbit spans, so the scan closes the set of orbit spans under sums.
InvariantScan alt_invariant_subgroup_scan(const EvenWeightCode& code);

}  // namespace qrg
