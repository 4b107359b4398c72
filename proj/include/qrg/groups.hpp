#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qrg/group_table.hpp"

namespace qrg {

/// Order formulas; nullopt when the value overflows 64 bits.
std::optional<std::uint64_t> sl_order(std::uint32_t k, std::uint32_t p, std::uint32_t n);
std::optional<std::uint64_t> sp_order(std::uint32_t k, std::uint32_t p, std::uint32_t n);
/// ((k+1)!/2) * (k!)^{k+1} / 2 for j = 2, (k+1)!/2 for j = 1.
std::optional<std::uint64_t> tree_order(std::uint32_t k, std::uint32_t depth);

/// SL_k(Z/p^n) as the closure of the elementary matrices I + E_ij.
GroupTable build_sl(std::uint32_t k, std::uint32_t p, std::uint32_t n,
                    std::uint64_t element_budget = kDefaultElementBudget);

/// Sp_2k(Z/p^n) as the closure of U_{E_ij} and their transposes.
GroupTable build_sp(std::uint32_t k, std::uint32_t p, std::uint32_t n,
                    std::uint64_t element_budget = kDefaultElementBudget);

GroupTable build_alt(std::uint32_t m, std::uint64_t element_budget = kDefaultElementBudget);
GroupTable build_sym(std::uint32_t m, std::uint64_t element_budget = kDefaultElementBudget);

/// Quotient F_j of the positive automorphisms of the (k+1)-regular rooted tree
/// acting on the first j levels. F_1 is Alt_{k+1} on the depth-1 vertices;
/// F_2 acts on the (k+1)k depth-2 vertices, vertex (i, c) stored as i*k + c.
GroupTable build_tree_level(std::uint32_t k, std::uint32_t depth,
                            std::uint64_t element_budget = kDefaultElementBudget);

GroupTable build_abelian(const std::vector<std::uint32_t>& factors,
                         std::uint64_t element_budget = kDefaultElementBudget);
inline GroupTable build_cyclic(std::uint32_t n) { return build_abelian({n}); }
GroupTable build_quaternion();

/// Rebuilds a table from its serialized descriptor.
GroupTable rebuild(const GroupDescriptor& descriptor,
                   std::uint64_t element_budget = kDefaultElementBudget);

/// Invariant-factor lists (each dividing the next) of every abelian group of
/// order n.
std::vector<std::vector<std::uint32_t>> abelian_groups_of_order(std::uint32_t n);

enum class StabilizerAction { Projective, Natural };

struct Subgroup {
  std::vector<Ordinal> members;  // sorted
  std::uint64_t index = 0;
};

/// Stabilizer of a point for SL/Sp tables: the line (or vector) spanned by
/// e_k for SL_k and by e_1 for Sp_2k, read modulo p.
Subgroup stabilizer_subgroup(const GroupTable& g, StabilizerAction action);

/// Stabilizer of a point (zero-based) in a permutation family. For tree
/// tables of depth 2 the point is a depth-1 vertex.
Subgroup point_stabilizer(const GroupTable& g, std::uint32_t point);

/// True when `members` is closed under multiplication and contains the identity.
bool is_subgroup(const GroupTable& g, const std::vector<Ordinal>& members);

/// Image list of an element of a permutation family.
std::vector<std::uint32_t> permutation_images(const GroupTable& g, Ordinal a);

}  // namespace qrg
