#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qrg/bounds.hpp"
#include "qrg/group_table.hpp"
#include "qrg/rational.hpp"

namespace qrg {

inline constexpr std::uint64_t kDefaultNodeBudget = 10000000;
inline constexpr std::size_t kMaxExactSearchOrder = 256;

struct SearchResult {
  std::vector<Ordinal> witness;  // sorted
  std::uint64_t size = 0;
  Rational density;
  bool optimal = false;
  bool budget_exceeded = false;
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

/// True iff xy is outside A for all x, y in A (x = y included).
bool verify_product_free(const GroupTable& g, const std::vector<Ordinal>& a);

/// Maximum product-free subset by branch and bound. Orders up to 256. When the
/// node budget runs out the best set found so far comes back with
/// optimal = false and budget_exceeded = true.
SearchResult exact_max_product_free(const GroupTable& g, std::uint64_t node_budget = kDefaultNodeBudget);

/// A left coset xH other than H. NotProper when H = G; InvalidArgument when
/// `subgroup` is not a subgroup.
SearchResult coset_product_free(const GroupTable& g, const std::vector<Ordinal>& subgroup);

/// A maximal product-free set grown from `initial` (which must be
/// product-free). Without a seed elements are tried in ordinal order,
/// otherwise in a seeded random order.
SearchResult greedy_product_free(const GroupTable& g, std::optional<std::uint64_t> seed = std::nullopt,
                                 const std::vector<Ordinal>& initial = {});

/// Exact search density against the Green-Ruzsa value.
BoundReport formula_vs_search(const std::vector<std::uint32_t>& factors,
                              std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace qrg
