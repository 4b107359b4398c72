#include "qrg/code.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "qrg/error.hpp"

namespace qrg {

EvenWeightCode build_even_weight_code(std::uint32_t m) {
  if (m > 16) fail(ErrorKind::TooLarge, "even-weight code is enumerated for m <= 16");
  EvenWeightCode code{m, {}};
  for (BinaryVector v = 0; v < (BinaryVector{1} << m); ++v) {
    if (std::popcount(v) % 2 == 0) code.vectors.push_back(v);
  }
  return code;
}

BinaryVector permute_coordinates(BinaryVector v, const std::vector<std::uint32_t>& perm) {
  BinaryVector out = 0;
  for (std::uint32_t i = 0; i < perm.size(); ++i) {
    if (v >> i & 1U) out |= BinaryVector{1} << perm[i];
  }
  return out;
}

bool BinarySubspace::contains(BinaryVector v) const {
  for (BinaryVector b : basis) {
    const BinaryVector lead = std::bit_floor(b);
    if (v & lead) v ^= b;
  }
  return v == 0;
}

std::vector<BinaryVector> BinarySubspace::elements() const {
  std::vector<BinaryVector> out = {0};
  for (BinaryVector b : basis) {
    const std::size_t size = out.size();
    for (std::size_t i = 0; i < size; ++i) out.push_back(out[i] ^ b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

BinarySubspace span_of(const std::vector<BinaryVector>& vectors) {
  std::vector<BinaryVector> rows;
  for (BinaryVector v : vectors) {
    for (BinaryVector r : rows) v = std::min(v, v ^ r);
    if (v == 0) continue;
    // Keep the basis fully reduced: clear the new leading bit elsewhere.
    const BinaryVector lead = std::bit_floor(v);
    for (BinaryVector& r : rows)
      if (r & lead) r ^= v;
    rows.push_back(v);
    std::sort(rows.rbegin(), rows.rend());
  }
  return BinarySubspace{rows};
}

InvariantScan alt_invariant_subgroup_scan(const EvenWeightCode& code) {
  const std::uint32_t m = code.length;
  if (m > 12) fail(ErrorKind::TooLarge, "invariant-subspace scan runs for m <= 12");

  // 3-cycles (1 2 i) generate Alt_m.
  std::vector<std::vector<std::uint32_t>> generators;
  for (std::uint32_t i = 2; i < m; ++i) {
    std::vector<std::uint32_t> perm(m);
    for (std::uint32_t x = 0; x < m; ++x) perm[x] = x;
    perm[0] = 1;
    perm[1] = i;
    perm[i] = 0;
    generators.push_back(perm);
  }

  std::set<BinarySubspace> cyclic;
  std::set<BinaryVector> seen;
  for (BinaryVector v : code.vectors) {
    if (seen.count(v)) continue;
    std::vector<BinaryVector> orbit = {v};
    seen.insert(v);
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const auto& g : generators) {
        const BinaryVector w = permute_coordinates(orbit[head], g);
        if (seen.insert(w).second) orbit.push_back(w);
      }
    }
    cyclic.insert(span_of(orbit));
  }

  std::set<BinarySubspace> all = cyclic;
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<BinarySubspace> current(all.begin(), all.end());
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        std::vector<BinaryVector> joined = current[i].basis;
        joined.insert(joined.end(), current[j].basis.begin(), current[j].basis.end());
        if (all.insert(span_of(joined)).second) grew = true;
      }
    }
  }

  InvariantScan scan;
  scan.subspaces.assign(all.begin(), all.end());
  std::sort(scan.subspaces.begin(), scan.subspaces.end(), [](const auto& a, const auto& b) {
    if (a.dimension() != b.dimension()) return a.dimension() < b.dimension();
    return a.basis < b.basis;
  });
  scan.code_dimension = code.dimension();
  for (const auto& k : scan.subspaces) {
    if (k.dimension() == scan.code_dimension) continue;
    const std::uint32_t rank = scan.code_dimension - k.dimension();
    if (!scan.min_rank || rank < *scan.min_rank) scan.min_rank = rank;
  }
  return scan;
}

}  // namespace qrg
