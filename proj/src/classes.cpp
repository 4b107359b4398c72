#include "qrg/classes.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace qrg {

ClassData conjugacy_classes(const GroupTable& g, bool with_coefficients) {
  constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();
  const std::size_t n = g.order();
  std::vector<std::uint32_t> raw(n, kUnassigned);
  std::vector<std::vector<Ordinal>> orbits;

  // Conjugation by the generators generates conjugation by the whole group.
  std::vector<std::pair<Ordinal, Ordinal>> conjugators;
  for (Ordinal s : g.generators()) conjugators.emplace_back(s, g.inv(s));

  for (Ordinal start = 0; start < n; ++start) {
    if (raw[start] != kUnassigned) continue;
    const auto id = static_cast<std::uint32_t>(orbits.size());
    std::vector<Ordinal> orbit = {start};
    raw[start] = id;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const auto& [s, s_inv] : conjugators) {
        const Ordinal c = g.mul(g.mul(s, orbit[head]), s_inv);
        if (raw[c] == kUnassigned) {
          raw[c] = id;
          orbit.push_back(c);
        }
      }
    }
    orbits.push_back(std::move(orbit));
  }

  for (auto& orbit : orbits) {
    std::sort(orbit.begin(), orbit.end(),
              [&](Ordinal a, Ordinal b) { return g.encoding(a) < g.encoding(b); });
  }
  std::vector<std::uint32_t> order(orbits.size());
  std::iota(order.begin(), order.end(), 0U);
  const std::uint32_t identity_orbit = raw[g.identity()];
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if ((a == identity_orbit) != (b == identity_orbit)) return a == identity_orbit;
    return g.encoding(orbits[a].front()) < g.encoding(orbits[b].front());
  });

  ClassData cd;
  const std::size_t r = orbits.size();
  std::vector<std::uint32_t> renumber(r);
  for (std::uint32_t i = 0; i < r; ++i) renumber[order[i]] = i;
  cd.class_of.resize(n);
  for (Ordinal a = 0; a < n; ++a) cd.class_of[a] = renumber[raw[a]];
  for (std::uint32_t i = 0; i < r; ++i) {
    const auto& orbit = orbits[order[i]];
    cd.sizes.push_back(orbit.size());
    cd.representatives.push_back(orbit.front());
  }
  cd.exponent = 1;
  for (std::uint32_t i = 0; i < r; ++i) {
    cd.inverse_class.push_back(cd.class_of[g.inv(cd.representatives[i])]);
    const std::uint64_t o = g.element_order(cd.representatives[i]);
    cd.element_orders.push_back(o);
    cd.exponent = std::lcm(cd.exponent, o);
  }

  if (with_coefficients && r <= kMaxClassesForCoefficients) {
    cd.coefficients.assign(r * r * r, 0);
    for (std::uint32_t k = 0; k < r; ++k) {
      const Ordinal z = cd.representatives[k];
      for (Ordinal x = 0; x < n; ++x) {
        const Ordinal y = g.mul(g.inv(x), z);
        ++cd.coefficients[(std::size_t{cd.class_of[x]} * r + cd.class_of[y]) * r + k];
      }
    }
  }
  return cd;
}

std::uint32_t power_class(const GroupTable& g, const ClassData& classes, std::uint32_t cls,
                          std::uint64_t e) {
  return classes.class_of[g.power(classes.representatives[cls], e)];
}

}  // namespace qrg
