#include "qrg/groups.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "qrg/error.hpp"
#include "qrg/modring.hpp"

namespace qrg {

namespace {

using u128 = unsigned __int128;
constexpr u128 kCap = u128{1} << 63;

struct Checked {
  u128 value = 1;
  bool overflow = false;

  void times(u128 f) {
    if (overflow) return;
    if (f != 0 && value > kCap / f) {
      overflow = true;
      return;
    }
    value *= f;
  }
  std::optional<std::uint64_t> get() const {
    if (overflow || value > kCap) return std::nullopt;
    return static_cast<std::uint64_t>(value);
  }
};

void require_budget(const std::optional<std::uint64_t>& expected, std::uint64_t budget,
                    const std::string& name) {
  if (!expected || *expected > budget) {
    fail(ErrorKind::TooLarge, name + " has order " +
                                  (expected ? std::to_string(*expected) : std::string("> 2^63")) +
                                  ", above the element budget of " + std::to_string(budget));
  }
}

std::uint32_t checked_modulus(std::uint32_t p, std::uint32_t n) {
  const std::uint64_t q = prime_power(p, n);
  if (q > 0xFFFF) fail(ErrorKind::TooLarge, "modulus above 65535 is outside the table encoding");
  return static_cast<std::uint32_t>(q);
}

std::vector<std::uint32_t> identity_images(std::uint32_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0U);
  return images;
}

/// Cycle (c_0 c_1 ... c_{r-1}) as an image list.
std::vector<std::uint32_t> cycle(std::uint32_t degree, std::initializer_list<std::uint32_t> points) {
  std::vector<std::uint32_t> images = identity_images(degree);
  const std::vector<std::uint32_t> pts(points);
  for (std::size_t i = 0; i < pts.size(); ++i) images[pts[i]] = pts[(i + 1) % pts.size()];
  return images;
}

std::optional<std::uint64_t> factorial(std::uint32_t m) {
  Checked c;
  for (std::uint32_t i = 2; i <= m; ++i) c.times(i);
  return c.get();
}

}  // namespace

std::optional<std::uint64_t> sl_order(std::uint32_t k, std::uint32_t p, std::uint32_t n) {
  Checked c;
  for (std::uint32_t i = 0; i < (n - 1) * (k * k - 1); ++i) c.times(p);
  for (std::uint32_t i = 0; i < k * (k - 1) / 2; ++i) c.times(p);
  for (std::uint32_t i = 2; i <= k; ++i) {
    u128 pi = 1;
    for (std::uint32_t j = 0; j < i; ++j) pi *= p;
    c.times(pi - 1);
  }
  return c.get();
}

std::optional<std::uint64_t> sp_order(std::uint32_t k, std::uint32_t p, std::uint32_t n) {
  Checked c;
  for (std::uint32_t i = 0; i < (n - 1) * k * (2 * k + 1); ++i) c.times(p);
  for (std::uint32_t i = 0; i < k * k; ++i) c.times(p);
  for (std::uint32_t i = 1; i <= k; ++i) {
    u128 pi = 1;
    for (std::uint32_t j = 0; j < 2 * i; ++j) pi *= p;
    c.times(pi - 1);
  }
  return c.get();
}

std::optional<std::uint64_t> tree_order(std::uint32_t k, std::uint32_t depth) {
  if (depth == 0 || depth > 2) return std::nullopt;
  const auto top = factorial(k + 1);
  if (!top) return std::nullopt;
  Checked c;
  c.times(*top / 2);
  if (depth == 2) {
    const auto base = factorial(k);
    if (!base) return std::nullopt;
    for (std::uint32_t i = 0; i <= k; ++i) c.times(*base);
    if (c.overflow) return std::nullopt;
    c.value /= 2;
  }
  return c.get();
}

GroupTable build_sl(std::uint32_t k, std::uint32_t p, std::uint32_t n, std::uint64_t element_budget) {
  if (k < 2) fail(ErrorKind::InvalidArgument, "SL_k needs k >= 2");
  const std::uint32_t q = checked_modulus(p, n);
  GroupDescriptor d{.family = "sl", .k = k, .p = p, .n = n};
  require_budget(sl_order(k, p, n), element_budget, display_name(d));
  std::vector<Encoding> gens;
  for (std::uint32_t i = 1; i <= k; ++i)
    for (std::uint32_t j = 1; j <= k; ++j)
      if (i != j) gens.push_back(encode(elementary(k, q, i, j, 1)));
  return GroupTable::close(MatrixAlgebra{k, q}, gens, std::move(d), element_budget);
}

GroupTable build_sp(std::uint32_t k, std::uint32_t p, std::uint32_t n, std::uint64_t element_budget) {
  if (k < 1) fail(ErrorKind::InvalidArgument, "Sp_2k needs k >= 1");
  const std::uint32_t q = checked_modulus(p, n);
  GroupDescriptor d{.family = "sp", .k = k, .p = p, .n = n};
  require_budget(sp_order(k, p, n), element_budget, display_name(d));
  std::vector<Encoding> gens;
  for (std::uint32_t i = 1; i <= k; ++i) {
    for (std::uint32_t j = i; j <= k; ++j) {
      const ModMatrix u = g_matrix(k, q, i, j);
      gens.push_back(encode(u));
      gens.push_back(encode(transpose(u)));
    }
  }
  return GroupTable::close(MatrixAlgebra{2 * k, q}, gens, std::move(d), element_budget);
}

GroupTable build_alt(std::uint32_t m, std::uint64_t element_budget) {
  if (m < 1) fail(ErrorKind::InvalidArgument, "Alt_m needs m >= 1");
  GroupDescriptor d{.family = "alt", .k = m};
  const auto full = factorial(m);
  require_budget(full ? std::optional<std::uint64_t>(std::max<std::uint64_t>(*full / 2, 1)) : std::nullopt,
                 element_budget, display_name(d));
  std::vector<Encoding> gens;
  for (std::uint32_t i = 2; i < m; ++i) gens.push_back(encode_permutation(cycle(m, {0, 1, i})));
  return GroupTable::close(PermutationAlgebra{m}, gens, std::move(d), element_budget);
}

GroupTable build_sym(std::uint32_t m, std::uint64_t element_budget) {
  if (m < 1) fail(ErrorKind::InvalidArgument, "Sym_m needs m >= 1");
  GroupDescriptor d{.family = "sym", .k = m};
  require_budget(factorial(m), element_budget, display_name(d));
  std::vector<Encoding> gens;
  if (m >= 2) {
    gens.push_back(encode_permutation(cycle(m, {0, 1})));
    std::vector<std::uint32_t> rotation(m);
    for (std::uint32_t i = 0; i < m; ++i) rotation[i] = (i + 1) % m;
    gens.push_back(encode_permutation(rotation));
  }
  return GroupTable::close(PermutationAlgebra{m}, gens, std::move(d), element_budget);
}

GroupTable build_tree_level(std::uint32_t k, std::uint32_t depth, std::uint64_t element_budget) {
  if (k < 2) fail(ErrorKind::InvalidArgument, "tree quotients need k >= 2");
  if (depth < 1 || depth > 2) {
    fail(ErrorKind::UnsupportedParameters, "only depths 1 and 2 are enumerated");
  }
  GroupDescriptor d{.family = "tree", .k = k, .depth = depth};
  require_budget(tree_order(k, depth), element_budget, display_name(d));
  const std::uint32_t top = k + 1;
  std::vector<Encoding> gens;
  if (depth == 1) {
    for (std::uint32_t i = 2; i < top; ++i) gens.push_back(encode_permutation(cycle(top, {0, 1, i})));
    return GroupTable::close(PermutationAlgebra{top}, gens, std::move(d), element_budget);
  }

  const std::uint32_t degree = top * k;
  // Even permutations of the depth-1 vertices, lifted with identity labels.
  for (std::uint32_t i = 2; i < top; ++i) {
    const auto pi = cycle(top, {0, 1, i});
    std::vector<std::uint32_t> images(degree);
    for (std::uint32_t v = 0; v < top; ++v)
      for (std::uint32_t c = 0; c < k; ++c) images[v * k + c] = pi[v] * k + c;
    gens.push_back(encode_permutation(images));
  }
  // Transpositions in two branches at once: sign product +1.
  {
    std::vector<std::uint32_t> images = identity_images(degree);
    std::swap(images[0], images[1]);
    std::swap(images[k], images[k + 1]);
    gens.push_back(encode_permutation(images));
  }
  // Alt_k inside the first branch.
  for (std::uint32_t c = 2; c < k; ++c) gens.push_back(encode_permutation(cycle(degree, {0, 1, c})));
  return GroupTable::close(PermutationAlgebra{degree}, gens, std::move(d), element_budget);
}

GroupTable build_abelian(const std::vector<std::uint32_t>& factors, std::uint64_t element_budget) {
  Checked c;
  for (auto f : factors) {
    if (f == 0 || f > 0xFFFF) fail(ErrorKind::InvalidArgument, "abelian factors must lie in [1, 65535]");
    c.times(f);
  }
  GroupDescriptor d{.family = "abelian", .factors = factors};
  require_budget(c.get(), element_budget, display_name(d));
  std::vector<Encoding> gens;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    Encoding e(factors.size(), u'\0');
    e[i] = static_cast<char16_t>(1 % factors[i]);
    gens.push_back(e);
  }
  return GroupTable::close(AbelianAlgebra{factors}, gens, std::move(d), element_budget);
}

GroupTable build_quaternion() {
  // Left-regular action on {1, -1, i, -i, j, -j, k, -k} labelled 0..7.
  const std::vector<std::uint32_t> left_i = {2, 3, 1, 0, 6, 7, 5, 4};
  const std::vector<std::uint32_t> left_j = {4, 5, 7, 6, 1, 0, 2, 3};
  GroupDescriptor d{.family = "quaternion"};
  return GroupTable::close(PermutationAlgebra{8}, {encode_permutation(left_i), encode_permutation(left_j)},
                           std::move(d), kDefaultElementBudget);
}

GroupTable rebuild(const GroupDescriptor& d, std::uint64_t element_budget) {
  if (d.family == "sl") return build_sl(d.k, d.p, d.n, element_budget);
  if (d.family == "sp") return build_sp(d.k, d.p, d.n, element_budget);
  if (d.family == "alt") return build_alt(d.k, element_budget);
  if (d.family == "sym") return build_sym(d.k, element_budget);
  if (d.family == "tree") return build_tree_level(d.k, d.depth, element_budget);
  if (d.family == "abelian") return build_abelian(d.factors, element_budget);
  if (d.family == "quaternion") return build_quaternion();
  fail(ErrorKind::UnsupportedFamily, "unknown group family '" + d.family + "'");
}

std::vector<std::vector<std::uint32_t>> abelian_groups_of_order(std::uint32_t n) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "group order must be positive");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> prime_powers;
  std::uint32_t rest = n;
  for (std::uint32_t q = 2; q * q <= rest; ++q) {
    std::uint32_t a = 0;
    while (rest % q == 0) {
      rest /= q;
      ++a;
    }
    if (a > 0) prime_powers.emplace_back(q, a);
  }
  if (rest > 1) prime_powers.emplace_back(rest, 1);

  // Partitions of a into non-increasing parts.
  std::function<void(std::uint32_t, std::uint32_t, std::vector<std::uint32_t>&,
                     std::vector<std::vector<std::uint32_t>>&)>
      partitions = [&](std::uint32_t remaining, std::uint32_t max_part, std::vector<std::uint32_t>& cur,
                       std::vector<std::vector<std::uint32_t>>& out) {
        if (remaining == 0) {
          out.push_back(cur);
          return;
        }
        for (std::uint32_t part = std::min(remaining, max_part); part >= 1; --part) {
          cur.push_back(part);
          partitions(remaining - part, part, cur, out);
          cur.pop_back();
        }
      };

  std::vector<std::vector<std::uint32_t>> result = {{}};
  for (const auto& [q, a] : prime_powers) {
    std::vector<std::vector<std::uint32_t>> parts;
    std::vector<std::uint32_t> cur;
    partitions(a, a, cur, parts);
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& factors : result) {
      for (const auto& part : parts) {
        // Invariant factors listed largest first while combining.
        std::vector<std::uint32_t> combined = factors;
        combined.resize(std::max(combined.size(), part.size()), 1);
        for (std::size_t i = 0; i < part.size(); ++i) {
          std::uint32_t power_q = 1;
          for (std::uint32_t e = 0; e < part[i]; ++e) power_q *= q;
          combined[i] *= power_q;
        }
        next.push_back(std::move(combined));
      }
    }
    result = std::move(next);
  }
  for (auto& factors : result) std::reverse(factors.begin(), factors.end());
  if (n == 1) result = {{}};
  std::sort(result.begin(), result.end());
  return result;
}

Subgroup stabilizer_subgroup(const GroupTable& g, StabilizerAction action) {
  const auto& d = g.descriptor();
  if (d.family != "sl" && d.family != "sp") {
    fail(ErrorKind::UnsupportedFamily, "point stabilizers are defined for SL and Sp tables only");
  }
  const auto& algebra = std::get<MatrixAlgebra>(g.algebra());
  const std::uint32_t dim = algebra.dim;
  // SL_k fixes the line through e_k, Sp_2k the line through e_1.
  const std::uint32_t column = d.family == "sl" ? dim - 1 : 0;
  Subgroup h;
  for (Ordinal a = 0; a < g.order(); ++a) {
    const EncodingView e = g.encoding(a);
    bool keeps = true;
    for (std::uint32_t row = 0; row < dim && keeps; ++row) {
      const std::uint32_t entry = e[row * dim + column];
      if (row == column) {
        if (action == StabilizerAction::Natural) keeps = entry == 1;
      } else if (action == StabilizerAction::Natural) {
        keeps = entry == 0;
      } else {
        keeps = entry % d.p == 0;
      }
    }
    if (keeps) h.members.push_back(a);
  }
  h.index = g.order() / h.members.size();
  return h;
}

std::vector<std::uint32_t> permutation_images(const GroupTable& g, Ordinal a) {
  if (!std::holds_alternative<PermutationAlgebra>(g.algebra())) {
    fail(ErrorKind::UnsupportedFamily, display_name(g.descriptor()) + " is not a permutation family");
  }
  const EncodingView e = g.encoding(a);
  return {e.begin(), e.end()};
}

Subgroup point_stabilizer(const GroupTable& g, std::uint32_t point) {
  const auto& d = g.descriptor();
  if (!std::holds_alternative<PermutationAlgebra>(g.algebra())) {
    fail(ErrorKind::UnsupportedFamily, display_name(d) + " is not a permutation family");
  }
  const bool blocks = d.family == "tree" && d.depth == 2;
  const std::uint32_t points = blocks ? d.k + 1 : std::get<PermutationAlgebra>(g.algebra()).degree;
  if (point >= points) fail(ErrorKind::InvalidArgument, "point out of range");
  Subgroup h;
  for (Ordinal a = 0; a < g.order(); ++a) {
    const EncodingView e = g.encoding(a);
    const bool fixed = blocks ? e[point * d.k] / d.k == point : e[point] == point;
    if (fixed) h.members.push_back(a);
  }
  h.index = g.order() / h.members.size();
  return h;
}

bool is_subgroup(const GroupTable& g, const std::vector<Ordinal>& members) {
  std::vector<char> in(g.order(), 0);
  for (auto m : members) in.at(m) = 1;
  if (!in[g.identity()]) return false;
  for (auto a : members)
    for (auto b : members)
      if (!in[g.mul(a, b)]) return false;
  return true;
}

}  // namespace qrg
