#include "qrg/character_table.hpp"

#include <algorithm>
#include <bitset>
#include <cmath>
#include <numbers>
#include <random>
#include <tuple>

#include <Eigen/Dense>

#include "qrg/error.hpp"
#include "qrg/modp.hpp"
#include "qrg/modring.hpp"

namespace qrg {

namespace {

using Vec = std::vector<std::uint64_t>;

/// Subspace of F_l^r held as reduced row-echelon rows plus pivot columns.
struct Subspace {
  std::vector<Vec> rows;
  std::vector<std::size_t> pivots;
};

Subspace echelon(std::vector<Vec> rows, std::uint64_t l) {
  Subspace s;
  if (rows.empty()) return s;
  const std::size_t r = rows.front().size();
  std::size_t next = 0;
  for (std::size_t col = 0; col < r && next < rows.size(); ++col) {
    std::size_t pivot = rows.size();
    for (std::size_t i = next; i < rows.size(); ++i) {
      if (rows[i][col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == rows.size()) continue;
    std::swap(rows[next], rows[pivot]);
    const std::uint64_t scale = modp::inv(rows[next][col], l);
    for (auto& x : rows[next]) x = modp::mul(x, scale, l);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == next || rows[i][col] == 0) continue;
      const std::uint64_t f = rows[i][col];
      for (std::size_t c = 0; c < r; ++c) rows[i][c] = (rows[i][c] + l - modp::mul(f, rows[next][c], l)) % l;
    }
    s.pivots.push_back(col);
    ++next;
  }
  rows.resize(next);
  s.rows = std::move(rows);
  return s;
}

/// Matrix of x on the subspace in the basis s.rows (x maps the subspace into itself).
modp::Matrix restrict_to(const modp::Matrix& x, const Subspace& s, std::uint64_t l) {
  const std::size_t d = s.rows.size();
  const std::size_t r = x.rows;
  modp::Matrix a{d, d, std::vector<std::uint64_t>(d * d, 0)};
  for (std::size_t b = 0; b < d; ++b) {
    for (std::size_t i = 0; i < d; ++i) {
      const std::size_t row = s.pivots[i];
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < r; ++k) acc = (acc + modp::mul(x.at(row, k), s.rows[b][k], l)) % l;
      a.at(i, b) = acc;
    }
  }
  return a;
}

/// Splits s into eigenspaces of x; returns {s} when x is scalar on it.
std::vector<Subspace> split_by(const modp::Matrix& x, const Subspace& s, std::uint64_t l,
                               std::mt19937_64& rng) {
  const std::size_t d = s.rows.size();
  modp::Matrix a = restrict_to(x, s, l);
  const auto roots = modp::distinct_roots(modp::charpoly(a, l), l, rng);
  if (roots.size() <= 1) return {s};
  std::vector<Subspace> parts;
  std::size_t total = 0;
  for (std::uint64_t lambda : roots) {
    modp::Matrix shifted = a;
    for (std::size_t i = 0; i < d; ++i) shifted.at(i, i) = (shifted.at(i, i) + l - lambda) % l;
    std::vector<Vec> vectors;
    for (const auto& c : modp::nullspace(shifted, l)) {
      Vec v(s.rows.front().size(), 0);
      for (std::size_t b = 0; b < d; ++b) {
        if (c[b] == 0) continue;
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = (v[k] + modp::mul(c[b], s.rows[b][k], l)) % l;
      }
      vectors.push_back(std::move(v));
    }
    total += vectors.size();
    parts.push_back(echelon(std::move(vectors), l));
  }
  if (total != d) fail(ErrorKind::Internal, "class matrix is not diagonalizable modulo the working prime");
  return parts;
}

std::uint64_t integer_sqrt(std::uint64_t x) {
  auto s = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
  while (s * s > x) --s;
  while ((s + 1) * (s + 1) <= x) ++s;
  return s;
}

}  // namespace

std::complex<double> CharacterTable::value(std::size_t character, std::size_t cls) const {
  const auto& m = multiplicities[character][cls];
  const double o = static_cast<double>(m.size());
  std::complex<double> sum = 0.0;
  for (std::size_t t = 0; t < m.size(); ++t) {
    if (m[t] == 0) continue;
    sum += static_cast<double>(m[t]) * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(t) / o);
  }
  return sum;
}

std::uint32_t CharacterTable::multiplicity_at_exponent(std::size_t character, std::size_t cls,
                                                       std::uint64_t t) const {
  const auto& m = multiplicities[character][cls];
  const std::uint64_t step = exponent / m.size();
  t %= exponent;
  if (t % step != 0) return 0;
  return m[t / step];
}

CharacterTable character_table(const GroupTable& g, const ClassData& classes, std::uint64_t seed) {
  const std::size_t r = classes.count();
  if (!classes.has_coefficients() && r > 1) {
    fail(ErrorKind::TooLarge, "class coefficients are only kept for at most " +
                                  std::to_string(kMaxClassesForCoefficients) + " classes");
  }
  const std::uint64_t order = g.order();
  const std::uint64_t e = classes.exponent;
  const std::uint64_t l = modp::working_prime(e, 4 * order);
  if (l == 0) fail(ErrorKind::PrimeSearchFailed, "no prime l = 1 (mod " + std::to_string(e) + ") below 2^31");

  CharacterTable table;
  table.group = g.descriptor();
  table.group_order = order;
  table.exponent = e;
  table.working_prime = l;
  table.class_sizes = classes.sizes;
  table.class_orders = classes.element_orders;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> coeff(0, l - 1);

  // (M_i)[j][k] = a_ijk; the central character vector is a common eigenvector.
  std::vector<modp::Matrix> class_matrices(r);
  for (std::size_t i = 0; i < r; ++i) {
    auto& m = class_matrices[i];
    m = {r, r, std::vector<std::uint64_t>(r * r, 0)};
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) m.at(j, k) = classes.coefficient(i, j, k) % l;
  }

  std::vector<Vec> identity_rows(r, Vec(r, 0));
  for (std::size_t i = 0; i < r; ++i) identity_rows[i][i] = 1;
  std::vector<Subspace> open = {echelon(identity_rows, l)};
  std::vector<Vec> eigenvectors;

  constexpr std::size_t kRandomRounds = 3;
  for (std::size_t round = 0; !open.empty(); ++round) {
    modp::Matrix x;
    if (round < kRandomRounds) {
      x = {r, r, std::vector<std::uint64_t>(r * r, 0)};
      for (std::size_t i = 1; i < r; ++i) {
        const std::uint64_t c = coeff(rng);
        for (std::size_t a = 0; a < r * r; ++a) x.data[a] = (x.data[a] + modp::mul(c, class_matrices[i].data[a], l)) % l;
      }
    } else if (round - kRandomRounds + 1 < r) {
      x = class_matrices[round - kRandomRounds + 1];
    } else {
      fail(ErrorKind::Internal, "class matrices did not separate the characters");
    }
    std::vector<Subspace> still_open;
    for (const auto& s : open) {
      for (auto& part : split_by(x, s, l, rng)) {
        if (part.rows.size() == 1) {
          eigenvectors.push_back(std::move(part.rows.front()));
        } else {
          still_open.push_back(std::move(part));
        }
      }
    }
    open = std::move(still_open);
  }

  // Power maps: class of rep^s for s < element order.
  std::vector<std::vector<std::uint32_t>> power_map(r);
  for (std::size_t k = 0; k < r; ++k) {
    const std::uint64_t o = classes.element_orders[k];
    Ordinal x = g.identity();
    for (std::uint64_t s = 0; s < o; ++s) {
      power_map[k].push_back(classes.class_of[x]);
      x = g.mul(x, classes.representatives[k]);
    }
  }

  const std::uint64_t zeta_e = modp::primitive_root_of_unity(e, l);
  const std::uint64_t bound = integer_sqrt(order);

  struct Character {
    std::uint64_t degree;
    std::vector<std::vector<std::uint32_t>> m;
    bool trivial;
  };
  std::vector<Character> characters;
  for (auto& w : eigenvectors) {
    if (w[0] == 0) fail(ErrorKind::Internal, "eigenvector with zero identity coordinate");
    const std::uint64_t s0 = modp::inv(w[0], l);
    for (auto& x : w) x = modp::mul(x, s0, l);

    // d^2 = |G| / sum_k w_k w_{k*} / |C_k|.
    std::uint64_t norm = 0;
    for (std::size_t k = 0; k < r; ++k) {
      const std::uint64_t term = modp::mul(w[k], w[classes.inverse_class[k]], l);
      norm = (norm + modp::mul(term, modp::inv(classes.sizes[k] % l, l), l)) % l;
    }
    const std::uint64_t d2 = modp::mul(order % l, modp::inv(norm, l), l);
    std::uint64_t degree = 0;
    for (std::uint64_t d = 1; d <= bound; ++d) {
      if (d * d % l == d2) {
        degree = d;
        break;
      }
    }
    if (degree == 0) fail(ErrorKind::Internal, "degree not recovered modulo the working prime");

    Vec chi(r);
    for (std::size_t k = 0; k < r; ++k) {
      chi[k] = modp::mul(modp::mul(w[k], degree, l), modp::inv(classes.sizes[k] % l, l), l);
    }

    Character c{degree, std::vector<std::vector<std::uint32_t>>(r), true};
    for (std::size_t k = 0; k < r; ++k) {
      const std::uint64_t o = classes.element_orders[k];
      const std::uint64_t zeta = pow_mod(zeta_e, e / o, l);
      const std::uint64_t zeta_inv = modp::inv(zeta, l);
      const std::uint64_t o_inv = modp::inv(o % l, l);
      std::uint64_t sum_m = 0;
      auto& m = c.m[k];
      m.resize(o);
      std::uint64_t step = 1;  // zeta^{-t}
      for (std::uint64_t t = 0; t < o; ++t) {
        std::uint64_t acc = 0;
        std::uint64_t root = 1;  // zeta^{-ts}
        for (std::uint64_t s = 0; s < o; ++s) {
          acc = (acc + modp::mul(chi[power_map[k][s]], root, l)) % l;
          root = modp::mul(root, step, l);
        }
        const std::uint64_t mt = modp::mul(acc, o_inv, l);
        if (mt > degree) fail(ErrorKind::Internal, "multiplicity lift out of range");
        m[t] = static_cast<std::uint32_t>(mt);
        sum_m += mt;
        step = modp::mul(step, zeta_inv, l);
      }
      if (sum_m != degree) fail(ErrorKind::Internal, "multiplicities do not sum to the degree");
      if (m[0] != degree) c.trivial = false;
    }
    characters.push_back(std::move(c));
  }

  std::sort(characters.begin(), characters.end(), [](const Character& a, const Character& b) {
    const bool a_rest = !a.trivial;
    const bool b_rest = !b.trivial;
    return std::tie(a_rest, a.degree, a.m) < std::tie(b_rest, b.degree, b.m);
  });

  std::uint64_t sum_squares = 0;
  for (const auto& c : characters) {
    sum_squares += c.degree * c.degree;
    table.degrees.push_back(c.degree);
    std::vector<std::uint32_t> kernel;
    for (std::size_t k = 0; k < r; ++k)
      if (c.m[k][0] == c.degree) kernel.push_back(static_cast<std::uint32_t>(k));
    table.kernels.push_back(std::move(kernel));
    table.multiplicities.push_back(c.m);
  }
  if (sum_squares != order || characters.size() != r || !characters.front().trivial) {
    fail(ErrorKind::Internal, "character table failed the sum-of-squares check");
  }
  return table;
}

std::uint64_t min_nontrivial_degree(const CharacterTable& table) {
  if (table.count() <= 1) fail(ErrorKind::TrivialGroup, "the trivial group has no nontrivial representation");
  return *std::min_element(table.degrees.begin() + 1, table.degrees.end());
}

FaithfulDegree min_faithful_degree(const CharacterTable& table, const ClassData& classes) {
  using Mask = std::bitset<kMaxClassesForCoefficients>;
  const std::size_t r = table.count();
  if (r <= 1) fail(ErrorKind::TrivialGroup, "the trivial group has no faithful nontrivial representation");
  if (r > kMaxClassesForCoefficients) fail(ErrorKind::TooLarge, "too many classes for the kernel search");
  if (classes.count() != r) fail(ErrorKind::GroupMismatch, "class data does not match the table");

  std::vector<std::size_t> order;
  std::vector<Mask> kernels(r);
  for (std::size_t c = 1; c < r; ++c) {
    order.push_back(c);
    for (auto k : table.kernels[c]) kernels[c].set(k);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return table.degrees[a] < table.degrees[b]; });

  Mask trivial;
  trivial.set(0);
  Mask all;
  for (std::size_t k = 0; k < r; ++k) all.set(k);

  FaithfulDegree result;
  for (std::size_t c : order) {
    if (kernels[c] == trivial) {
      result.single_irreducible = table.degrees[c];
      break;
    }
  }
  // The intersection of all kernels is trivial, so the full set is an incumbent.
  result.degree = 0;
  for (std::size_t c : order) result.degree += table.degrees[c];
  result.characters = order;
  std::sort(result.characters.begin(), result.characters.end());

  std::vector<std::size_t> chosen;
  auto search = [&](auto&& self, std::size_t start, std::uint64_t sum, const Mask& kernel) -> void {
    if (kernel == trivial) {
      if (sum < result.degree) {
        result.degree = sum;
        result.characters = chosen;
        std::sort(result.characters.begin(), result.characters.end());
      }
      return;
    }
    for (std::size_t i = start; i < order.size(); ++i) {
      const std::size_t c = order[i];
      if (sum + table.degrees[c] >= result.degree) break;
      const Mask next = kernel & kernels[c];
      if (next == kernel) continue;
      chosen.push_back(c);
      self(self, i + 1, sum + table.degrees[c], next);
      chosen.pop_back();
    }
  };
  search(search, 0, 0, all);
  return result;
}

std::vector<Ordinal> kernel_elements(const CharacterTable& table, const ClassData& classes,
                                     std::size_t character) {
  if (character >= table.count()) fail(ErrorKind::InvalidArgument, "character index out of range");
  std::vector<char> in_kernel(table.count(), 0);
  for (auto k : table.kernels[character]) in_kernel[k] = 1;
  std::vector<Ordinal> out;
  for (Ordinal x = 0; x < classes.class_of.size(); ++x)
    if (in_kernel[classes.class_of[x]]) out.push_back(x);
  return out;
}

std::vector<std::uint64_t> regular_representation_degrees(const GroupTable& g, const ClassData& classes,
                                                          std::uint64_t seed) {
  const std::size_t n = g.order();
  if (n > 200) fail(ErrorKind::TooLarge, "regular-representation oracle runs for |G| <= 200");
  const std::size_t r = classes.count();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<double> re(r), im(r);
  for (std::size_t i = 0; i < r; ++i) {
    re[i] = normal(rng);
    im[i] = normal(rng);
  }
  // sum_i c_i (R_i + R_i^T) + i c'_i (R_i - R_i^T), R_i the left action of the class sum.
  std::vector<std::complex<double>> entry(r);
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t j = classes.inverse_class[i];
    entry[i] = {re[i] + re[j], im[i] - im[j]};
  }
  Eigen::MatrixXcd h(n, n);
  for (Ordinal x = 0; x < n; ++x)
    for (Ordinal y = 0; y < n; ++y) h(x, y) = entry[classes.class_of[g.mul(x, g.inv(y))]];

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& values = solver.eigenvalues();
  const double scale = std::max(1.0, values.cwiseAbs().maxCoeff());
  std::vector<std::uint64_t> degrees;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (i == n || values[static_cast<Eigen::Index>(i)] - values[static_cast<Eigen::Index>(i - 1)] > 1e-6 * scale) {
      const std::uint64_t mult = i - start;
      const std::uint64_t d = integer_sqrt(mult);
      if (d * d != mult) fail(ErrorKind::Internal, "eigenvalue multiplicity is not a square");
      degrees.push_back(d);
      start = i;
    }
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

}  // namespace qrg
