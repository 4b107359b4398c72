#include "qrg/mixing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>

#include "qrg/error.hpp"

namespace qrg {

namespace {

void same_group(const GroupFunction& a, const GroupFunction& b) {
  if (a.group != b.group || a.values.size() != b.values.size()) {
    fail(ErrorKind::GroupMismatch, "functions live on different groups");
  }
}

std::vector<char> membership(const GroupTable& g, const std::vector<Ordinal>& set) {
  std::vector<char> in(g.order(), 0);
  for (Ordinal x : set) {
    if (x >= g.order()) fail(ErrorKind::InvalidArgument, "ordinal out of range");
    in[x] = 1;
  }
  return in;
}

std::uint64_t distinct_count(const GroupTable& g, const std::vector<Ordinal>& set) {
  const auto in = membership(g, set);
  return static_cast<std::uint64_t>(std::count(in.begin(), in.end(), 1));
}

std::vector<Ordinal> members(const std::vector<char>& in) {
  std::vector<Ordinal> out;
  for (Ordinal x = 0; x < in.size(); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

std::vector<char> product_set(const GroupTable& g, const std::vector<Ordinal>& a, const std::vector<Ordinal>& b) {
  std::vector<char> in(g.order(), 0);
  for (Ordinal x : a)
    for (Ordinal y : b) in[g.mul(x, y)] = 1;
  return in;
}

}  // namespace

std::complex<double> GroupFunction::mean() const {
  std::complex<double> sum = 0.0;
  for (const auto& v : values) sum += v;
  return values.empty() ? sum : sum / static_cast<double>(values.size());
}

double GroupFunction::norm() const {
  double sum = 0.0;
  for (const auto& v : values) sum += std::norm(v);
  return values.empty() ? 0.0 : std::sqrt(sum / static_cast<double>(values.size()));
}

GroupFunction indicator(const GroupTable& g, const std::vector<Ordinal>& set) {
  GroupFunction f{&g, std::vector<std::complex<double>>(g.order(), 0.0)};
  const auto in = membership(g, set);
  for (Ordinal x = 0; x < g.order(); ++x)
    if (in[x]) f.values[x] = 1.0;
  return f;
}

GroupFunction constant_function(const GroupTable& g, std::complex<double> c) {
  return GroupFunction{&g, std::vector<std::complex<double>>(g.order(), c)};
}

GroupFunction operator-(const GroupFunction& a, const GroupFunction& b) {
  same_group(a, b);
  GroupFunction out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] -= b.values[i];
  return out;
}

GroupFunction convolve(const GroupFunction& f1, const GroupFunction& f2) {
  same_group(f1, f2);
  const GroupTable& g = *f1.group;
  const std::size_t n = g.order();
  g.ensure_cayley_table();
  std::vector<Ordinal> inverse(n);
  for (Ordinal y = 0; y < n; ++y) inverse[y] = g.inv(y);
  GroupFunction out{&g, std::vector<std::complex<double>>(n, 0.0)};
  const double scale = 1.0 / static_cast<double>(n);
  for (Ordinal x = 0; x < n; ++x) {
    std::complex<double> sum = 0.0;
    for (Ordinal y = 0; y < n; ++y) {
      if (f2.values[y] == 0.0) continue;
      sum += f1.values[g.mul(x, inverse[y])] * f2.values[y];
    }
    out.values[x] = sum * scale;
  }
  return out;
}

MixingCheck mixing_check(const GroupFunction& f1, const GroupFunction& f2, std::uint64_t m, double tolerance,
                         double mean_tolerance) {
  same_group(f1, f2);
  if (m == 0) fail(ErrorKind::InvalidArgument, "m must be positive");
  if (std::abs(f1.mean()) > mean_tolerance && std::abs(f2.mean()) > mean_tolerance) {
    fail(ErrorKind::MeanNotZero, "neither function has mean zero");
  }
  MixingCheck check;
  check.lhs = convolve(f1, f2).norm();
  check.rhs = f1.norm() * f2.norm() / std::sqrt(static_cast<double>(m));
  check.pass = check.lhs <= check.rhs + tolerance;
  return check;
}

OperatorSpectrum convolution_operator_svd(const GroupFunction& f1) {
  const GroupTable& g = *f1.group;
  const std::size_t n = g.order();
  if (n > 3000) fail(ErrorKind::TooLarge, "dense operator decomposition runs for |G| <= 3000");
  g.ensure_cayley_table();
  const auto size = static_cast<Eigen::Index>(n);
  Eigen::MatrixXcd k(size, size);
  const double scale = 1.0 / static_cast<double>(n);
  for (Ordinal x = 0; x < n; ++x)
    for (Ordinal y = 0; y < n; ++y) k(x, y) = f1.values[g.mul(x, g.inv(y))] * scale;

  OperatorSpectrum out;
  Eigen::BDCSVD<Eigen::MatrixXcd> full(k);
  for (Eigen::Index i = 0; i < full.singularValues().size(); ++i) out.full.push_back(full.singularValues()[i]);

  // Project out the constants on the input side.
  const Eigen::MatrixXcd projector =
      Eigen::MatrixXcd::Identity(size, size) - Eigen::MatrixXcd::Constant(size, size, scale);
  Eigen::BDCSVD<Eigen::MatrixXcd> restricted(k * projector, Eigen::ComputeThinV);
  for (Eigen::Index i = 0; i < restricted.singularValues().size(); ++i) {
    out.restricted.push_back(restricted.singularValues()[i]);
  }
  // Right singular vectors are unit in the counting norm; rescale to the normalized one.
  out.top_input = GroupFunction{&g, std::vector<std::complex<double>>(n)};
  const double rescale = std::sqrt(static_cast<double>(n));
  for (Ordinal x = 0; x < n; ++x) out.top_input.values[x] = restricted.matrixV()(x, 0) * rescale;
  return out;
}

MixingCheck mixing_defect(const GroupTable& g, const std::vector<Ordinal>& a, const std::vector<Ordinal>& b,
                          std::uint64_t m, double tolerance) {
  if (m == 0) fail(ErrorKind::InvalidArgument, "m must be positive");
  const GroupFunction fa = indicator(g, a);
  const GroupFunction fb = indicator(g, b);
  const double mu_a = fa.mean().real();
  const double mu_b = fb.mean().real();
  MixingCheck check;
  check.lhs = (convolve(fa, fb) - constant_function(g, mu_a * mu_b)).norm();
  check.rhs = std::sqrt(mu_a * mu_b / static_cast<double>(m));
  check.pass = check.lhs <= check.rhs + tolerance;
  return check;
}

TripleDensity triple_density(const GroupTable& g, const std::vector<Ordinal>& a, const std::vector<Ordinal>& b,
                             const std::vector<Ordinal>& c) {
  const auto in_c = membership(g, c);
  const auto set_a = members(membership(g, a));
  const auto set_b = members(membership(g, b));
  TripleDensity t;
  for (Ordinal x : set_a)
    for (Ordinal y : set_b)
      if (in_c[g.mul(x, y)]) ++t.count;
  const auto n = static_cast<std::int64_t>(g.order());
  t.measure = Rational(static_cast<std::int64_t>(t.count), n * n);
  t.product = Rational(static_cast<std::int64_t>(set_a.size()), n) * Rational(static_cast<std::int64_t>(set_b.size()), n) *
              Rational(static_cast<std::int64_t>(distinct_count(g, c)), n);
  return t;
}

std::optional<bool> triple_lower_bound_holds(const TripleDensity& t, std::uint64_t m, const Rational& eta) {
  if (eta <= 0 || eta > 1) fail(ErrorKind::InvalidArgument, "eta must lie in (0, 1]");
  if (Rational(static_cast<std::int64_t>(m)) * t.product < 1 / (eta * eta)) return std::nullopt;
  return t.measure >= (1 - eta) * t.product;
}

CubeCover cube_cover_check(const GroupTable& g, const std::vector<Ordinal>& a, std::uint64_t m) {
  const auto set_a = members(membership(g, a));
  // mu(A)^3 > 1/m  <=>  |A|^3 m > |G|^3, exact in 128-bit integers.
  const unsigned __int128 lhs = (unsigned __int128)set_a.size() * set_a.size() * set_a.size() * m;
  const unsigned __int128 rhs = (unsigned __int128)g.order() * g.order() * g.order();
  if (lhs <= rhs) fail(ErrorKind::PreconditionUnmet, "mu(A)^3 <= 1/m, so A^3 = G is not claimed");
  const auto square = members(product_set(g, set_a, set_a));
  const auto cube = product_set(g, square, set_a);
  CubeCover out;
  out.covered = static_cast<std::uint64_t>(std::count(cube.begin(), cube.end(), 1));
  out.pass = out.covered == g.order();
  return out;
}

ProductMeasure product_measure_lower(const GroupTable& g, const std::vector<Ordinal>& a,
                                     const std::vector<Ordinal>& b, std::uint64_t m) {
  if (m == 0) fail(ErrorKind::InvalidArgument, "m must be positive");
  const auto set_a = members(membership(g, a));
  const auto set_b = members(membership(g, b));
  if (set_a.empty() || set_b.empty()) fail(ErrorKind::InvalidArgument, "A and B must be nonempty");
  const auto n = static_cast<std::int64_t>(g.order());
  const Rational mu_a(static_cast<std::int64_t>(set_a.size()), n);
  const Rational mu_b(static_cast<std::int64_t>(set_b.size()), n);
  const auto ab = product_set(g, set_a, set_b);
  ProductMeasure out;
  out.measure = Rational(static_cast<std::int64_t>(std::count(ab.begin(), ab.end(), 1)), n);
  out.bound = 1 - (1 - mu_b) / (Rational(static_cast<std::int64_t>(m)) * mu_a * mu_b);
  out.vacuous = out.bound <= 0;
  out.pass = out.measure >= out.bound;
  return out;
}

std::vector<Ordinal> random_subset(const GroupTable& g, std::size_t size, std::mt19937_64& rng) {
  if (size > g.order()) fail(ErrorKind::InvalidArgument, "subset larger than the group");
  std::vector<Ordinal> all(g.order());
  std::iota(all.begin(), all.end(), 0U);
  // Partial Fisher-Yates: sampling without replacement.
  for (std::size_t i = 0; i < size; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, all.size() - 1);
    std::swap(all[i], all[pick(rng)]);
  }
  all.resize(size);
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<Ordinal> random_subset(const GroupTable& g, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> density(0.0, 1.0);
  const auto size = static_cast<std::size_t>(std::llround(density(rng) * static_cast<double>(g.order())));
  return random_subset(g, size, rng);
}

GroupFunction random_function(const GroupTable& g, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  GroupFunction f{&g, std::vector<std::complex<double>>(g.order())};
  for (auto& v : f.values) {
    const double re = normal(rng);
    v = {re, normal(rng)};
  }
  return f;
}

GroupFunction random_mean_zero_function(const GroupTable& g, std::mt19937_64& rng) {
  GroupFunction f = random_function(g, rng);
  return f - constant_function(g, f.mean());
}

}  // namespace qrg
