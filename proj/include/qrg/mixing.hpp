#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "qrg/group_table.hpp"
#include "qrg/rational.hpp"

namespace qrg {

/// Complex function on an enumerated group, indexed by ordinal. Norms and
/// means use the normalized counting measure mu({g}) = 1/|G|.
struct GroupFunction {
  const GroupTable* group = nullptr;
  std::vector<std::complex<double>> values;

  std::complex<double> mean() const;
  double norm() const;  // L^2 norm
};

GroupFunction indicator(const GroupTable& g, const std::vector<Ordinal>& set);
GroupFunction constant_function(const GroupTable& g, std::complex<double> c);
GroupFunction operator-(const GroupFunction& a, const GroupFunction& b);

/// (f1 * f2)(x) = (1/|G|) sum_y f1(x y^-1) f2(y). GroupMismatch across groups.
GroupFunction convolve(const GroupFunction& f1, const GroupFunction& f2);

struct MixingCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;
};

/// |f1 * f2| <= |f1| |f2| / sqrt(m) when f1 or f2 has mean zero; MeanNotZero
/// otherwise.
MixingCheck mixing_check(const GroupFunction& f1, const GroupFunction& f2, std::uint64_t m,
                         double tolerance = 1e-9, double mean_tolerance = 1e-12);

struct OperatorSpectrum {
  std::vector<double> full;        // singular values of f -> f1 * f, descending
  std::vector<double> restricted;  // same operator on mean-zero functions
  GroupFunction top_input;         // unit mean-zero f attaining restricted[0]
};

/// TooLarge above |G| = 3000.
OperatorSpectrum convolution_operator_svd(const GroupFunction& f1);

/// |1_A * 1_B - mu(A) mu(B)| against sqrt(mu(A) mu(B) / m).
MixingCheck mixing_defect(const GroupTable& g, const std::vector<Ordinal>& a, const std::vector<Ordinal>& b,
                          std::uint64_t m, double tolerance = 1e-9);

struct TripleDensity {
  std::uint64_t count = 0;  // #{(a, b) in A x B : ab in C}
  Rational measure;         // count / |G|^2
  Rational product;         // mu(A) mu(B) mu(C)
};

TripleDensity triple_density(const GroupTable& g, const std::vector<Ordinal>& a, const std::vector<Ordinal>& b,
                             const std::vector<Ordinal>& c);

/// When m mu(A)mu(B)mu(C) >= 1/eta^2, whether measure >= (1 - eta) product;
/// nullopt when the hypothesis does not apply.
std::optional<bool> triple_lower_bound_holds(const TripleDensity& t, std::uint64_t m, const Rational& eta);

struct CubeCover {
  std::uint64_t covered = 0;  // |A^3|
  bool pass = false;          // A^3 = G
};

/// Exhaustive A^3 = G check. PreconditionUnmet unless mu(A)^3 > 1/m.
CubeCover cube_cover_check(const GroupTable& g, const std::vector<Ordinal>& a, std::uint64_t m);

struct ProductMeasure {
  Rational measure;  // mu(AB)
  Rational bound;    // 1 - (1 - mu(B)) / (m mu(A) mu(B))
  bool vacuous = false;
  bool pass = false;
};

ProductMeasure product_measure_lower(const GroupTable& g, const std::vector<Ordinal>& a,
                                     const std::vector<Ordinal>& b, std::uint64_t m);

/// Uniform subset of the given size, sorted.
std::vector<Ordinal> random_subset(const GroupTable& g, std::size_t size, std::mt19937_64& rng);
/// Subset whose density is drawn uniformly from [0, 1].
std::vector<Ordinal> random_subset(const GroupTable& g, std::mt19937_64& rng);
/// Independent standard complex Gaussian values.
GroupFunction random_function(const GroupTable& g, std::mt19937_64& rng);
GroupFunction random_mean_zero_function(const GroupTable& g, std::mt19937_64& rng);

}  // namespace qrg
