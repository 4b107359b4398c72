// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "qrg/bounds.hpp"
#include "qrg/character_table.hpp"
#include "qrg/code.hpp"
#include "qrg/groups.hpp"
#include "qrg/matrix.hpp"
#include "qrg/mixing.hpp"
#include "qrg/modring.hpp"
#include "qrg/productfree.hpp"
#include "qrg/roots.hpp"

using namespace qrg;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "failed: ";
      else detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

std::uint64_t min_degree(const GroupTable& g) {
  return min_nontrivial_degree(character_table(g, conjugacy_classes(g)));
}

void degree_formulas(Outcome& o) {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    const std::uint64_t m = min_degree(build_sl(2, p, 1));
    o.require(m == (p - 1) / 2, "m(SL_2(F_" + std::to_string(p) + ")) = " + std::to_string(m));
  }
}

void quasirandom_inequalities(Outcome& o) {
  struct Instance {
    Family family;
    std::uint32_t k, p, n;
    std::int64_t h, hf;  // bound values worked out by hand
  };
  const Instance instances[] = {
      {Family::SL2, 2, 3, 1, 1, 1},  {Family::SL2, 2, 3, 2, 1, 3},  {Family::SL2, 2, 5, 1, 2, 2},
      {Family::SL2, 2, 5, 2, 2, 10}, {Family::SLk, 3, 3, 1, 6, 6},  {Family::Sp2k, 2, 3, 1, 3, 3},
  };
  for (const auto& in : instances) {
    const GroupTable g = in.family == Family::Sp2k ? build_sp(in.k, in.p, in.n) : build_sl(in.k, in.p, in.n);
    const ClassData cd = conjugacy_classes(g);
    const CharacterTable t = character_table(g, cd);
    const auto m = static_cast<std::int64_t>(min_nontrivial_degree(t));
    const auto mf = static_cast<std::int64_t>(min_faithful_degree(t, cd).degree);
    const std::string name = display_name(g.descriptor());
    o.require(h_bound(in.family, in.k, in.p) == Rational(in.h), "h formula for " + name);
    o.require(hf_bound(in.family, in.k, in.p, in.n) == Rational(in.hf), "h_f formula for " + name);
    o.require(verify_bound("m", m, h_bound(in.family, in.k, in.p), Relation::GreaterEqual).pass, "m >= h for " + name);
    o.require(verify_bound("m_f", mf, hf_bound(in.family, in.k, in.p, in.n), Relation::GreaterEqual).pass,
              "m_f >= h_f for " + name);
    if (in.family == Family::SL2 && in.p == 3 && in.n == 2) {
      o.require(bgc_bound(3, 2) == Rational(4) && mf >= 4, "m_f(SL_2(Z/9)) >= 4");
      o.detail << "m_f(SL_2(Z/9)) = " << mf << "; ";
    }
  }
}

void green_ruzsa(Outcome& o) {
  std::size_t groups = 0;
  for (std::uint32_t n = 1; n <= 32; ++n) {
    for (const auto& f : abelian_groups_of_order(n)) {
      const GroupTable g = build_abelian(f);
      const SearchResult r = exact_max_product_free(g);
      ++groups;
      // The trivial group has no invariant factors; present it as Z/1.
      const auto factors = f.empty() ? std::vector<std::uint32_t>{1} : f;
      o.require(r.optimal && verify_product_free(g, r.witness) && r.density == green_ruzsa_pf(factors),
                "pf(" + display_name(g.descriptor()) + ")");
    }
  }
  o.require(green_ruzsa_pf({10}) == Rational(1, 2), "Z/10");
  o.require(green_ruzsa_pf({9}) == Rational(1, 3), "Z/9");
  o.require(green_ruzsa_pf({7}) == Rational(2, 7), "Z/7");
  o.detail << groups << " abelian groups; ";
}

void mixing_inequality(Outcome& o) {
  const GroupTable g = build_sl(2, 5, 1);
  const std::uint64_t m = min_degree(g);
  o.require(m == 2, "m(SL_2(F_5)) = 2");
  std::mt19937_64 rng(42);
  std::size_t failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const GroupFunction f1 = random_mean_zero_function(g, rng);
    failures += !mixing_check(f1, random_function(g, rng), m).pass;
  }
  for (int i = 0; i < 500; ++i) failures += !mixing_defect(g, random_subset(g, rng), random_subset(g, rng), m).pass;
  o.require(failures == 0, std::to_string(failures) + " mixing violations");
  for (int i = 0; i < 100; ++i) {
    const GroupFunction f1 = random_function(g, rng);
    const OperatorSpectrum s = convolution_operator_svd(f1);
    double hs = 0.0;
    for (double x : s.full) hs += x * x;
    const double norm = f1.norm();
    o.require(s.restricted.front() <= norm / std::sqrt(2.0) + 1e-9, "restricted sigma_1 bound");
    o.require(std::abs(hs - norm * norm) <= 1e-9, "Hilbert-Schmidt identity");
  }
}

void triple_products(Outcome& o) {
  const GroupTable g = build_sl(2, 7, 1);
  const std::uint64_t m = min_degree(g);
  o.require(m == 3, "m(SL_2(F_7)) = 3");
  const std::size_t n = g.order();
  std::mt19937_64 rng(42);
  // Smallest |A| with |A|^3 * m > |G|^3, i.e. mu(A) > m^(-1/3).
  std::size_t threshold = 1;
  while (threshold * threshold * threshold * m <= n * n * n) ++threshold;
  std::uniform_int_distribution<std::size_t> cube_size(threshold, n);
  for (int i = 0; i < 100; ++i) o.require(cube_cover_check(g, random_subset(g, cube_size(rng), rng), m).pass, "A^3 = G");

  std::uniform_int_distribution<std::size_t> dense(n * 3 / 5, n);
  std::size_t applicable = 0;
  for (int i = 0; i < 200; ++i) {
    const auto a = random_subset(g, dense(rng), rng), b = random_subset(g, dense(rng), rng),
               c = random_subset(g, dense(rng), rng);
    const TripleDensity t = triple_density(g, a, b, c);
    for (const Rational eta : {Rational(1, 2), Rational(9, 10)}) {
      if (const auto holds = triple_lower_bound_holds(t, m, eta)) {
        ++applicable;
        o.require(*holds, "triple-product lower bound");
      }
    }
  }
  std::size_t vacuous = 0;
  for (int i = 0; i < 200; ++i) {
    const ProductMeasure pm = product_measure_lower(g, random_subset(g, rng), random_subset(g, rng), m);
    vacuous += pm.vacuous;
    o.require(pm.pass, "mu(AB) lower bound");
  }
  o.detail << applicable << " applicable triple checks, " << vacuous << "/200 vacuous product bounds; ";
}

void coset_constructions(Outcome& o) {
  const auto check = [&](const GroupTable& g, const std::vector<Ordinal>& h, Rational expected) {
    const SearchResult r = coset_product_free(g, h);
    o.require(r.density == expected && verify_product_free(g, r.witness),
              "coset in " + display_name(g.descriptor()) + " has density " + to_string(r.density));
  };
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const GroupTable g = build_sl(2, p, 1);
    check(g, stabilizer_subgroup(g, StabilizerAction::Projective).members, Rational(1, p + 1));
  }
  const GroupTable sp = build_sp(2, 3, 1);
  check(sp, stabilizer_subgroup(sp, StabilizerAction::Projective).members, Rational(1, 40));
  const GroupTable f1 = build_tree_level(6, 1);
  check(f1, point_stabilizer(f1, 0).members, Rational(1, 7));
}

void tree_module(Outcome& o) {
  for (std::uint64_t k : {2u, 3u}) {
    std::uint64_t fact_k = 1;
    for (std::uint64_t i = 2; i <= k; ++i) fact_k *= i;
    std::uint64_t power = 1;
    for (std::uint64_t i = 0; i <= k; ++i) power *= fact_k;
    const std::uint64_t formula = fact_k * (k + 1) / 2 * power / 2;
    o.require(build_tree_level(static_cast<std::uint32_t>(k), 2).order() == formula, "|F_2(" + std::to_string(k) + ")|");
  }
  o.require(min_degree(build_alt(7)) == 6, "m(Alt_7) = 6");
  for (std::uint32_t m : {7u, 8u}) {
    const InvariantScan scan = alt_invariant_subgroup_scan(build_even_weight_code(m));
    o.require(scan.min_rank == 6u, "min rank for m = " + std::to_string(m));
    o.require(scan.min_rank && *scan.min_rank >= m - 2, "d >= k-1 at k = " + std::to_string(m - 1));
  }
}

void root_decomposition_check(Outcome& o) {
  const ModMatrix e1 = sl_root_element(2, 3, 1);
  const std::vector<Eigen::MatrixXcd> family = {nonzero_vector_action(e1), nonzero_vector_action(multiply(e1, e1))};
  const RootDecomposition d = root_decomposition(family);
  o.require(d.dimensions() == std::vector<std::size_t>{4, 2, 2}, "root dimensions (4, 2, 2)");
  if (d.roots.size() != 3) return;
  Eigen::MatrixXcd total = Eigen::MatrixXcd::Zero(8, 8);
  for (std::size_t i = 0; i < 3; ++i) {
    total += d.roots[i].projector();
    for (std::size_t j = 0; j < i; ++j)
      o.require((d.roots[i].basis.adjoint() * d.roots[j].basis).norm() <= 1e-8, "orthogonality");
  }
  o.require((total - Eigen::MatrixXcd::Identity(8, 8)).norm() <= 1e-8, "completeness");

  const std::complex<double> omega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  const auto find = [&](std::complex<double> v) {
    for (std::size_t i = 0; i < 3; ++i)
      if (std::abs(d.roots[i].values[0] - v) < 1e-8) return i;
    return std::size_t{3};
  };
  const std::size_t a = find(omega), b = find(omega * omega);
  o.require(a < 3 && b < 3, "nontrivial roots take values omega and omega^2 on e_1");
  if (a == 3 || b == 3) return;
  const Eigen::MatrixXcd h = nonzero_vector_action(sl_alpha(2, 3, 2, {}));
  const ConjugatedRoot ca = conjugated_root(family, h, d, a), cb = conjugated_root(family, h, d, b);
  o.require(ca.index == b && cb.index == a, "alpha swaps the nontrivial roots");
  o.require(ca.projector_gap <= 1e-8 && cb.projector_gap <= 1e-8, "V(r_h) = rho(h^-1) V(r)");
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_seconds;
    std::function<void(Outcome&)> body;
  };
  const Criterion criteria[] = {
      {"degree formulas attained for SL_2(F_p)", 60, degree_formulas},
      {"quasi-randomness inequalities", 600, quasirandom_inequalities},
      {"Green-Ruzsa cross-validation", 300, green_ruzsa},
      {"mixing inequality on SL_2(F_5)", 600, mixing_inequality},
      {"triple products and covering on SL_2(F_7)", 600, triple_products},
      {"coset constructions", 600, coset_constructions},
      {"tree module", 10, tree_module},
      {"root decomposition", 600, root_decomposition_check},
  };
  int failed = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(seconds < c.limit_seconds, "time limit " + std::to_string(c.limit_seconds) + " s");
    failed += !o.pass;
    std::printf("%s %d %s (%.2f s) %s\n", o.pass ? "PASS" : "FAIL", index, c.name, seconds, o.detail.str().c_str());
  }
  return failed == 0 ? 0 : 1;
}
