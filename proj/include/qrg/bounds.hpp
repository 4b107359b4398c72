#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qrg/rational.hpp"

namespace qrg {

/// Classical families of the degree table: SL_2, SL_k (k >= 3) and Sp_2k.
enum class Family { SL2, SLk, Sp2k };

std::string_view to_string(Family f);
/// Accepts sl2, slk, sl, sp2k, sp.
Family parse_family(std::string_view name);

/// Lower bound for the degree of a nontrivial representation of G(Z/p^n).
Rational h_bound(Family family, std::uint32_t k, std::uint32_t p);
/// Lower bound for the degree of a faithful representation of G(Z/p^n).
Rational hf_bound(Family family, std::uint32_t k, std::uint32_t p, std::uint32_t n);
/// Bourgain-Gamburd bound p^{n-2}(p^2-1)/2 on m_f(SL_2(Z/p^n)), n >= 2.
Rational bgc_bound(std::uint32_t p, std::uint32_t n);

struct PfInterval {
  Rational lower;
  double upper = 0.0;            // the formula value, a negative cube root
  double effective_upper = 0.0;  // min(upper, 1/2); pf <= 1/2 for every group
};

/// Product-free measure bounds for SL_k(Z_p) and Sp_2k(Z_p).
PfInterval pf_bounds_profinite(Family family, std::uint32_t k, std::uint32_t p);
/// Bounds 1/(k+1) <= pf(A+_{k+1}) <= (k-1)^{-1/3} for k >= 6.
PfInterval pf_bounds_tree(std::uint32_t k);

/// Green-Ruzsa value of pf for the abelian group with the given invariant
/// factors (any factorization into cyclic groups works).
Rational green_ruzsa_pf(const std::vector<std::uint32_t>& factors);
Rational pf_padic(std::uint32_t p);
Rational pf_power_series(std::uint32_t p);
Rational pf_torus(std::uint32_t k);

enum class Relation { GreaterEqual, LessEqual, Equal };
std::string_view to_string(Relation r);

struct BoundReport {
  std::string quantity;
  Rational computed;
  Rational formula;
  Relation relation = Relation::GreaterEqual;
  bool pass = false;
  std::vector<std::string> refs;
};

/// Exact check of `computed relation formula`.
BoundReport verify_bound(std::string quantity, Rational computed, Rational formula, Relation relation,
                         std::vector<std::string> refs = {});

}  // namespace qrg
