#include "qrg/modp.hpp"

#include <algorithm>

#include "qrg/error.hpp"
#include "qrg/modring.hpp"

namespace qrg::modp {

namespace {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::size_t degree(const Poly& f) { return f.empty() ? 0 : f.size() - 1; }

Poly poly_mod(Poly a, const Poly& m, std::uint64_t l) {
  trim(a);
  const std::uint64_t lead_inv = inv(m.back(), l);
  while (a.size() >= m.size()) {
    const std::uint64_t factor = mul(a.back(), lead_inv, l);
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      a[shift + i] = (a[shift + i] + l - mul(factor, m[i], l)) % l;
    }
    trim(a);
  }
  return a;
}

Poly poly_div(Poly a, const Poly& m, std::uint64_t l) {
  trim(a);
  if (a.size() < m.size()) return {};
  Poly q(a.size() - m.size() + 1, 0);
  const std::uint64_t lead_inv = inv(m.back(), l);
  while (a.size() >= m.size()) {
    const std::uint64_t factor = mul(a.back(), lead_inv, l);
    const std::size_t shift = a.size() - m.size();
    q[shift] = factor;
    for (std::size_t i = 0; i < m.size(); ++i) {
      a[shift + i] = (a[shift + i] + l - mul(factor, m[i], l)) % l;
    }
    trim(a);
  }
  return q;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t l) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + mul(a[i], b[j], l)) % l;
  }
  return poly_mod(std::move(c), m, l);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t l) {
  Poly result = poly_mod({1}, m, l);
  base = poly_mod(std::move(base), m, l);
  while (e > 0) {
    if (e & 1U) result = poly_mulmod(result, base, m, l);
    base = poly_mulmod(base, base, m, l);
    e >>= 1U;
  }
  return result;
}

Poly monic(Poly f, std::uint64_t l) {
  trim(f);
  if (f.empty()) return f;
  const std::uint64_t lead_inv = inv(f.back(), l);
  for (auto& c : f) c = mul(c, lead_inv, l);
  return f;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t l) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, l);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a), l);
}

Poly poly_sub(Poly a, const Poly& b, std::uint64_t l) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + l - b[i]) % l;
  trim(a);
  return a;
}

void split(const Poly& g, std::uint64_t l, std::mt19937_64& rng, std::vector<std::uint64_t>& out) {
  const std::size_t d = degree(g);
  if (g.empty() || d == 0) return;
  if (d == 1) {
    out.push_back((l - mul(g[0], inv(g[1], l), l)) % l);
    return;
  }
  if (l == 2) {
    // Only 0 and 1 are candidates.
    for (std::uint64_t x = 0; x < 2; ++x) {
      std::uint64_t v = 0;
      for (std::size_t i = g.size(); i-- > 0;) v = (mul(v, x, l) + g[i]) % l;
      if (v == 0) out.push_back(x);
    }
    return;
  }
  std::uniform_int_distribution<std::uint64_t> dist(0, l - 1);
  for (;;) {
    const Poly shifted = {dist(rng), 1};
    Poly h = poly_powmod(shifted, (l - 1) / 2, g, l);
    h = poly_sub(std::move(h), {1}, l);
    Poly f = poly_gcd(g, h, l);
    const std::size_t df = degree(f);
    if (!f.empty() && df > 0 && df < d) {
      split(f, l, rng, out);
      split(monic(poly_div(g, f, l), l), l, rng, out);
      return;
    }
  }
}

}  // namespace

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t l) {
  return static_cast<std::uint64_t>((unsigned __int128)a * b % l);
}

std::uint64_t inv(std::uint64_t a, std::uint64_t l) { return inverse_mod(a % l, l); }

std::vector<std::vector<std::uint64_t>> nullspace(Matrix a, std::uint64_t l) {
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols && row < a.rows; ++col) {
    std::size_t pivot = a.rows;
    for (std::size_t r = row; r < a.rows; ++r) {
      if (a.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == a.rows) continue;
    for (std::size_t c = 0; c < a.cols; ++c) std::swap(a.at(row, c), a.at(pivot, c));
    const std::uint64_t s = inv(a.at(row, col), l);
    for (std::size_t c = 0; c < a.cols; ++c) a.at(row, c) = mul(a.at(row, c), s, l);
    for (std::size_t r = 0; r < a.rows; ++r) {
      if (r == row || a.at(r, col) == 0) continue;
      const std::uint64_t f = a.at(r, col);
      for (std::size_t c = 0; c < a.cols; ++c) {
        a.at(r, c) = (a.at(r, c) + l - mul(f, a.at(row, c), l)) % l;
      }
    }
    pivot_cols.push_back(col);
    ++row;
  }
  std::vector<char> is_pivot(a.cols, 0);
  for (auto c : pivot_cols) is_pivot[c] = 1;
  std::vector<std::vector<std::uint64_t>> basis;
  for (std::size_t free = 0; free < a.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint64_t> v(a.cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = (l - a.at(i, free)) % l;
    basis.push_back(std::move(v));
  }
  return basis;
}

Poly charpoly(Matrix a, std::uint64_t l) {
  const std::size_t n = a.rows;
  // Similarity transforms to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t pivot = n;
    for (std::size_t i = j + 1; i < n; ++i) {
      if (a.at(i, j) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == n) continue;
    if (pivot != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a.at(pivot, c), a.at(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(a.at(r, pivot), a.at(r, j + 1));
    }
    const std::uint64_t pinv = inv(a.at(j + 1, j), l);
    for (std::size_t i = j + 2; i < n; ++i) {
      const std::uint64_t u = mul(a.at(i, j), pinv, l);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) a.at(i, c) = (a.at(i, c) + l - mul(u, a.at(j + 1, c), l)) % l;
      for (std::size_t r = 0; r < n; ++r) a.at(r, j + 1) = (a.at(r, j + 1) + mul(u, a.at(r, i), l)) % l;
    }
  }
  // p_{k+1} = (x - h_kk) p_k - sum_{i<k} h_ik (prod_{m=i+1..k} h_{m,m-1}) p_i.
  std::vector<Poly> p(n + 1);
  p[0] = {1};
  for (std::size_t k = 0; k < n; ++k) {
    Poly next(k + 2, 0);
    for (std::size_t d = 0; d <= k; ++d) {
      next[d + 1] = (next[d + 1] + p[k][d]) % l;
      next[d] = (next[d] + l - mul(a.at(k, k), p[k][d], l)) % l;
    }
    std::uint64_t prod = 1;
    for (std::size_t i = k; i-- > 0;) {
      prod = mul(prod, a.at(i + 1, i), l);
      if (prod == 0) break;
      const std::uint64_t coeff = mul(a.at(i, k), prod, l);
      for (std::size_t d = 0; d < p[i].size(); ++d) next[d] = (next[d] + l - mul(coeff, p[i][d], l)) % l;
    }
    p[k + 1] = std::move(next);
  }
  return p[n];
}

std::vector<std::uint64_t> distinct_roots(Poly f, std::uint64_t l, std::mt19937_64& rng) {
  f = monic(std::move(f), l);
  if (degree(f) == 0) return {};
  // gcd(f, x^l - x) keeps each root of f in F_l exactly once.
  Poly xl = poly_powmod({0, 1}, l, f, l);
  Poly g = poly_gcd(f, poly_sub(std::move(xl), {0, 1}, l), l);
  std::vector<std::uint64_t> roots;
  split(g, l, rng, roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::uint64_t working_prime(std::uint64_t e, std::uint64_t bound_squared) {
  for (std::uint64_t l = e + 1; l < (std::uint64_t{1} << 31); l += e) {
    if (l * l > bound_squared && is_prime(l)) return l;
  }
  return 0;
}

std::uint64_t primitive_root_of_unity(std::uint64_t e, std::uint64_t l) {
  std::vector<std::uint64_t> prime_factors;
  std::uint64_t rest = e;
  for (std::uint64_t q = 2; q * q <= rest; ++q) {
    if (rest % q == 0) {
      prime_factors.push_back(q);
      while (rest % q == 0) rest /= q;
    }
  }
  if (rest > 1) prime_factors.push_back(rest);
  for (std::uint64_t x = 2; x < l; ++x) {
    const std::uint64_t z = pow_mod(x, (l - 1) / e, l);
    bool primitive = true;
    for (auto q : prime_factors) {
      if (pow_mod(z, e / q, l) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return z;
  }
  if (e == 1) return 1;
  fail(ErrorKind::Internal, "no primitive root of unity found");
}

}  // namespace qrg::modp
