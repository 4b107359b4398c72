#include "qrg/productfree.hpp"

#include <algorithm>
#include <bitset>
#include <chrono>
#include <numeric>
#include <random>

#include "qrg/error.hpp"
#include "qrg/groups.hpp"

namespace qrg {

namespace {

using Set = std::bitset<kMaxExactSearchOrder>;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

SearchResult make_result(const GroupTable& g, std::vector<Ordinal> witness) {
  std::sort(witness.begin(), witness.end());
  SearchResult r;
  r.size = witness.size();
  r.density = Rational(static_cast<std::int64_t>(r.size), static_cast<std::int64_t>(g.order()));
  r.witness = std::move(witness);
  return r;
}

class Search {
 public:
  Search(const GroupTable& g, std::uint64_t budget) : n_(g.order()), budget_(budget) {
    g.ensure_cayley_table();
    mul_.resize(n_ * n_);
    inv_.resize(n_);
    for (Ordinal x = 0; x < n_; ++x) {
      inv_[x] = g.inv(x);
      for (Ordinal y = 0; y < n_; ++y) mul_[x * n_ + y] = g.mul(x, y);
    }
    roots_.resize(n_);
    for (Ordinal x = 0; x < n_; ++x) roots_[mul_[x * n_ + x]].push_back(x);

    // Fail-first: elements taking part in the most constraints x*y = z come first.
    std::vector<std::uint64_t> weight(n_, 0);
    for (Ordinal x = 1; x < n_; ++x) {
      for (Ordinal y = 1; y < n_; ++y) {
        const Ordinal z = mul_[x * n_ + y];
        if (z == 0) continue;
        ++weight[z];
        ++weight[x];
        if (y != x) ++weight[y];
      }
    }
    for (Ordinal x = 1; x < n_; ++x) order_.push_back(x);
    std::stable_sort(order_.begin(), order_.end(), [&](Ordinal a, Ordinal b) { return weight[a] > weight[b]; });
    cap_ = n_ / 2;
  }

  void seed(const std::vector<Ordinal>& incumbent) { best_ = incumbent; }

  SearchResult run() {
    Set candidates;
    for (Ordinal x : order_) candidates.set(x);
    if (best_.size() < cap_) recurse(Set{}, candidates, 0);
    SearchResult r;
    r.witness = best_;
    r.nodes = nodes_;
    r.budget_exceeded = exhausted_;
    r.optimal = !exhausted_;
    return r;
  }

 private:
  Ordinal mul(Ordinal a, Ordinal b) const { return mul_[a * n_ + b]; }

  // S and aS are disjoint for a in S, so on each cycle of x -> ax inside the
  // allowed set S picks at most every other element.
  std::size_t translation_bound(Ordinal a, const Set& allowed) const {
    Set seen;
    std::size_t total = 0;
    for (Ordinal start = 0; start < n_; ++start) {
      if (seen.test(start)) continue;
      std::vector<char> cycle;
      Ordinal x = start;
      do {
        seen.set(x);
        cycle.push_back(allowed.test(x) ? 1 : 0);
        x = mul(a, x);
      } while (x != start);
      const std::size_t len = cycle.size();
      const auto gap = std::find(cycle.begin(), cycle.end(), 0);
      if (gap == cycle.end()) {
        total += len / 2;
        continue;
      }
      // Rotate so the cycle starts at a forbidden element, then sum runs.
      std::rotate(cycle.begin(), gap, cycle.end());
      std::size_t run = 0;
      for (std::size_t i = 0; i <= len; ++i) {
        if (i < len && cycle[i]) {
          ++run;
        } else {
          total += (run + 1) / 2;
          run = 0;
        }
      }
    }
    return total;
  }

  std::size_t upper_bound(const Set& chosen, const Set& candidates) const {
    std::size_t bound = std::min(chosen.count() + candidates.count(), cap_);
    const Set allowed = chosen | candidates;
    for (Ordinal a = 1; a < n_ && bound > best_.size(); ++a) {
      if (chosen.test(a)) bound = std::min(bound, translation_bound(a, allowed));
    }
    return bound;
  }

  void recurse(const Set& chosen, Set candidates, std::size_t depth) {
    if (exhausted_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    if (chosen.count() > best_.size()) {
      best_.clear();
      for (Ordinal x = 0; x < n_; ++x)
        if (chosen.test(x)) best_.push_back(x);
    }
    if (best_.size() >= cap_) return;
    if (upper_bound(chosen, candidates) <= best_.size()) return;

    for (std::size_t i = depth; i < order_.size(); ++i) {
      const Ordinal v = order_[i];
      if (!candidates.test(v)) continue;
      candidates.reset(v);
      recurse(chosen | Set().set(v), without_conflicts(chosen, candidates, v), i + 1);
      if (exhausted_ || best_.size() >= cap_) return;
      if (chosen.count() + candidates.count() <= best_.size()) return;
    }
  }

  // Candidates that stay compatible once v joins the chosen set.
  Set without_conflicts(const Set& chosen, Set candidates, Ordinal v) const {
    const Ordinal vi = inv_[v];
    auto drop = [&](Ordinal a) {
      const Ordinal ai = inv_[a];
      candidates.reset(mul(v, a));
      candidates.reset(mul(a, v));
      candidates.reset(mul(a, vi));
      candidates.reset(mul(vi, a));
      candidates.reset(mul(v, ai));
      candidates.reset(mul(ai, v));
    };
    drop(v);
    for (Ordinal a = 0; a < n_; ++a)
      if (chosen.test(a)) drop(a);
    for (Ordinal r : roots_[v]) candidates.reset(r);
    return candidates;
  }

  std::size_t n_;
  std::uint64_t budget_;
  std::vector<Ordinal> mul_;
  std::vector<Ordinal> inv_;
  std::vector<std::vector<Ordinal>> roots_;
  std::vector<Ordinal> order_;
  std::size_t cap_ = 0;
  std::vector<Ordinal> best_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

bool verify_product_free(const GroupTable& g, const std::vector<Ordinal>& a) {
  std::vector<char> in(g.order(), 0);
  for (Ordinal x : a) {
    if (x >= g.order()) fail(ErrorKind::InvalidArgument, "ordinal out of range");
    in[x] = 1;
  }
  for (Ordinal x : a)
    for (Ordinal y : a)
      if (in[g.mul(x, y)]) return false;
  return true;
}

SearchResult exact_max_product_free(const GroupTable& g, std::uint64_t node_budget) {
  if (g.order() > kMaxExactSearchOrder) {
    fail(ErrorKind::TooLarge, "exact search runs for |G| <= " + std::to_string(kMaxExactSearchOrder));
  }
  const auto start = std::chrono::steady_clock::now();
  Search search(g, node_budget);
  search.seed(greedy_product_free(g).witness);
  SearchResult raw = search.run();
  SearchResult r = make_result(g, std::move(raw.witness));
  r.optimal = raw.optimal;
  r.budget_exceeded = raw.budget_exceeded;
  r.nodes = raw.nodes;
  r.seconds = seconds_since(start);
  return r;
}

SearchResult coset_product_free(const GroupTable& g, const std::vector<Ordinal>& subgroup) {
  const auto start = std::chrono::steady_clock::now();
  if (!is_subgroup(g, subgroup)) fail(ErrorKind::InvalidArgument, "not a subgroup");
  std::vector<char> in(g.order(), 0);
  for (Ordinal h : subgroup) in[h] = 1;
  const auto outside = std::find(in.begin(), in.end(), 0);
  if (outside == in.end()) fail(ErrorKind::NotProper, "the subgroup is the whole group");
  const auto x = static_cast<Ordinal>(outside - in.begin());
  std::vector<Ordinal> coset;
  for (Ordinal h = 0; h < g.order(); ++h)
    if (in[h]) coset.push_back(g.mul(x, h));
  SearchResult r = make_result(g, std::move(coset));
  r.seconds = seconds_since(start);
  return r;
}

SearchResult greedy_product_free(const GroupTable& g, std::optional<std::uint64_t> seed,
                                 const std::vector<Ordinal>& initial) {
  const auto start = std::chrono::steady_clock::now();
  if (!verify_product_free(g, initial)) fail(ErrorKind::InvalidArgument, "initial set is not product-free");
  const std::size_t n = g.order();
  std::vector<char> in(n, 0);
  std::vector<Ordinal> chosen;
  for (Ordinal x : initial) {
    if (!in[x]) chosen.push_back(x);
    in[x] = 1;
  }
  std::vector<Ordinal> order(n);
  std::iota(order.begin(), order.end(), 0U);
  if (seed) {
    std::mt19937_64 rng(*seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  std::uint64_t tried = 0;
  for (Ordinal x : order) {
    if (in[x]) continue;
    ++tried;
    const Ordinal sq = g.mul(x, x);
    if (sq == x || in[sq]) continue;
    bool ok = true;
    for (Ordinal a : chosen) {
      // xa, ax in S; x = ab or ba; a = xb or bx. x^2 is handled above.
      const Ordinal ai = g.inv(a);
      const Ordinal xi = g.inv(x);
      if (in[g.mul(x, a)] || in[g.mul(a, x)] || in[g.mul(ai, x)] || in[g.mul(x, ai)] ||
          in[g.mul(xi, a)] || in[g.mul(a, xi)]) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    in[x] = 1;
    chosen.push_back(x);
  }
  SearchResult r = make_result(g, std::move(chosen));
  r.nodes = tried;
  r.seconds = seconds_since(start);
  return r;
}

BoundReport formula_vs_search(const std::vector<std::uint32_t>& factors, std::uint64_t node_budget) {
  const GroupTable g = build_abelian(factors);
  const SearchResult s = exact_max_product_free(g, node_budget);
  if (!s.optimal) fail(ErrorKind::BudgetExceeded, "exact search did not finish within the node budget");
  std::string name = "pf(" + display_name(g.descriptor()) + ")";
  return verify_bound(name, s.density, green_ruzsa_pf(factors), Relation::Equal,
                      {"Green-Ruzsa formula", "exact branch-and-bound search"});
}

}  // namespace qrg
