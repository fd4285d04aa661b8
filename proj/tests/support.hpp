#pragma once

// Generators and brute-force reference implementations used only by tests.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "jack/composition.hpp"
#include "jack/mpoly.hpp"

namespace support {

using namespace jack;

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

inline Permutation random_permutation(std::mt19937& rng, int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

inline Composition random_composition(std::mt19937& rng, int n, int max_part) {
  std::uniform_int_distribution<int> part(0, max_part);
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int& v : p) v = part(rng);
  return Composition(p);
}

inline AlphaPoly random_alpha_poly(std::mt19937& rng, int max_degree, int bound) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coef(-bound, bound);
  std::vector<mpz_class> c(static_cast<std::size_t>(deg(rng) + 1));
  for (auto& v : c) v = coef(rng);
  return AlphaPoly(std::move(c));
}

inline MPoly<AlphaPoly> random_poly(std::mt19937& rng, int n, int max_degree, int terms) {
  std::uniform_int_distribution<int> e(0, max_degree);
  MPoly<AlphaPoly> f(n);
  for (int t = 0; t < terms; ++t) {
    Monomial m(n);
    int budget = max_degree;
    for (int k = 0; k < n; ++k) {
      const int v = std::min(e(rng), budget);
      m.set(k, v);
      budget -= v;
    }
    f.add_term(m, random_alpha_poly(rng, 2, 5));
  }
  return f;
}

/// Minimal-length w with act(w, lambda_plus) == lambda by exhaustive search.
/// Returns every minimizer so uniqueness can be asserted.
inline std::vector<Permutation> brute_force_w_lambda(const Composition& lambda) {
  const Composition plus = lambda_plus(lambda);
  std::vector<Permutation> best;
  int best_len = -1;
  for (const Permutation& w : all_permutations(lambda.n())) {
    if (act(w, plus) != lambda) continue;
    if (best_len < 0 || w.length() < best_len) {
      best = {w};
      best_len = w.length();
    } else if (w.length() == best_len) {
      best.push_back(w);
    }
  }
  return best;
}

/// Bruhat order by the tableau criterion: for every prefix length i, the
/// sorted values w(1..i) are entrywise <= the sorted values v(1..i).
inline bool bruhat_by_sorted_prefixes(const Permutation& w, const Permutation& v) {
  for (int i = 1; i <= w.n(); ++i) {
    std::vector<int> a(w.images().begin(), w.images().begin() + i);
    std::vector<int> b(v.images().begin(), v.images().begin() + i);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (int k = 0; k < i; ++k) {
      if (a[static_cast<std::size_t>(k)] > b[static_cast<std::size_t>(k)]) return false;
    }
  }
  return true;
}

/// a dominates b (both partitions padded to the same length).
inline bool dominance_by_prefix_sums(const Composition& a, const Composition& b) {
  long sa = 0, sb = 0;
  for (int i = 1; i <= a.n(); ++i) {
    sa += a.part(i);
    sb += b.part(i);
    if (sa < sb) return false;
  }
  return sa == sb;
}

inline MPoly<AlphaPoly> x(int n, int i) { return MPoly<AlphaPoly>::variable(n, i); }

inline MPoly<AlphaPoly> mono(std::initializer_list<int> e, AlphaPoly c = AlphaPoly(1)) {
  return MPoly<AlphaPoly>::monomial(Monomial(e), c);
}

inline const AlphaPoly a = AlphaPoly::alpha();

}  // namespace support
