#pragma once

// Non-symmetric Jack polynomials through the creation-operator recursion
// F_lambda = ((lambda-bar_m + m) Phi_m + Phi_{m+1} + ... + Phi_n) F_{lambda*}
// with m = l(lambda), plus the auxiliary operators it is built from.

#include <cstddef>
#include <map>
#include <optional>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "jack/composition.hpp"
#include "jack/mpoly.hpp"

namespace jack {

/// Phi_k = x_k s_{k-1} ... s_1. On monomials the exponent vector nu maps to
/// (nu_2, ..., nu_k, nu_1 + 1, nu_{k+1}, ..., nu_n).
template <class C>
MPoly<C> phi_k(int k, const MPoly<C>& f) {
  if (k < 1 || k > f.nvars()) throw std::out_of_range("phi_k index");
  return transform_terms(f, f.nvars(), [&](const Monomial& m, const C& c, MPoly<C>& out) {
    Monomial r = m;
    for (int v = 0; v + 1 < k; ++v) r.set(v, m[v + 1]);
    r.set(k - 1, m[0] + 1);
    out.add_term(r, c);
  });
}

/// Phi = Phi_n: (Phi f)(x_1..x_n) = x_n f(x_n, x_1, ..., x_{n-1}).
template <class C>
MPoly<C> phi(const MPoly<C>& f) {
  return phi_k(f.nvars(), f);
}

/// Thread-safe memo of F_lambda keyed by the composition (which fixes n).
class MemoStore {
 public:
  MemoStore() = default;
  MemoStore(const MemoStore&) = delete;
  MemoStore& operator=(const MemoStore&) = delete;

  std::optional<MPoly<AlphaPoly>> find(const Composition& lambda) const;
  void insert(const Composition& lambda, MPoly<AlphaPoly> f);
  std::size_t size() const;
  std::size_t total_terms() const;
  void clear();
  /// Entries in composition order.
  std::vector<std::pair<Composition, MPoly<AlphaPoly>>> snapshot() const;

 private:
  mutable std::shared_mutex mutex_;
  std::map<Composition, MPoly<AlphaPoly>> entries_;
};

/// F_lambda with coefficients in Z[alpha]; F_0 = 1.
MPoly<AlphaPoly> F_nonsym(const Composition& lambda, MemoStore& memo);
MPoly<AlphaPoly> F_nonsym(const Composition& lambda);

/// Monic E_lambda = F_lambda / prod_s d_lambda(s).
MPoly<AlphaFrac> E_nonsym(const Composition& lambda, MemoStore& memo);
MPoly<AlphaFrac> E_nonsym(const Composition& lambda);

/// (x s_i + 1)(f) / x with x = lambda-bar_i - lambda-bar_{i+1}; maps
/// E_{s_i lambda} to E_lambda. Requires lambda_i > lambda_{i+1}.
MPoly<AlphaFrac> swap_op(const Composition& lambda, int i, const MPoly<AlphaFrac>& f);

/// X_lambda = (lambda-bar_m + m) s_m ... s_{n-1} + sum_{i=m+1}^{n} s_i ... s_{n-1}.
/// Requires l(lambda) >= 1.
MPoly<AlphaPoly> creation_X(const Composition& lambda, const MPoly<AlphaPoly>& f);
MPoly<AlphaFrac> creation_X(const Composition& lambda, const MPoly<AlphaFrac>& f);

struct CyclicWitness {
  bool holds = false;
  MPoly<AlphaFrac> lhs;  // E_lambda
  MPoly<AlphaFrac> rhs;  // Phi(E_{lambda*})
};

/// Checks E_lambda = Phi(E_{lambda*}) for lambda_n != 0, where
/// lambda* = (lambda_n - 1, lambda_1, ..., lambda_{n-1}).
CyclicWitness cyclic_phi(const Composition& lambda);

}  // namespace jack
