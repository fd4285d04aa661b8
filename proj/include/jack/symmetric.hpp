#pragma once

// Symmetric Jack polynomials J_lambda and P_lambda built from the
// non-symmetric ones, expansions in (augmented, partially symmetric) monomial
// bases, and independent reference constructions used as oracles.

#include <functional>
#include <map>
#include <set>

#include "jack/composition.hpp"
#include "jack/mpoly.hpp"
#include "jack/recursion.hpp"

namespace jack {

/// Coefficients keyed by exponent pattern, largest (lexicographically) first.
template <class C>
using Expansion = std::map<Composition, C, std::greater<>>;

/// m_mu: sum of the distinct permutations of x^mu; mu is padded to its length n.
template <class C>
MPoly<C> monomial_symmetric(const Composition& mu) {
  std::vector<int> e = mu.parts();
  std::sort(e.begin(), e.end());
  MPoly<C> out(mu.n());
  do {
    out.add_term(Monomial(std::span<const int>(e)), C(1L));
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

/// m~^(m)_mu = u_{mu''} * sum over distinct rearrangements rho of the tail
/// mu'' = (mu_{m+1}, ..., mu_n) of x^{mu' rho}.
MPoly<AlphaPoly> augmented_partial_monomial(const Composition& mu, int m);

/// J_lambda in n - l(lambda) variables as F_{lambda padded}(0, .., 0, x_{m+1}, .., x_n),
/// m = l(lambda). Requires n >= 2 l(lambda) and n >= 1.
MPoly<AlphaPoly> J_via_restriction(const Composition& partition, int n, MemoStore& memo);
MPoly<AlphaPoly> J_via_restriction(const Composition& partition, int n);

/// J_lambda in n variables as (1/(n-m)!) sum_{w in S_n} w Phi^m F_{lambda^0}.
/// Requires l(lambda) <= n <= 6 (n! terms).
MPoly<AlphaPoly> J_via_symmetrization(const Composition& partition, int n, MemoStore& memo);
MPoly<AlphaPoly> J_via_symmetrization(const Composition& partition, int n);

/// Production route for J_lambda in `nvars` variables (restriction from
/// nvars + l(lambda) variables); zero when nvars < l(lambda).
MPoly<AlphaPoly> jack_J(const Composition& partition, int nvars, MemoStore& memo);
MPoly<AlphaPoly> jack_J(const Composition& partition, int nvars);

/// P_lambda = J_lambda / prod_s c_lambda(s) in n variables.
MPoly<AlphaFrac> P_sym(const Composition& partition, int n, MemoStore& memo);
MPoly<AlphaFrac> P_sym(const Composition& partition, int n);

/// Expansion of a symmetric polynomial in monomial symmetric functions by
/// repeatedly peeling off the leading partition term. Throws
/// std::invalid_argument when f is not symmetric.
template <class C>
Expansion<C> expand_in_monomials(const MPoly<C>& f) {
  if (!is_symmetric(f)) throw std::invalid_argument("expand_monomial: input is not symmetric");
  Expansion<C> out;
  MPoly<C> rest = f;
  while (!rest.is_zero()) {
    const auto& [lead, coef] = *rest.terms().begin();
    if (!lead.is_partition()) throw std::invalid_argument("expand_monomial: input is not symmetric");
    const Composition mu = lead.to_composition();
    const C v = coef;
    rest -= monomial_symmetric<C>(mu) * v;
    out.emplace(mu, v);
  }
  return out;
}

struct MonomialExpansion {
  Expansion<AlphaPoly> v;        // J = sum v_mu m_mu
  Expansion<AlphaPoly> v_tilde;  // v_mu / u_mu
};

/// Throws std::invalid_argument for non-symmetric input and std::domain_error
/// when some v_mu is not divisible by u_mu.
MonomialExpansion expand_monomial(const MPoly<AlphaPoly>& f);

struct PartialSymExpansion {
  int m = 0;
  Expansion<AlphaPoly> a;  // f = sum a_mu m~^(m)_mu over mu with partition tail
};

/// Throws std::invalid_argument unless f is symmetric in x_{m+1}..x_n, and
/// std::domain_error when a coefficient is not divisible by u_{mu''}.
PartialSymExpansion expand_partial_sym(const MPoly<AlphaPoly>& f, int m);

/// Schur polynomial by semistandard tableau enumeration.
MPoly<mpz_class> schur_oracle(const Composition& partition, int n);

/// e_{r_1} e_{r_2} ... in n variables.
MPoly<mpz_class> elementary_product(const Composition& parts, int n);

/// E_lambda at alpha = 1/k built from its definition: x^lambda plus lower
/// terms, orthogonal to x^mu for every mu < lambda. Throws std::runtime_error
/// when the linear system is singular.
MPoly<mpq_class> gram_schmidt_oracle(const Composition& lambda, int k);

}  // namespace jack
