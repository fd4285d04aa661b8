#pragma once

// Cherednik operators
//   xi_i = alpha x_i d/dx_i + sum_{j<i} N_ij x_j + sum_{j>i} x_j N_ij,
// their graded-Hecke relations, and the constant-term scalar product
//   <f, g> = CT[ f(x) g(x^-1) prod_{i != j} (1 - x_i/x_j)^k ],  alpha = 1/k.

#include <optional>
#include <string>
#include <vector>

#include "jack/composition.hpp"
#include "jack/mpoly.hpp"

namespace jack {

/// Applies xi_i with alpha taken from the coefficient ring. The operator order
/// is as written: N_ij after multiplication by x_j for j < i, multiplication by
/// x_j after N_ij for j > i.
template <class C>
MPoly<C> xi_apply(int i, const MPoly<C>& f, const C& alpha) {
  const int n = f.nvars();
  if (i < 1 || i > n) throw std::out_of_range("xi_apply index");
  MPoly<C> out = euler(i, f) * alpha;
  for (int j = 1; j < i; ++j) out += divided_transposition(i, j, multiply_variable(j, f));
  for (int j = i + 1; j <= n; ++j) out += multiply_variable(j, divided_transposition(i, j, f));
  return out;
}

inline MPoly<AlphaPoly> xi_apply(int i, const MPoly<AlphaPoly>& f) { return xi_apply(i, f, AlphaPoly::alpha()); }
inline MPoly<AlphaFrac> xi_apply(int i, const MPoly<AlphaFrac>& f) {
  return xi_apply(i, f, AlphaFrac(AlphaPoly::alpha()));
}

/// Weight of the scalar product at alpha = 1/k. Immutable after construction.
class PairingContext {
 public:
  /// Throws std::invalid_argument unless n >= 1 and k >= 1.
  PairingContext(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  mpq_class alpha() const { return mpq_class(1, k_); }
  /// prod_{i != j} (1 - x_i x_j^{-1})^k, expanded as a Laurent polynomial.
  const MPoly<mpz_class>& delta() const { return delta_; }

 private:
  int n_;
  int k_;
  MPoly<mpz_class> delta_;
};

/// Constant term of f(x) g(x^{-1}) delta(x). f and g must be polynomials in
/// ctx.n() variables.
mpq_class scalar_product(const MPoly<mpq_class>& f, const MPoly<mpq_class>& g, const PairingContext& ctx);

struct EigenVerdict {
  std::vector<bool> per_index;  // per_index[i-1]: xi_i E = lambda-bar_i E
  bool pass = false;
};

/// Checks xi_i E_lambda = lambda-bar_i E_lambda for every i.
EigenVerdict verify_eigen(const Composition& lambda);

struct RelationReport {
  bool pass = true;
  std::size_t checked = 0;          // individual identities evaluated
  std::optional<std::string> failure;  // first failing identity
};

/// On every monomial of degree <= max_degree in n variables:
///   xi_i s_i - s_i xi_{i+1} = 1,  xi_{i+1} s_i - s_i xi_i = -1,
///   xi_i s_j = s_j xi_i when s_j fixes i,  [xi_i, xi_j] = 0.
RelationReport hecke_relations_check(int n, int max_degree);

/// xi_i Phi = Phi xi_{i+1} (i < n) and xi_n Phi = Phi (xi_1 + alpha) on every
/// monomial of degree <= max_degree. The shift is alpha because the Euler
/// term of xi_n carries the factor alpha; "+1" holds only at alpha = 1.
RelationReport phi_relations_check(int n, int max_degree);

/// Setting x_n = 0 commutes with xi_1..xi_{n-1} on monomials free of x_n.
RelationReport restriction_commutes_check(int n, int max_degree);

struct OrthogonalityVerdict {
  bool pass = true;
  std::size_t checked = 0;
  std::optional<Composition> counterexample;  // offending mu
};

/// <E_lambda, x^mu> = 0 at alpha = 1/k for every mu < lambda; when lambda is a
/// partition also <P_lambda, m_mu> = 0 for partitions mu < lambda.
OrthogonalityVerdict verify_orthogonality(const Composition& lambda, int k);

struct AdjointVerdict {
  bool pass = false;
  mpq_class lhs;  // <xi_i f, g>
  mpq_class rhs;  // <f, xi_i g>
};

/// <xi_i f, g> = <f, xi_i g> with alpha = 1/ctx.k().
AdjointVerdict verify_self_adjoint(int i, const MPoly<mpq_class>& f, const MPoly<mpq_class>& g,
                                   const PairingContext& ctx);

/// Every monomial of total degree <= max_degree in n variables.
std::vector<Monomial> monomials_up_to(int n, int max_degree);

}  // namespace jack
