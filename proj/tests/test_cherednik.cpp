#include <doctest.h>

#include <random>

#include "jack/cherednik.hpp"
#include "jack/recursion.hpp"
#include "support.hpp"

using namespace jack;
using support::a;
using support::mono;
using support::x;
using P = MPoly<AlphaPoly>;
using Q = MPoly<AlphaFrac>;
using R = MPoly<mpq_class>;

namespace {

R rmono(std::initializer_list<int> e, mpq_class c = 1) { return R::monomial(Monomial(e), c); }

}  // namespace

TEST_CASE("xi examples") {
  CHECK(xi_apply(1, x(2, 1)) == x(2, 1) * a + x(2, 2));
  CHECK(xi_apply(2, P::constant(2, AlphaPoly(1))) == P::constant(2, AlphaPoly(-1)));
  const Q e = E_nonsym({1, 0});
  CHECK(xi_apply(1, e) == e * AlphaFrac(a));
  CHECK_THROWS_AS((xi_apply(3, x(2, 1))), std::out_of_range);
}

TEST_CASE("eigenvalue examples") {
  const EigenVerdict zero = verify_eigen({0, 0, 0});
  CHECK(zero.pass);
  CHECK(zero.per_index.size() == 3);
  for (int i = 1; i <= 3; ++i) {
    CHECK(xi_apply(i, P::constant(3, AlphaPoly(1))) == P::constant(3, AlphaPoly(1 - i)));
  }
  CHECK(verify_eigen({1, 0}).pass);
  CHECK(eigenvalue({1, 0}, 2) == AlphaPoly(-1));
  CHECK(verify_eigen({0, 2, 1}).pass);
}

TEST_CASE("E are eigenfunctions (n <= 3, degree <= 4)") {
  for (int n = 1; n <= 3; ++n) {
    for (int d = 0; d <= 4; ++d) {
      for (const Composition& lam : compositions(n, d)) CHECK(verify_eigen(lam).pass);
    }
  }
}

TEST_CASE("xi acts triangularly on monomials") {
  for (int n = 1; n <= 3; ++n) {
    for (int d = 0; d <= 3; ++d) {
      for (const Composition& lam : compositions(n, d)) {
        const P f = P::monomial(Monomial(lam), AlphaPoly(1));
        for (int i = 1; i <= n; ++i) {
          const P g = xi_apply(i, f);
          CHECK(g.coefficient(Monomial(lam)) == eigenvalue(lam, i));
          for (const auto& [m, c] : g.terms()) {
            const Composition mu = m.to_composition();
            if (mu != lam) CHECK(compare(mu, lam) == Order::Less);
          }
        }
      }
    }
  }
}

TEST_CASE("graded Hecke relations") {
  const RelationReport two = hecke_relations_check(2, 3);
  CHECK(two.pass);
  CHECK(two.checked > 0);
  CHECK_FALSE(two.failure.has_value());
  CHECK(hecke_relations_check(3, 3).pass);
  CHECK(hecke_relations_check(1, 3).pass);

  // xi_1 commutes with s_2 when n = 3.
  for (const Monomial& m : monomials_up_to(3, 3)) {
    const P f = P::monomial(m, AlphaPoly(1));
    CHECK(xi_apply(1, simple_reflection(2, f)) == simple_reflection(2, xi_apply(1, f)));
  }

  const P f = mono({1, 1, 0});
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) CHECK(xi_apply(i, xi_apply(j, f)) == xi_apply(j, xi_apply(i, f)));
  }
}

TEST_CASE("xi_i does not commute with s_{i-1}") {
  const P f = x(3, 1);
  CHECK_FALSE(xi_apply(2, simple_reflection(1, f)) == simple_reflection(1, xi_apply(2, f)));
}

TEST_CASE("Phi relations carry an alpha shift") {
  CHECK(phi_relations_check(2, 3).pass);
  CHECK(phi_relations_check(3, 3).pass);

  // With a shift of 1 the relation already fails on f = 1 for generic alpha.
  const P one = P::constant(2, AlphaPoly(1));
  const P lhs = xi_apply(2, phi(one));
  CHECK(lhs == x(2, 2) * a);
  CHECK_FALSE(lhs == phi(xi_apply(1, one) + one));
  CHECK(lhs == phi(xi_apply(1, one) + one * a));
  CHECK(specialize(lhs, 1) == specialize(phi(xi_apply(1, one) + one), 1));
}

TEST_CASE("restriction commutes with xi") {
  CHECK(restriction_commutes_check(2, 3).pass);
  CHECK(restriction_commutes_check(3, 3).pass);
  CHECK_THROWS_AS((restriction_commutes_check(1, 3)), std::invalid_argument);
}

TEST_CASE("scalar product examples") {
  const PairingContext ctx(2, 1);
  CHECK(ctx.alpha() == mpq_class(1));
  CHECK(scalar_product(rmono({0, 0}), rmono({0, 0}), ctx) == 2);
  CHECK(scalar_product(rmono({1, 0}), rmono({0, 1}), ctx) == -1);
  const R e = specialize(E_nonsym({1, 0}), mpq_class(1));
  CHECK(scalar_product(e, rmono({0, 1}), ctx) == 0);
  CHECK_THROWS_AS((PairingContext(0, 1)), std::invalid_argument);
  CHECK_THROWS_AS((scalar_product(rmono({0}), rmono({0}), ctx)), std::invalid_argument);
}

TEST_CASE("weight constant terms") {
  // Dyson: the constant term is (nk)! / (k!)^n.
  CHECK(constant_term(PairingContext(2, 1).delta()) == 2);
  CHECK(constant_term(PairingContext(3, 1).delta()) == 6);
  CHECK(constant_term(PairingContext(2, 2).delta()) == 6);
  CHECK(constant_term(PairingContext(3, 2).delta()) == 90);
}

TEST_CASE("weight is invariant under permutations") {
  for (int n = 2; n <= 3; ++n) {
    for (int k = 1; k <= 2; ++k) {
      const PairingContext ctx(n, k);
      for (const Permutation& w : support::all_permutations(n)) CHECK(act(w, ctx.delta()) == ctx.delta());
      CHECK(invert_variables(ctx.delta()) == ctx.delta());
    }
  }
}

TEST_CASE("orthogonality examples") {
  const OrthogonalityVerdict v10 = verify_orthogonality({1, 0}, 1);
  CHECK(v10.pass);
  CHECK(v10.checked >= 1);
  CHECK(verify_orthogonality({1, 1}, 1).pass);
  CHECK(verify_orthogonality({2, 0}, 1).pass);
  CHECK_FALSE(verify_orthogonality({2, 0}, 1).counterexample.has_value());
}

TEST_CASE("orthogonality holds for small shapes") {
  for (int k = 1; k <= 2; ++k) {
    for (int n = 1; n <= 3; ++n) {
      for (int d = 0; d <= 3; ++d) {
        for (const Composition& lam : compositions(n, d)) CHECK(verify_orthogonality(lam, k).pass);
      }
    }
  }
}

TEST_CASE("self-adjointness examples") {
  const AdjointVerdict v = verify_self_adjoint(1, rmono({1, 0}), rmono({0, 1}), PairingContext(2, 1));
  CHECK(v.pass);
  CHECK(v.lhs == v.rhs);
  CHECK(verify_self_adjoint(2, rmono({1, 1}), rmono({1, 1}), PairingContext(2, 1)).pass);
  CHECK(verify_self_adjoint(1, rmono({2, 0}), rmono({1, 1}), PairingContext(2, 2)).pass);
}

TEST_CASE("xi is self-adjoint on random polynomials (property)") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 2;
    const int k = 1 + (trial / 2) % 2;
    const PairingContext ctx(n, k);
    const auto monos = monomials_up_to(n, 2);
    R f(n), g(n);
    for (const Monomial& m : monos) {
      f.add_term(m, mpq_class(coef(rng)));
      g.add_term(m, mpq_class(coef(rng)));
    }
    std::uniform_int_distribution<int> pick(1, n);
    CHECK(verify_self_adjoint(pick(rng), f, g, ctx).pass);
  }
}

TEST_CASE("monomial enumeration") {
  CHECK(monomials_up_to(2, 2).size() == 6);
  CHECK(monomials_up_to(3, 0).size() == 1);
  CHECK(monomials_up_to(3, 2).size() == 10);
}
