#include "jack/cherednik.hpp"

#include <sstream>
#include <stdexcept>

#include "jack/recursion.hpp"
#include "jack/symmetric.hpp"

namespace jack {

PairingContext::PairingContext(int n, int k) : n_(n), k_(k), delta_(n) {
  if (n < 1 || k < 1) throw std::invalid_argument("PairingContext needs n >= 1 and k >= 1");
  delta_ = MPoly<mpz_class>::constant(n, mpz_class(1));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      Monomial ratio(n);
      ratio.set(i - 1, 1);
      ratio.set(j - 1, -1);
      MPoly<mpz_class> factor = MPoly<mpz_class>::constant(n, mpz_class(1));
      factor.add_term(ratio, mpz_class(-1));
      for (int r = 0; r < k; ++r) delta_ = delta_ * factor;
    }
  }
}

mpq_class scalar_product(const MPoly<mpq_class>& f, const MPoly<mpq_class>& g, const PairingContext& ctx) {
  if (f.nvars() != ctx.n() || g.nvars() != ctx.n()) {
    throw std::invalid_argument("scalar_product: variable count mismatch");
  }
  mpq_class total = 0;
  for (const auto& [a, fa] : f.terms()) {
    if (a.has_negative()) throw std::invalid_argument("scalar_product: Laurent input");
    for (const auto& [b, gb] : g.terms()) {
      const mpz_class weight = ctx.delta().coefficient(b - a);
      if (sgn(weight) != 0) total += fa * gb * mpq_class(weight);
    }
  }
  return total;
}

EigenVerdict verify_eigen(const Composition& lambda) {
  const MPoly<AlphaFrac> e = E_nonsym(lambda);
  EigenVerdict v;
  v.pass = true;
  for (int i = 1; i <= lambda.n(); ++i) {
    const bool ok = xi_apply(i, e) == e * AlphaFrac(eigenvalue(lambda, i));
    v.per_index.push_back(ok);
    v.pass = v.pass && ok;
  }
  return v;
}

std::vector<Monomial> monomials_up_to(int n, int max_degree) {
  std::vector<Monomial> out;
  for (int d = 0; d <= max_degree; ++d) {
    for (const Composition& c : compositions(n, d)) out.emplace_back(c);
  }
  return out;
}

namespace {

using Poly = MPoly<AlphaPoly>;

std::string describe(const std::string& identity, const Monomial& m) {
  std::ostringstream os;
  os << identity << " fails on x^(";
  for (int k = 0; k < m.n(); ++k) os << (k ? "," : "") << m[k];
  os << ')';
  return os.str();
}

void record(RelationReport& report, bool ok, const std::string& identity, const Monomial& m) {
  ++report.checked;
  if (!ok && report.pass) {
    report.pass = false;
    report.failure = describe(identity, m);
  }
}

std::string xi(int i) { return "xi_" + std::to_string(i); }
std::string s_(int i) { return "s_" + std::to_string(i); }

}  // namespace

RelationReport hecke_relations_check(int n, int max_degree) {
  RelationReport report;
  for (const Monomial& m : monomials_up_to(n, max_degree)) {
    const Poly f = Poly::monomial(m, AlphaPoly(1));
    std::vector<Poly> xi_f;
    for (int i = 1; i <= n; ++i) xi_f.push_back(xi_apply(i, f));
    for (int i = 1; i < n; ++i) {
      const Poly sf = simple_reflection(i, f);
      record(report, xi_apply(i, sf) - simple_reflection(i, xi_f[i]) == f,
             xi(i) + " " + s_(i) + " - " + s_(i) + " " + xi(i + 1) + " = 1", m);
      record(report, xi_apply(i + 1, sf) - simple_reflection(i, xi_f[i - 1]) == -f,
             xi(i + 1) + " " + s_(i) + " - " + s_(i) + " " + xi(i) + " = -1", m);
    }
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j < n; ++j) {
        if (j == i || j + 1 == i) continue;
        record(report, xi_apply(i, simple_reflection(j, f)) == simple_reflection(j, xi_f[i - 1]),
               xi(i) + " " + s_(j) + " = " + s_(j) + " " + xi(i), m);
      }
    }
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        record(report, xi_apply(i, xi_f[j - 1]) == xi_apply(j, xi_f[i - 1]), "[" + xi(i) + ", " + xi(j) + "] = 0", m);
      }
    }
  }
  return report;
}

RelationReport phi_relations_check(int n, int max_degree) {
  RelationReport report;
  for (const Monomial& m : monomials_up_to(n, max_degree)) {
    const Poly f = Poly::monomial(m, AlphaPoly(1));
    const Poly pf = phi(f);
    for (int i = 1; i < n; ++i) {
      record(report, xi_apply(i, pf) == phi(xi_apply(i + 1, f)), xi(i) + " Phi = Phi " + xi(i + 1), m);
    }
    record(report, xi_apply(n, pf) == phi(xi_apply(1, f) + f * AlphaPoly::alpha()), xi(n) + " Phi = Phi (xi_1 + alpha)",
           m);
  }
  return report;
}

RelationReport restriction_commutes_check(int n, int max_degree) {
  if (n < 2) throw std::invalid_argument("restriction_commutes_check needs n >= 2");
  RelationReport report;
  const int last[] = {n};
  for (const Monomial& m : monomials_up_to(n - 1, max_degree)) {
    const Poly small = Poly::monomial(m, AlphaPoly(1));
    const Poly big = embed(small, n);
    for (int i = 1; i < n; ++i) {
      const Poly restricted = remove_variables(substitute_zero(xi_apply(i, big), last), last);
      record(report, restricted == xi_apply(i, small), xi(i) + " commutes with x_" + std::to_string(n) + " = 0", m);
    }
  }
  return report;
}

OrthogonalityVerdict verify_orthogonality(const Composition& lambda, int k) {
  const int n = lambda.n();
  const PairingContext ctx(n, k);
  OrthogonalityVerdict v;
  const MPoly<mpq_class> e = specialize(E_nonsym(lambda), ctx.alpha());
  for (const Composition& mu : compositions(n, lambda.degree())) {
    if (compare(mu, lambda) != Order::Less) continue;
    ++v.checked;
    const auto xm = MPoly<mpq_class>::monomial(Monomial(mu), mpq_class(1));
    if (sgn(scalar_product(e, xm, ctx)) != 0 && v.pass) {
      v.pass = false;
      v.counterexample = mu;
    }
  }
  if (lambda.is_partition()) {
    const MPoly<mpq_class> p = specialize(P_sym(lambda, n), ctx.alpha());
    for (const Composition& mu : partitions(n, lambda.degree())) {
      if (compare(mu, lambda) != Order::Less) continue;
      ++v.checked;
      if (sgn(scalar_product(p, monomial_symmetric<mpq_class>(mu), ctx)) != 0 && v.pass) {
        v.pass = false;
        v.counterexample = mu;
      }
    }
  }
  return v;
}

AdjointVerdict verify_self_adjoint(int i, const MPoly<mpq_class>& f, const MPoly<mpq_class>& g,
                                   const PairingContext& ctx) {
  const mpq_class alpha = ctx.alpha();
  AdjointVerdict v;
  v.lhs = scalar_product(xi_apply(i, f, alpha), g, ctx);
  v.rhs = scalar_product(f, xi_apply(i, g, alpha), ctx);
  v.pass = v.lhs == v.rhs;
  return v;
}

}  // namespace jack
