#include "jack/verify.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "jack/cherednik.hpp"
#include "jack/recursion.hpp"
#include "jack/symmetric.hpp"
#include "jack/tableau.hpp"

namespace jack {

using io::json;

json to_json(const Verdict& v) {
  return {{"check", v.check}, {"theorem", v.theorem}, {"params", v.params},
          {"pass", v.pass},   {"count", v.count},     {"counterexample", v.counterexample}};
}

namespace {

class Sweep {
 public:
  Sweep(std::string check, std::string theorem, json params) {
    v_.check = std::move(check);
    v_.theorem = std::move(theorem);
    v_.params = std::move(params);
  }

  void record(bool ok, const std::function<json()>& witness) {
    ++v_.count;
    if (!ok && v_.pass) {
      v_.pass = false;
      v_.counterexample = witness();
    }
  }

  /// Folds in a batch of `count` cases evaluated elsewhere.
  void record_batch(std::size_t count, bool ok, const std::function<json()>& witness) {
    v_.count += count;
    if (!ok && v_.pass) {
      v_.pass = false;
      v_.counterexample = witness();
    }
  }

  Verdict done() { return std::move(v_); }

 private:
  Verdict v_;
};

json bounds(int n_max, int deg_max) { return {{"n_max", n_max}, {"deg_max", deg_max}}; }

/// Calls fn(lambda) for every composition with 1..n_max parts and degree
/// 0..deg_max.
void for_compositions(int n_max, int deg_max, const std::function<void(const Composition&)>& fn) {
  for (int n = 1; n <= n_max; ++n) {
    for (int d = 0; d <= deg_max; ++d) {
      for (const Composition& c : compositions(n, d)) fn(c);
    }
  }
}

json lam(const Composition& c) { return io::to_json(c); }

mpz_class factorial(int n) {
  mpz_class f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

/// Partitions of degree d padded to exactly their length (at least one part).
std::vector<Composition> trimmed_partitions(int d) {
  std::vector<Composition> out;
  for (const Composition& p : partitions(std::max(d, 1), d)) out.push_back(p.resized(std::max(p.length(), 1)));
  return out;
}

}  // namespace

Verdict check_oracle_equivalence(int n_max, int deg_max) {
  Sweep s("oracle-equivalence", "F_lambda equals the sum of d^0_T x^T over 0-admissible tableaux T",
          bounds(n_max, deg_max));
  MemoStore memo;
  for_compositions(n_max, deg_max, [&](const Composition& lambda) {
    s.record(F_comb(lambda) == F_nonsym(lambda, memo), [&] { return json{{"lambda", lam(lambda)}}; });
  });
  return s.done();
}

Verdict check_eigen(int n_max, int deg_max) {
  Sweep s("eigen", "xi_i E_lambda = lambda-bar_i E_lambda for every i", bounds(n_max, deg_max));
  for_compositions(n_max, deg_max, [&](const Composition& lambda) {
    const EigenVerdict v = verify_eigen(lambda);
    for (std::size_t i = 0; i < v.per_index.size(); ++i) {
      s.record(v.per_index[i], [&] { return json{{"lambda", lam(lambda)}, {"i", i + 1}}; });
    }
  });
  return s.done();
}

Verdict check_operator_relations(int n_max, int deg_max) {
  Sweep s("hecke",
          "xi_i s_i - s_i xi_{i+1} = 1, xi_{i+1} s_i - s_i xi_i = -1, xi_i s_j = s_j xi_i, [xi_i, xi_j] = 0, "
          "xi_i Phi = Phi xi_{i+1}, xi_n Phi = Phi (xi_1 + alpha), and x_n = 0 commutes with xi_1..xi_{n-1}",
          bounds(n_max, deg_max));
  auto absorb = [&](int n, const RelationReport& r) {
    s.record_batch(r.checked, r.pass, [&] { return json{{"n", n}, {"failure", r.failure.value_or("")}}; });
  };
  for (int n = 1; n <= n_max; ++n) {
    absorb(n, hecke_relations_check(n, deg_max));
    absorb(n, phi_relations_check(n, deg_max));
    if (n >= 2) absorb(n, restriction_commutes_check(n, deg_max));
  }
  return s.done();
}

Verdict check_orthogonality(int n_max, int deg_max, const std::vector<int>& k_list) {
  json params = bounds(n_max, deg_max);
  params["k_list"] = k_list;
  Sweep s("orthogonality",
          "<E_lambda, x^mu> = 0 for mu < lambda, <P_lambda, m_mu> = 0 for partitions mu < lambda, and E_lambda "
          "at alpha = 1/k equals its Gram-Schmidt construction",
          params);
  for (int k : k_list) {
    for_compositions(n_max, deg_max, [&](const Composition& lambda) {
      const OrthogonalityVerdict v = verify_orthogonality(lambda, k);
      s.record(v.pass, [&] {
        return json{{"lambda", lam(lambda)}, {"k", k}, {"mu", v.counterexample ? lam(*v.counterexample) : json()}};
      });
      const MPoly<mpq_class> gs = gram_schmidt_oracle(lambda, k);
      s.record(gs == specialize(E_nonsym(lambda), mpq_class(1, k)),
               [&] { return json{{"lambda", lam(lambda)}, {"k", k}, {"gram_schmidt", "mismatch"}}; });
    });
  }
  return s.done();
}

Verdict check_monomial_positivity(int n, int deg_max) {
  Sweep s("positivity", "J_lambda = sum u_mu v~_{lambda mu} m_mu with every v~_{lambda mu} in N[alpha]",
          json{{"n", n}, {"deg_max", deg_max}});
  MemoStore memo;
  for (int d = 0; d <= deg_max; ++d) {
    for (const Composition& lambda : partitions(n, d)) {
      MonomialExpansion e;
      try {
        e = expand_monomial(jack_J(lambda, n, memo));
      } catch (const std::domain_error& err) {
        s.record(false, [&] { return json{{"lambda", lam(lambda)}, {"error", err.what()}}; });
        continue;
      }
      for (const auto& [mu, v] : e.v_tilde) {
        s.record(v.is_nonnegative(),
                 [&] { return json{{"lambda", lam(lambda)}, {"mu", lam(mu)}, {"v_tilde", io::to_json(v)}}; });
      }
    }
  }
  return s.done();
}

Verdict check_partial_positivity(int n_max, int deg_max) {
  Sweep s("positivity", "F_lambda = sum a_{lambda mu} m~^(m)_mu with m = l(lambda) and every a_{lambda mu} in N[alpha]",
          bounds(n_max, deg_max));
  MemoStore memo;
  for_compositions(n_max, deg_max, [&](const Composition& lambda) {
    PartialSymExpansion e;
    try {
      e = expand_partial_sym(F_nonsym(lambda, memo), lambda.length());
    } catch (const std::exception& err) {
      s.record(false, [&] { return json{{"lambda", lam(lambda)}, {"error", err.what()}}; });
      return;
    }
    for (const auto& [mu, a] : e.a) {
      s.record(a.is_nonnegative(),
               [&] { return json{{"lambda", lam(lambda)}, {"mu", lam(mu)}, {"a", io::to_json(a)}}; });
    }
  });
  return s.done();
}

Verdict check_coefficient_nonsym(int deg_max) {
  Sweep s("coeff-identities", "the coefficient of x_{m+1}...x_{m+d} in F_lambda is d! (m = l(lambda), d = |lambda|)",
          json{{"deg_max", deg_max}});
  for (int d = 1; d <= deg_max; ++d) {
    for (int l = 1; l <= d; ++l) {
      for (const Composition& c : compositions(l, d)) {
        if (c.part(l) == 0) continue;
        const Composition lambda = c.resized(l + d);
        Monomial block(l + d);
        for (int k = l; k < l + d; ++k) block.set(k, 1);
        s.record(F_nonsym(lambda).coefficient(block) == AlphaPoly(factorial(d)),
                 [&] { return json{{"lambda", lam(lambda)}}; });
      }
    }
  }
  return s.done();
}

Verdict check_coefficient_sym(int deg_max) {
  Sweep s("coeff-identities", "the coefficient of m_{1^d} in J_lambda is d! (d = |lambda| = n)",
          json{{"deg_max", deg_max}});
  for (int d = 1; d <= deg_max; ++d) {
    Monomial ones(d);
    for (int k = 0; k < d; ++k) ones.set(k, 1);
    for (const Composition& lambda : partitions(d, d)) {
      s.record(jack_J(lambda, d).coefficient(ones) == AlphaPoly(factorial(d)),
               [&] { return json{{"lambda", lam(lambda)}}; });
    }
  }
  return s.done();
}

Verdict check_stability(int n_max, int deg_max) {
  Sweep s("stability", "E_lambda at x_n = 0 is E of lambda without its last zero part; s_i E_lambda = E_lambda when "
                       "lambda_i = lambda_{i+1}",
          bounds(n_max, deg_max));
  for_compositions(n_max, deg_max, [&](const Composition& lambda) {
    const int n = lambda.n();
    const MPoly<AlphaFrac> e = E_nonsym(lambda);
    if (n >= 2 && lambda.part(n) == 0) {
      const int last[] = {n};
      const auto restricted = remove_variables(substitute_zero(e, last), last);
      s.record(restricted == E_nonsym(lambda.resized(n - 1)),
               [&] { return json{{"lambda", lam(lambda)}, {"property", "stability"}}; });
    }
    for (int i = 1; i < n; ++i) {
      if (lambda.part(i) != lambda.part(i + 1)) continue;
      s.record(simple_reflection(i, e) == e,
               [&] { return json{{"lambda", lam(lambda)}, {"i", i}, {"property", "symmetry"}}; });
    }
  });
  return s.done();
}

Verdict check_sym_routes(int n_max, int deg_max) {
  Sweep s("sym-routes",
          "J_lambda by symmetrizing Phi^m F_{lambda^0}, by restricting F_lambda to x_1 = ... = x_m = 0, and by the "
          "admissible-tableau sum coincide",
          bounds(n_max, deg_max));
  MemoStore memo;
  for (int d = 0; d <= deg_max; ++d) {
    for (const Composition& lambda : trimmed_partitions(d)) {
      const int l = lambda.length();
      for (int n = std::max(l, 1); n <= std::min(n_max, 6); ++n) {
        s.record(J_via_symmetrization(lambda, n, memo) == J_comb(lambda.resized(n), n),
                 [&] { return json{{"lambda", lam(lambda)}, {"n", n}, {"route", "symmetrization"}}; });
      }
      if (l >= 1) {
        s.record(J_via_restriction(lambda, 2 * l, memo) == J_comb(lambda, l),
                 [&] { return json{{"lambda", lam(lambda)}, {"n", 2 * l}, {"route", "restriction"}}; });
      }
      for (int n = std::max(l, 1); n <= n_max; ++n) {
        s.record(jack_J(lambda, n, memo) == J_comb(lambda.resized(n), n),
                 [&] { return json{{"lambda", lam(lambda)}, {"n", n}, {"route", "production"}}; });
      }
    }
  }
  return s.done();
}

Verdict check_swap(int n_max, int deg_max) {
  Sweep s("swap",
          "x E_lambda = (x s_i + 1) E_{s_i lambda} with x = lambda-bar_i - lambda-bar_{i+1} for lambda_i > "
          "lambda_{i+1}; (lambda-bar_m + m) E_lambda = X_lambda E_{lambda#}",
          bounds(n_max, deg_max));
  for_compositions(n_max, deg_max, [&](const Composition& lambda) {
    const int n = lambda.n();
    MemoStore memo;
    const MPoly<AlphaFrac> e = E_nonsym(lambda, memo);
    for (int i = 1; i < n; ++i) {
      if (lambda.part(i) <= lambda.part(i + 1)) continue;
      const Composition swapped = act(Permutation::simple(n, i), lambda);
      s.record(swap_op(lambda, i, E_nonsym(swapped, memo)) == e,
               [&] { return json{{"lambda", lam(lambda)}, {"i", i}, {"operator", "swap"}}; });
    }
    const int m = lambda.length();
    if (m >= 1) {
      const AlphaFrac scale(eigenvalue(lambda, m) + AlphaPoly(m));
      s.record(creation_X(lambda, E_nonsym(sharp_shape(lambda), memo)) == e * scale,
               [&] { return json{{"lambda", lam(lambda)}, {"operator", "creation"}}; });
    }
  });
  return s.done();
}

Verdict check_cyclic(int n_max, int deg_max) {
  Sweep s("cyclic", "E_lambda = Phi(E_{lambda*}) with lambda* = (lambda_n - 1, lambda_1, ..., lambda_{n-1})",
          bounds(n_max, deg_max));
  for_compositions(n_max, deg_max, [&](const Composition& lambda) {
    if (lambda.part(lambda.n()) == 0) return;
    s.record(cyclic_phi(lambda).holds, [&] { return json{{"lambda", lam(lambda)}}; });
  });
  return s.done();
}

Verdict check_l2l3(int n_max, int deg_max) {
  Sweep s("l2l3",
          "d F'_{s_i lambda} = (d-1) s_i F'_lambda + F'_lambda for lambda_i = 0 < lambda_{i+1}; "
          "F'_{Phi lambda} = d Phi(F'_lambda)",
          bounds(n_max, deg_max));
  for_compositions(n_max, deg_max, [&](const Composition& lambda) {
    for (int i = 1; i < lambda.n(); ++i) {
      if (lambda.part(i) != 0 || lambda.part(i + 1) == 0) continue;
      s.record(l2_l3_witness(lambda, TableauLemma::L2, i).holds,
               [&] { return json{{"lambda", lam(lambda)}, {"i", i}, {"lemma", "L2"}}; });
    }
    s.record(l2_l3_witness(lambda, TableauLemma::L3).holds,
             [&] { return json{{"lambda", lam(lambda)}, {"lemma", "L3"}}; });
  });
  return s.done();
}

Verdict check_specializations(int n_max, int deg_max) {
  Sweep s("specializations",
          "J_lambda(x;1) = prod_s (a(s)+l(s)+1) s_lambda and J_lambda(x;0) = prod_s (l(s)+1) e_{lambda'}",
          bounds(n_max, deg_max));
  MemoStore memo;
  for (int d = 0; d <= deg_max; ++d) {
    for (const Composition& lambda : trimmed_partitions(d)) {
      const AlphaPoly hooks = lower_hook_product(lambda);
      for (int n = 1; n <= n_max; ++n) {
        const MPoly<AlphaPoly> j = jack_J(lambda, n, memo);
        const MPoly<mpq_class> at_one = specialize(j, mpq_class(1));
        s.record(at_one == to_rational(schur_oracle(lambda, n)) * mpq_class(hooks.evaluate(1)),
                 [&] { return json{{"lambda", lam(lambda)}, {"n", n}, {"alpha", 1}}; });
        const MPoly<mpq_class> at_zero = specialize(j, mpq_class(0));
        s.record(at_zero == to_rational(elementary_product(conjugate(lambda), n)) * mpq_class(hooks.evaluate(0)),
                 [&] { return json{{"lambda", lam(lambda)}, {"n", n}, {"alpha", 0}}; });
      }
    }
  }
  return s.done();
}

Verdict check_triangularity(int n_max, int deg_max) {
  Sweep s("triangularity",
          "xi_i x^lambda - lambda-bar_i x^lambda and E_lambda - x^lambda are supported on mu < lambda; P_lambda is "
          "m_lambda plus terms m_mu with mu dominated by lambda",
          bounds(n_max, deg_max));
  auto below = [](const auto& f, const Composition& lambda) {
    for (const auto& [m, c] : f.terms()) {
      if (compare(m.to_composition(), lambda) != Order::Less) return false;
    }
    return true;
  };
  for_compositions(n_max, deg_max, [&](const Composition& lambda) {
    const Monomial top(lambda);
    const auto xl = MPoly<AlphaPoly>::monomial(top, AlphaPoly(1));
    for (int i = 1; i <= lambda.n(); ++i) {
      s.record(below(xi_apply(i, xl) - xl * eigenvalue(lambda, i), lambda),
               [&] { return json{{"lambda", lam(lambda)}, {"i", i}, {"object", "xi"}}; });
    }
    const MPoly<AlphaFrac> e = E_nonsym(lambda);
    s.record(e.coefficient(top) == AlphaFrac(1) && below(e - MPoly<AlphaFrac>::monomial(top, AlphaFrac(1)), lambda),
             [&] { return json{{"lambda", lam(lambda)}, {"object", "E"}}; });
    if (lambda.is_partition()) {
      const Expansion<AlphaFrac> p = expand_in_monomials(P_sym(lambda, lambda.n()));
      bool ok = !p.empty() && p.begin()->first == lambda && p.begin()->second == AlphaFrac(1);
      for (const auto& [mu, c] : p) ok = ok && (mu == lambda || dominates(lambda, mu));
      s.record(ok, [&] { return json{{"lambda", lam(lambda)}, {"object", "P"}}; });
    }
  });
  return s.done();
}

namespace {

Verdict merge(Verdict a, const Verdict& b) {
  a.theorem += "; " + b.theorem;
  a.count += b.count;
  if (a.pass && !b.pass) {
    a.pass = false;
    a.counterexample = b.counterexample;
  }
  return a;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "oracle-equivalence", "eigen",     "hecke", "orthogonality", "positivity", "coeff-identities",
      "stability",          "sym-routes", "swap",  "cyclic",        "l2l3",       "specializations",
      "triangularity"};
  return names;
}

Verdict run_check(const std::string& name, const Bounds& b) {
  Verdict v;
  if (name == "oracle-equivalence") {
    v = check_oracle_equivalence(b.n_max, b.deg_max);
  } else if (name == "eigen") {
    v = check_eigen(b.n_max, b.deg_max);
  } else if (name == "hecke") {
    v = check_operator_relations(b.n_max, b.deg_max);
  } else if (name == "orthogonality") {
    v = check_orthogonality(b.n_max, b.deg_max, b.k_list);
  } else if (name == "positivity") {
    v = merge(check_monomial_positivity(b.n_max, b.deg_max), check_partial_positivity(b.n_max, b.deg_max));
  } else if (name == "coeff-identities") {
    v = merge(check_coefficient_nonsym(b.deg_max), check_coefficient_sym(b.deg_max));
  } else if (name == "stability") {
    v = check_stability(b.n_max, b.deg_max);
  } else if (name == "sym-routes") {
    v = check_sym_routes(b.n_max, b.deg_max);
  } else if (name == "swap") {
    v = check_swap(b.n_max, b.deg_max);
  } else if (name == "cyclic") {
    v = check_cyclic(b.n_max, b.deg_max);
  } else if (name == "l2l3") {
    v = check_l2l3(b.n_max, b.deg_max);
  } else if (name == "specializations") {
    v = check_specializations(b.n_max, b.deg_max);
  } else if (name == "triangularity") {
    v = check_triangularity(b.n_max, b.deg_max);
  } else {
    throw std::invalid_argument("unknown check: " + name);
  }
  v.params = {{"n_max", b.n_max}, {"deg_max", b.deg_max}};
  if (name == "orthogonality") v.params["k_list"] = b.k_list;
  return v;
}

}  // namespace jack
