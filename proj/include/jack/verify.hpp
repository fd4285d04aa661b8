#pragma once

// Exhaustive verification sweeps over small compositions. Each sweep returns
// a verdict that names the identity it checks, the bounds it ran with, how
// many individual cases were evaluated, and the first failing case.

#include <cstddef>
#include <string>
#include <vector>

#include "jack/io.hpp"

namespace jack {

struct Bounds {
  int n_max = 3;
  int deg_max = 4;
  std::vector<int> k_list = {1, 2};
};

struct Verdict {
  std::string check;
  std::string theorem;  // statement being verified
  io::json params;
  bool pass = true;
  io::json counterexample;  // null when pass
  std::size_t count = 0;
};

io::json to_json(const Verdict& v);

/// Names accepted by run_check, in documentation order.
const std::vector<std::string>& check_names();

/// Dispatches on the check name; throws std::invalid_argument for an unknown
/// name.
Verdict run_check(const std::string& name, const Bounds& bounds);

// Individual sweeps. Unless stated otherwise they range over all
// compositions with 1 <= n <= n_max parts and degree 0..deg_max.

/// F_comb == F_nonsym.
Verdict check_oracle_equivalence(int n_max, int deg_max);
/// xi_i E_lambda = lambda-bar_i E_lambda.
Verdict check_eigen(int n_max, int deg_max);
/// Hecke and Phi relations and restriction commuting on monomials of
/// degree <= deg_max, for each n <= n_max.
Verdict check_operator_relations(int n_max, int deg_max);
/// Orthogonality of E_lambda and P_lambda and agreement with the
/// Gram-Schmidt construction at alpha = 1/k.
Verdict check_orthogonality(int n_max, int deg_max, const std::vector<int>& k_list);
/// v~_{lambda mu} in N[alpha] for partitions of degree <= deg_max in n variables.
Verdict check_monomial_positivity(int n, int deg_max);
/// a_{lambda mu} in N[alpha] for F_lambda expanded with split m = l(lambda).
Verdict check_partial_positivity(int n_max, int deg_max);
/// Coefficient of x_{m+1}...x_{m+d} in F_lambda is d! for |lambda| = d, with
/// n = l(lambda) + d.
Verdict check_coefficient_nonsym(int deg_max);
/// Coefficient of m_{1^d} in J_lambda is d! for partitions of d, n = d.
Verdict check_coefficient_sym(int deg_max);
/// E_lambda at x_n = 0 equals E of the truncated composition, and
/// s_i E_lambda = E_lambda when lambda_i = lambda_{i+1}.
Verdict check_stability(int n_max, int deg_max);
/// Symmetrization (n <= min(n_max, 6)), restriction (n = 2 l) and the
/// tableau sum give the same J_lambda.
Verdict check_sym_routes(int n_max, int deg_max);
/// The swap operator maps E_{s_i lambda} to E_lambda, and the creation
/// operator identity holds.
Verdict check_swap(int n_max, int deg_max);
/// E_lambda = Phi(E_{lambda*}) whenever lambda_n != 0.
Verdict check_cyclic(int n_max, int deg_max);
/// L2 and L3 tableau-sum identities.
Verdict check_l2l3(int n_max, int deg_max);
/// J at alpha = 1 is the hook multiple of the Schur polynomial and J at
/// alpha = 0 the matching multiple of e_{lambda'}.
Verdict check_specializations(int n_max, int deg_max);
/// E_lambda - x^lambda is supported below lambda, and P_lambda is monic with
/// all other terms dominated by lambda.
Verdict check_triangularity(int n_max, int deg_max);

}  // namespace jack
