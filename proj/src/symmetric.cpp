#include "jack/symmetric.hpp"

#include <numeric>
#include <stdexcept>

#include "jack/cherednik.hpp"

namespace jack {

namespace {

std::vector<int> iota_vars(int first, int last) {
  std::vector<int> v;
  for (int i = first; i <= last; ++i) v.push_back(i);
  return v;
}

mpz_class factorial(int n) {
  mpz_class f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

void require_partition(const Composition& lambda, const char* who) {
  if (!lambda.is_partition()) throw std::invalid_argument(std::string(who) + " requires a partition");
}

std::int64_t tail_multiplicity(const Monomial& m, int first) {
  if (first >= m.n()) return 1;
  std::vector<int> tail;
  for (int k = first; k < m.n(); ++k) tail.push_back(m[k]);
  return multiplicity_data(Composition(tail)).u;
}

}  // namespace

MPoly<AlphaPoly> augmented_partial_monomial(const Composition& mu, int m) {
  const int n = mu.n();
  if (m < 0 || m > n) throw std::out_of_range("augmented_partial_monomial: m out of range");
  std::vector<int> e = mu.parts();
  std::sort(e.begin() + m, e.end());
  const Monomial probe{std::span<const int>(e)};
  const AlphaPoly scale(mpz_class(static_cast<long>(tail_multiplicity(probe, m))));
  MPoly<AlphaPoly> out(n);
  do {
    out.add_term(Monomial(std::span<const int>(e)), scale);
  } while (std::next_permutation(e.begin() + m, e.end()));
  return out;
}

MPoly<AlphaPoly> J_via_restriction(const Composition& partition, int n, MemoStore& memo) {
  require_partition(partition, "J_via_restriction");
  const int m = partition.length();
  if (n < 1 || n < 2 * m) throw std::invalid_argument("J_via_restriction needs n >= 2 l(lambda)");
  const Composition padded = partition.resized(n);
  const MPoly<AlphaPoly> f = F_nonsym(padded, memo);
  const std::vector<int> head = iota_vars(1, m);
  return remove_variables(substitute_zero(f, head), head);
}

MPoly<AlphaPoly> J_via_restriction(const Composition& partition, int n) {
  MemoStore memo;
  return J_via_restriction(partition, n, memo);
}

MPoly<AlphaPoly> J_via_symmetrization(const Composition& partition, int n, MemoStore& memo) {
  require_partition(partition, "J_via_symmetrization");
  const int m = partition.length();
  if (n < std::max(m, 1) || n > 6) throw std::invalid_argument("J_via_symmetrization needs l(lambda) <= n <= 6");
  const Composition lambda = partition.resized(n);
  if (m == 0) return MPoly<AlphaPoly>::constant(n, AlphaPoly(1));
  MPoly<AlphaPoly> g = F_nonsym(zero_shape(lambda), memo);
  for (int r = 0; r < m; ++r) g = phi(g);

  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  MPoly<AlphaPoly> sum(n);
  do {
    sum += act(Permutation(images), g);
  } while (std::next_permutation(images.begin(), images.end()));
  return divexact(sum, factorial(n - m));
}

MPoly<AlphaPoly> J_via_symmetrization(const Composition& partition, int n) {
  MemoStore memo;
  return J_via_symmetrization(partition, n, memo);
}

MPoly<AlphaPoly> jack_J(const Composition& partition, int nvars, MemoStore& memo) {
  require_partition(partition, "jack_J");
  if (nvars < 1) throw std::invalid_argument("jack_J needs at least one variable");
  const int m = partition.length();
  if (nvars < m) return MPoly<AlphaPoly>(nvars);
  if (m == 0) return MPoly<AlphaPoly>::constant(nvars, AlphaPoly(1));
  return J_via_restriction(partition, nvars + m, memo);
}

MPoly<AlphaPoly> jack_J(const Composition& partition, int nvars) {
  MemoStore memo;
  return jack_J(partition, nvars, memo);
}

MPoly<AlphaFrac> P_sym(const Composition& partition, int n, MemoStore& memo) {
  return divide_by_alpha_poly(jack_J(partition, n, memo), lower_hook_product(partition));
}

MPoly<AlphaFrac> P_sym(const Composition& partition, int n) {
  MemoStore memo;
  return P_sym(partition, n, memo);
}

MonomialExpansion expand_monomial(const MPoly<AlphaPoly>& f) {
  MonomialExpansion out;
  out.v = expand_in_monomials(f);
  for (const auto& [mu, v] : out.v) {
    const mpz_class u(static_cast<long>(multiplicity_data(mu).u));
    out.v_tilde.emplace(mu, v.divexact(u));
  }
  return out;
}

PartialSymExpansion expand_partial_sym(const MPoly<AlphaPoly>& f, int m) {
  if (m < 0 || m > f.nvars()) throw std::out_of_range("expand_partial_sym: m out of range");
  if (!is_symmetric_from(f, m + 1)) {
    throw std::invalid_argument("expand_partial_sym: input is not symmetric in the trailing variables");
  }
  PartialSymExpansion out;
  out.m = m;
  for (const auto& [mono, c] : f.terms()) {
    if (mono.has_negative()) throw std::invalid_argument("expand_partial_sym: Laurent term");
    bool tail_sorted = true;
    for (int k = m + 1; k < mono.n(); ++k) tail_sorted = tail_sorted && mono[k] <= mono[k - 1];
    if (!tail_sorted) continue;
    const mpz_class u(static_cast<long>(tail_multiplicity(mono, m)));
    out.a.emplace(mono.to_composition(), c.divexact(u));
  }
  return out;
}

namespace {

// Fills boxes in row-major order keeping rows weakly increasing and columns
// strictly increasing.
void fill_ssyt(const Composition& shape, const std::vector<Box>& boxes, std::size_t pos,
               std::vector<std::vector<int>>& t, int n, Monomial& weight, MPoly<mpz_class>& out) {
  if (pos == boxes.size()) {
    out.add_term(weight, mpz_class(1));
    return;
  }
  const Box s = boxes[pos];
  int lo = 1;
  if (s.col > 1) lo = std::max(lo, t[s.row - 1][s.col - 2]);
  if (s.row > 1) lo = std::max(lo, t[s.row - 2][s.col - 1] + 1);
  for (int v = lo; v <= n; ++v) {
    t[s.row - 1][s.col - 1] = v;
    weight.add(v - 1, 1);
    fill_ssyt(shape, boxes, pos + 1, t, n, weight, out);
    weight.add(v - 1, -1);
  }
}

}  // namespace

MPoly<mpz_class> schur_oracle(const Composition& partition, int n) {
  require_partition(partition, "schur_oracle");
  MPoly<mpz_class> out(n);
  if (partition.length() > n) return out;
  std::vector<std::vector<int>> t;
  for (int p : partition.parts()) t.emplace_back(static_cast<std::size_t>(p), 0);
  Monomial weight(n);
  fill_ssyt(partition, partition.boxes(), 0, t, n, weight, out);
  return out;
}

MPoly<mpz_class> elementary_product(const Composition& parts, int n) {
  MPoly<mpz_class> out = MPoly<mpz_class>::constant(n, mpz_class(1));
  for (int r : parts.parts()) {
    if (r == 0) continue;
    if (r > n) return MPoly<mpz_class>(n);
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    std::fill(e.end() - r, e.end(), 1);
    out = out * monomial_symmetric<mpz_class>(Composition(e));
  }
  return out;
}

MPoly<mpq_class> gram_schmidt_oracle(const Composition& lambda, int k) {
  const int n = lambda.n();
  const PairingContext ctx(n, k);
  std::vector<Monomial> lower;
  for (const Composition& mu : compositions(n, lambda.degree())) {
    if (compare(mu, lambda) == Order::Less) lower.emplace_back(mu);
  }
  const Monomial top(lambda);
  const std::size_t size = lower.size();
  auto pair = [&](const Monomial& a, const Monomial& b) { return mpq_class(ctx.delta().coefficient(b - a)); };

  // Row r: sum_c <x^{lower[c]}, x^{lower[r]}> y_c = -<x^lambda, x^{lower[r]}>.
  std::vector<std::vector<mpq_class>> a(size, std::vector<mpq_class>(size + 1));
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) a[r][c] = pair(lower[c], lower[r]);
    a[r][size] = -pair(top, lower[r]);
  }
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t piv = col;
    while (piv < size && sgn(a[piv][col]) == 0) ++piv;
    if (piv == size) throw std::runtime_error("gram_schmidt_oracle: singular system");
    std::swap(a[piv], a[col]);
    for (std::size_t r = 0; r < size; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      const mpq_class factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= size; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  MPoly<mpq_class> out = MPoly<mpq_class>::monomial(top, mpq_class(1));
  for (std::size_t r = 0; r < size; ++r) out.add_term(lower[r], mpq_class(a[r][size] / a[r][r]));
  return out;
}

}  // namespace jack
