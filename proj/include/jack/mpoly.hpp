#pragma once

// Sparse multivariate (Laurent) polynomials over an exact coefficient ring,
// with the symmetric group acting on variables and the divided differences
// N_ij = (1 - s_ij) / (x_i - x_j).
//
// Coefficient rings used in this library: mpz_class, mpq_class, AlphaPoly,
// AlphaFrac. Variable indices in free functions are 1-based.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jack/alpha_poly.hpp"
#include "jack/composition.hpp"

namespace jack {

inline constexpr int kMaxVars = 16;

/// Exponent vector of fixed capacity. Entries may be negative (Laurent).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int n) : n_(static_cast<std::uint8_t>(check_n(n))) {}
  Monomial(std::initializer_list<int> exps) : Monomial(std::span<const int>(exps.begin(), exps.size())) {}
  explicit Monomial(std::span<const int> exps) : n_(static_cast<std::uint8_t>(check_n(static_cast<int>(exps.size())))) {
    for (std::size_t k = 0; k < exps.size(); ++k) set(static_cast<int>(k), exps[k]);
  }
  explicit Monomial(const Composition& c) : Monomial(std::span<const int>(c.parts())) {}

  int n() const { return n_; }
  /// 0-based exponent access.
  int operator[](int k) const { return e_[static_cast<std::size_t>(k)]; }
  void set(int k, int v) {
    deg_ += v - e_[static_cast<std::size_t>(k)];
    e_[static_cast<std::size_t>(k)] = static_cast<std::int16_t>(v);
  }
  void add(int k, int v) { set(k, (*this)[k] + v); }
  int degree() const { return deg_; }
  bool is_constant() const {
    return std::all_of(e_.begin(), e_.begin() + n_, [](std::int16_t v) { return v == 0; });
  }
  bool has_negative() const {
    return std::any_of(e_.begin(), e_.begin() + n_, [](std::int16_t v) { return v < 0; });
  }
  std::vector<int> exponents() const { return {e_.begin(), e_.begin() + n_}; }
  /// Throws std::invalid_argument on negative exponents.
  Composition to_composition() const { return Composition(exponents()); }
  bool is_partition() const {
    for (int k = 1; k < n_; ++k) {
      if (e_[static_cast<std::size_t>(k)] > e_[static_cast<std::size_t>(k - 1)]) return false;
    }
    return !has_negative();
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.n_ == b.n_ && a.e_ == b.e_; }
  friend Monomial operator+(Monomial a, const Monomial& b) {
    for (int k = 0; k < a.n_; ++k) a.add(k, b[k]);
    return a;
  }
  friend Monomial operator-(Monomial a, const Monomial& b) {
    for (int k = 0; k < a.n_; ++k) a.add(k, -b[k]);
    return a;
  }

 private:
  static int check_n(int n) {
    if (n < 0 || n > kMaxVars) {
      throw std::invalid_argument("variable count " + std::to_string(n) + " exceeds supported maximum " +
                                  std::to_string(kMaxVars));
    }
    return n;
  }
  std::array<std::int16_t, kMaxVars> e_{};
  std::uint8_t n_ = 0;
  int deg_ = 0;
};

/// Graded lexicographic order, descending: a precedes b if it has larger total
/// degree, or equal degree and is lexicographically larger.
struct TermOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    for (int k = 0; k < a.n(); ++k) {
      if (a[k] != b[k]) return a[k] > b[k];
    }
    return false;
  }
};

template <class C>
class MPoly {
 public:
  using Terms = std::map<Monomial, C, TermOrder>;

  MPoly() = default;
  explicit MPoly(int n) : n_(n) {}

  static MPoly constant(int n, const C& c) {
    MPoly f(n);
    f.add_term(Monomial(n), c);
    return f;
  }
  static MPoly monomial(const Monomial& m, const C& c) {
    MPoly f(m.n());
    f.add_term(m, c);
    return f;
  }
  /// The variable x_i, 1-based.
  static MPoly variable(int n, int i) {
    Monomial m(n);
    m.set(i - 1, 1);
    return monomial(m, C(1L));
  }

  int nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  C coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? C(0L) : it->second;
  }

  /// Adds c * x^m, dropping the term if it cancels.
  void add_term(const Monomial& m, const C& c) {
    if (m.n() != n_) throw std::invalid_argument("monomial arity does not match polynomial");
    if (jack::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (jack::is_zero(it->second)) terms_.erase(it);
    }
  }
  void add_term(const Monomial& m, C&& c) {
    if (m.n() != n_) throw std::invalid_argument("monomial arity does not match polynomial");
    if (jack::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, std::move(c));
    if (!inserted) {
      it->second += c;
      if (jack::is_zero(it->second)) terms_.erase(it);
    }
  }

  int total_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

  MPoly& operator+=(const MPoly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, C(-c));
    return *this;
  }
  MPoly& operator*=(const C& s) {
    if (jack::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }
  MPoly operator-() const {
    MPoly out = *this;
    for (auto& [m, c] : out.terms_) c = C(-c);
    return out;
  }

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const C& s) { return a *= s; }
  friend MPoly operator*(const C& s, MPoly a) { return a *= s; }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check_same(b);
    MPoly out(a.n_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma + mb, C(ca * cb));
    }
    return out;
  }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

 private:
  void check_same(const MPoly& o) const {
    if (o.n_ != n_) throw std::invalid_argument("polynomials have different variable counts");
  }
  int n_ = 0;
  Terms terms_;
};

template <class D, class C, class F>
MPoly<D> map_coefficients(const MPoly<C>& f, F&& convert) {
  MPoly<D> out(f.nvars());
  for (const auto& [m, c] : f.terms()) out.add_term(m, D(convert(c)));
  return out;
}

/// Applies an operation monomial-by-monomial: op(m, c, out) adds to out.
template <class C, class Op>
MPoly<C> transform_terms(const MPoly<C>& f, int out_vars, Op&& op) {
  MPoly<C> out(out_vars);
  for (const auto& [m, c] : f.terms()) op(m, c, out);
  return out;
}

/// (w.f): x_i -> x_{w(i)}, so act(w, act(v, f)) == act(w * v, f).
template <class C>
MPoly<C> act(const Permutation& w, const MPoly<C>& f) {
  if (w.n() != f.nvars()) throw std::invalid_argument("act: permutation size mismatch");
  return transform_terms(f, f.nvars(), [&](const Monomial& m, const C& c, MPoly<C>& out) {
    Monomial r(m.n());
    for (int i = 1; i <= m.n(); ++i) r.set(w(i) - 1, m[i - 1]);
    out.add_term(r, c);
  });
}

/// s_ij: exchange x_i and x_j.
template <class C>
MPoly<C> swap_variables(int i, int j, const MPoly<C>& f) {
  if (i < 1 || j < 1 || i > f.nvars() || j > f.nvars()) throw std::out_of_range("swap_variables index");
  return transform_terms(f, f.nvars(), [&](const Monomial& m, const C& c, MPoly<C>& out) {
    Monomial r = m;
    r.set(i - 1, m[j - 1]);
    r.set(j - 1, m[i - 1]);
    out.add_term(r, c);
  });
}

/// Simple reflection s_i = s_{i,i+1}.
template <class C>
MPoly<C> simple_reflection(int i, const MPoly<C>& f) {
  return swap_variables(i, i + 1, f);
}

/// Multiplication by x_i.
template <class C>
MPoly<C> multiply_variable(int i, const MPoly<C>& f) {
  if (i < 1 || i > f.nvars()) throw std::out_of_range("multiply_variable index");
  return transform_terms(f, f.nvars(), [&](const Monomial& m, const C& c, MPoly<C>& out) {
    Monomial r = m;
    r.add(i - 1, 1);
    out.add_term(r, c);
  });
}

/// Euler operator x_i d/dx_i.
template <class C>
MPoly<C> euler(int i, const MPoly<C>& f) {
  if (i < 1 || i > f.nvars()) throw std::out_of_range("euler index");
  return transform_terms(f, f.nvars(), [&](const Monomial& m, const C& c, MPoly<C>& out) {
    const int e = m[i - 1];
    if (e != 0) out.add_term(m, C(c * C(static_cast<long>(e))));
  });
}

/// N_ij f = (f - s_ij f) / (x_i - x_j), evaluated per monomial by the closed
/// form x_i^a x_j^b -> (x_i x_j)^b (x_i^{a-b} - x_j^{a-b}) / (x_i - x_j) for
/// a > b (and its negated mirror for a < b), so the quotient is always exact.
/// Requires non-negative exponents in x_i and x_j.
template <class C>
MPoly<C> divided_transposition(int i, int j, const MPoly<C>& f) {
  if (i == j) throw std::invalid_argument("divided_transposition requires i != j");
  if (i < 1 || j < 1 || i > f.nvars() || j > f.nvars()) throw std::out_of_range("divided_transposition index");
  return transform_terms(f, f.nvars(), [&](const Monomial& m, const C& c, MPoly<C>& out) {
    const int a = m[i - 1];
    const int b = m[j - 1];
    if (a < 0 || b < 0) throw std::domain_error("divided_transposition on a Laurent term");
    if (a == b) return;
    const int lo = std::min(a, b);
    const int span = std::abs(a - b);
    const C coef = a > b ? c : C(-c);
    // (x_i x_j)^lo * sum_{t=0}^{span-1} x_i^{span-1-t} x_j^t when a > b;
    // for a < b the same sum with a sign flip.
    for (int t = 0; t < span; ++t) {
      Monomial r = m;
      r.set(i - 1, lo + span - 1 - t);
      r.set(j - 1, lo + t);
      out.add_term(r, coef);
    }
  });
}

/// Sets every listed variable (1-based) to zero: drops terms that involve any
/// of them. Throws std::domain_error on a negative exponent in such a variable.
template <class C>
MPoly<C> substitute_zero(const MPoly<C>& f, std::span<const int> vars) {
  for (int v : vars) {
    if (v < 1 || v > f.nvars()) throw std::out_of_range("substitute_zero index");
  }
  return transform_terms(f, f.nvars(), [&](const Monomial& m, const C& c, MPoly<C>& out) {
    for (int v : vars) {
      if (m[v - 1] < 0) throw std::domain_error("substitute_zero: Laurent term in a zeroed variable");
      if (m[v - 1] > 0) return;
    }
    out.add_term(m, c);
  });
}

template <class C>
MPoly<C> substitute_zero(const MPoly<C>& f, std::initializer_list<int> vars) {
  return substitute_zero(f, std::span<const int>(vars.begin(), vars.size()));
}

/// Removes the listed variables, which must not occur in f, and renumbers
/// the remaining ones consecutively.
template <class C>
MPoly<C> remove_variables(const MPoly<C>& f, std::span<const int> vars) {
  std::vector<bool> drop(static_cast<std::size_t>(f.nvars()), false);
  for (int v : vars) drop.at(static_cast<std::size_t>(v - 1)) = true;
  const int kept = f.nvars() - static_cast<int>(std::count(drop.begin(), drop.end(), true));
  return transform_terms(f, kept, [&](const Monomial& m, const C& c, MPoly<C>& out) {
    Monomial r(kept);
    int k = 0;
    for (int v = 0; v < m.n(); ++v) {
      if (drop[static_cast<std::size_t>(v)]) {
        if (m[v] != 0) throw std::invalid_argument("remove_variables: variable occurs in polynomial");
      } else {
        r.set(k++, m[v]);
      }
    }
    out.add_term(r, c);
  });
}

/// The same polynomial viewed in n >= nvars() variables.
template <class C>
MPoly<C> embed(const MPoly<C>& f, int n) {
  if (n < f.nvars()) throw std::invalid_argument("embed: fewer variables");
  return transform_terms(f, n, [&](const Monomial& m, const C& c, MPoly<C>& out) {
    Monomial r(n);
    for (int v = 0; v < m.n(); ++v) r.set(v, m[v]);
    out.add_term(r, c);
  });
}

/// f(x^{-1}).
template <class C>
MPoly<C> invert_variables(const MPoly<C>& f) {
  return transform_terms(f, f.nvars(), [&](const Monomial& m, const C& c, MPoly<C>& out) {
    Monomial r(m.n());
    for (int v = 0; v < m.n(); ++v) r.set(v, -m[v]);
    out.add_term(r, c);
  });
}

template <class C>
C constant_term(const MPoly<C>& f) {
  return f.coefficient(Monomial(f.nvars()));
}

template <class C>
bool is_symmetric(const MPoly<C>& f) {
  for (int i = 1; i < f.nvars(); ++i) {
    if (simple_reflection(i, f) != f) return false;
  }
  return true;
}

/// Invariance under s_i for first <= i < nvars().
template <class C>
bool is_symmetric_from(const MPoly<C>& f, int first) {
  for (int i = std::max(first, 1); i < f.nvars(); ++i) {
    if (simple_reflection(i, f) != f) return false;
  }
  return true;
}

inline MPoly<AlphaFrac> to_frac(const MPoly<AlphaPoly>& f) {
  return map_coefficients<AlphaFrac>(f, [](const AlphaPoly& c) { return AlphaFrac(c); });
}

/// Divides every coefficient by d. Throws std::domain_error when d == 0.
MPoly<AlphaFrac> divide_by_alpha_poly(const MPoly<AlphaPoly>& f, const AlphaPoly& d);

/// Exact division of every coefficient by an integer; throws std::domain_error
/// if some coefficient is not divisible.
MPoly<AlphaPoly> divexact(const MPoly<AlphaPoly>& f, const mpz_class& d);

/// Substitutes a rational value for alpha.
MPoly<mpq_class> specialize(const MPoly<AlphaPoly>& f, const mpq_class& alpha);
MPoly<mpq_class> specialize(const MPoly<AlphaFrac>& f, const mpq_class& alpha);

inline MPoly<mpq_class> to_rational(const MPoly<mpz_class>& f) {
  return map_coefficients<mpq_class>(f, [](const mpz_class& c) { return mpq_class(c); });
}

}  // namespace jack
