#pragma once

// Exact scalars in the Jack parameter alpha: integer polynomials Z[alpha]
// and reduced rational functions Q(alpha).

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace jack {

inline bool is_zero(const mpz_class& v) { return sgn(v) == 0; }
inline bool is_zero(const mpq_class& v) { return sgn(v) == 0; }

/// Polynomial in alpha with arbitrary-precision integer coefficients.
/// coefficients()[k] is the coefficient of alpha^k; no trailing zeros, so
/// the zero polynomial has an empty coefficient list.
class AlphaPoly {
 public:
  AlphaPoly() = default;
  AlphaPoly(long constant);  // NOLINT: integers embed implicitly
  explicit AlphaPoly(const mpz_class& constant);
  explicit AlphaPoly(std::vector<mpz_class> coefficients);
  AlphaPoly(std::initializer_list<long> coefficients);

  static AlphaPoly alpha() { return AlphaPoly{0, 1}; }
  /// slope * alpha + offset
  static AlphaPoly linear(long slope, long offset) { return AlphaPoly{offset, slope}; }

  const std::vector<mpz_class>& coefficients() const { return coef_; }
  mpz_class coefficient(std::size_t power) const;
  int degree() const { return static_cast<int>(coef_.size()) - 1; }
  bool is_zero() const { return coef_.empty(); }
  const mpz_class& leading() const { return coef_.back(); }

  /// gcd of the integer coefficients, always >= 0.
  mpz_class content() const;
  AlphaPoly primitive_part() const;
  /// Every coefficient >= 0 (membership in N[alpha]).
  bool is_nonnegative() const;

  mpq_class evaluate(const mpq_class& at) const;

  /// Exact division; throws std::domain_error when the quotient leaves Z[alpha].
  AlphaPoly divexact(const mpz_class& d) const;
  AlphaPoly divexact(const AlphaPoly& d) const;
  bool divisible_by(const mpz_class& d) const;

  AlphaPoly& operator+=(const AlphaPoly& o);
  AlphaPoly& operator-=(const AlphaPoly& o);
  AlphaPoly& operator*=(const AlphaPoly& o);
  AlphaPoly operator-() const;

  friend AlphaPoly operator+(AlphaPoly a, const AlphaPoly& b) { return a += b; }
  friend AlphaPoly operator-(AlphaPoly a, const AlphaPoly& b) { return a -= b; }
  friend AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b);
  friend bool operator==(const AlphaPoly& a, const AlphaPoly& b) { return a.coef_ == b.coef_; }

 private:
  void trim();
  std::vector<mpz_class> coef_;
};

inline bool is_zero(const AlphaPoly& v) { return v.is_zero(); }

/// Remainder of lc(b)^e * a modulo b for some e >= 0, computed in Z[alpha].
AlphaPoly pseudo_remainder(const AlphaPoly& a, const AlphaPoly& b);

/// Primitive gcd over Q[alpha] with positive leading coefficient; gcd(0,0) = 0.
AlphaPoly gcd(const AlphaPoly& a, const AlphaPoly& b);

/// Element of Q(alpha) as num/den in canonical form: gcd(num, den) = 1 over
/// Q[alpha], the integer contents of num and den are coprime, and den has a
/// positive leading coefficient. Zero is 0/1. Two equal fractions therefore
/// have identical representations.
class AlphaFrac {
 public:
  AlphaFrac() : den_(1) {}
  AlphaFrac(long constant) : num_(constant), den_(1) {}  // NOLINT
  AlphaFrac(AlphaPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT
  /// Throws std::domain_error when den is zero.
  AlphaFrac(AlphaPoly num, AlphaPoly den);
  AlphaFrac(const mpq_class& q);  // NOLINT

  const AlphaPoly& num() const { return num_; }
  const AlphaPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// True when the denominator is 1.
  bool is_polynomial() const { return den_ == AlphaPoly(1); }

  /// Throws std::domain_error if the denominator vanishes at the point.
  mpq_class evaluate(const mpq_class& at) const;
  AlphaFrac inverse() const;

  AlphaFrac& operator+=(const AlphaFrac& o);
  AlphaFrac& operator-=(const AlphaFrac& o);
  AlphaFrac& operator*=(const AlphaFrac& o);
  AlphaFrac& operator/=(const AlphaFrac& o);
  AlphaFrac operator-() const;

  friend AlphaFrac operator+(AlphaFrac a, const AlphaFrac& b) { return a += b; }
  friend AlphaFrac operator-(AlphaFrac a, const AlphaFrac& b) { return a -= b; }
  friend AlphaFrac operator*(AlphaFrac a, const AlphaFrac& b) { return a *= b; }
  friend AlphaFrac operator/(AlphaFrac a, const AlphaFrac& b) { return a /= b; }
  friend bool operator==(const AlphaFrac& a, const AlphaFrac& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void reduce();
  AlphaPoly num_;
  AlphaPoly den_;
};

inline bool is_zero(const AlphaFrac& v) { return v.is_zero(); }

}  // namespace jack
