#include "jack/alpha_poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace jack {

AlphaPoly::AlphaPoly(long constant) {
  if (constant != 0) coef_.emplace_back(constant);
}

AlphaPoly::AlphaPoly(const mpz_class& constant) {
  if (sgn(constant) != 0) coef_.push_back(constant);
}

AlphaPoly::AlphaPoly(std::vector<mpz_class> coefficients) : coef_(std::move(coefficients)) {
  trim();
}

AlphaPoly::AlphaPoly(std::initializer_list<long> coefficients) {
  coef_.reserve(coefficients.size());
  for (long c : coefficients) coef_.emplace_back(c);
  trim();
}

void AlphaPoly::trim() {
  while (!coef_.empty() && sgn(coef_.back()) == 0) coef_.pop_back();
}

mpz_class AlphaPoly::coefficient(std::size_t power) const {
  return power < coef_.size() ? coef_[power] : mpz_class(0);
}

mpz_class AlphaPoly::content() const {
  mpz_class g = 0;
  for (const auto& c : coef_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

AlphaPoly AlphaPoly::primitive_part() const {
  if (is_zero()) return {};
  return divexact(content());
}

bool AlphaPoly::is_nonnegative() const {
  return std::all_of(coef_.begin(), coef_.end(), [](const mpz_class& c) { return sgn(c) >= 0; });
}

mpq_class AlphaPoly::evaluate(const mpq_class& at) const {
  mpq_class acc = 0;
  for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) {
    acc *= at;
    acc += mpq_class(*it);
  }
  return acc;
}

bool AlphaPoly::divisible_by(const mpz_class& d) const {
  if (sgn(d) == 0) return false;
  return std::all_of(coef_.begin(), coef_.end(), [&](const mpz_class& c) {
    return mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()) != 0;
  });
}

AlphaPoly AlphaPoly::divexact(const mpz_class& d) const {
  if (!divisible_by(d)) throw std::domain_error("AlphaPoly: inexact division by integer");
  AlphaPoly out;
  out.coef_.resize(coef_.size());
  for (std::size_t k = 0; k < coef_.size(); ++k) {
    mpz_divexact(out.coef_[k].get_mpz_t(), coef_[k].get_mpz_t(), d.get_mpz_t());
  }
  return out;
}

AlphaPoly AlphaPoly::divexact(const AlphaPoly& d) const {
  if (d.is_zero()) throw std::domain_error("AlphaPoly: division by zero");
  if (is_zero()) return {};
  if (degree() < d.degree()) throw std::domain_error("AlphaPoly: inexact division");
  std::vector<mpz_class> rem = coef_;
  std::vector<mpz_class> quo(coef_.size() - d.coef_.size() + 1);
  const mpz_class& lead = d.leading();
  for (int k = static_cast<int>(quo.size()) - 1; k >= 0; --k) {
    mpz_class& top = rem[k + d.degree()];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw std::domain_error("AlphaPoly: inexact division");
    }
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t t = 0; t < d.coef_.size(); ++t) rem[k + t] -= q * d.coef_[t];
    quo[k] = std::move(q);
  }
  for (const auto& r : rem) {
    if (sgn(r) != 0) throw std::domain_error("AlphaPoly: inexact division");
  }
  return AlphaPoly(std::move(quo));
}

AlphaPoly& AlphaPoly::operator+=(const AlphaPoly& o) {
  if (o.coef_.size() > coef_.size()) coef_.resize(o.coef_.size());
  for (std::size_t k = 0; k < o.coef_.size(); ++k) coef_[k] += o.coef_[k];
  trim();
  return *this;
}

AlphaPoly& AlphaPoly::operator-=(const AlphaPoly& o) {
  if (o.coef_.size() > coef_.size()) coef_.resize(o.coef_.size());
  for (std::size_t k = 0; k < o.coef_.size(); ++k) coef_[k] -= o.coef_[k];
  trim();
  return *this;
}

AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.coef_.size() + b.coef_.size() - 1);
  for (std::size_t i = 0; i < a.coef_.size(); ++i) {
    if (sgn(a.coef_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coef_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coef_[i].get_mpz_t(), b.coef_[j].get_mpz_t());
    }
  }
  return AlphaPoly(std::move(out));
}

AlphaPoly& AlphaPoly::operator*=(const AlphaPoly& o) {
  *this = *this * o;
  return *this;
}

AlphaPoly AlphaPoly::operator-() const {
  AlphaPoly out = *this;
  for (auto& c : out.coef_) c = -c;
  return out;
}

AlphaPoly pseudo_remainder(const AlphaPoly& a, const AlphaPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo_remainder: zero divisor");
  std::vector<mpz_class> r = a.coefficients();
  const auto& bc = b.coefficients();
  const int db = b.degree();
  const mpz_class& lead = b.leading();
  while (!r.empty() && static_cast<int>(r.size()) - 1 >= db) {
    const int shift = static_cast<int>(r.size()) - 1 - db;
    const mpz_class top = r.back();
    for (auto& c : r) c *= lead;
    for (int t = 0; t <= db; ++t) r[shift + t] -= top * bc[t];
    while (!r.empty() && sgn(r.back()) == 0) r.pop_back();
  }
  return AlphaPoly(std::move(r));
}

AlphaPoly gcd(const AlphaPoly& a, const AlphaPoly& b) {
  AlphaPoly x = a.primitive_part();
  AlphaPoly y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    AlphaPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  if (!x.is_zero() && sgn(x.leading()) < 0) x = -x;
  return x;
}

AlphaFrac::AlphaFrac(AlphaPoly num, AlphaPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("AlphaFrac: zero denominator");
  reduce();
}

AlphaFrac::AlphaFrac(const mpq_class& q)
    : num_(AlphaPoly(q.get_num())), den_(AlphaPoly(q.get_den())) {}

void AlphaFrac::reduce() {
  if (num_.is_zero()) {
    den_ = AlphaPoly(1);
    return;
  }
  if (den_.degree() > 0) {
    AlphaPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divexact(g);
      den_ = den_.divexact(g);
    }
  }
  mpz_class c;
  mpz_class cn = num_.content();
  mpz_class cd = den_.content();
  mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (c != 1) {
    num_ = num_.divexact(c);
    den_ = den_.divexact(c);
  }
  if (sgn(den_.leading()) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

mpq_class AlphaFrac::evaluate(const mpq_class& at) const {
  mpq_class d = den_.evaluate(at);
  if (sgn(d) == 0) throw std::domain_error("AlphaFrac: pole at evaluation point");
  return num_.evaluate(at) / d;
}

AlphaFrac AlphaFrac::inverse() const {
  if (is_zero()) throw std::domain_error("AlphaFrac: inverse of zero");
  return AlphaFrac(den_, num_);
}

AlphaFrac& AlphaFrac::operator+=(const AlphaFrac& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  reduce();
  return *this;
}

AlphaFrac& AlphaFrac::operator-=(const AlphaFrac& o) { return *this += -o; }

AlphaFrac& AlphaFrac::operator*=(const AlphaFrac& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  reduce();
  return *this;
}

AlphaFrac& AlphaFrac::operator/=(const AlphaFrac& o) { return *this *= o.inverse(); }

AlphaFrac AlphaFrac::operator-() const {
  AlphaFrac out = *this;
  out.num_ = -out.num_;
  return out;
}

}  // namespace jack
