#include "jack/mpoly.hpp"

namespace jack {

MPoly<AlphaFrac> divide_by_alpha_poly(const MPoly<AlphaPoly>& f, const AlphaPoly& d) {
  if (d.is_zero()) throw std::domain_error("divide_by_alpha_poly: zero divisor");
  return map_coefficients<AlphaFrac>(f, [&](const AlphaPoly& c) { return AlphaFrac(c, d); });
}

MPoly<AlphaPoly> divexact(const MPoly<AlphaPoly>& f, const mpz_class& d) {
  return map_coefficients<AlphaPoly>(f, [&](const AlphaPoly& c) { return c.divexact(d); });
}

MPoly<mpq_class> specialize(const MPoly<AlphaPoly>& f, const mpq_class& alpha) {
  return map_coefficients<mpq_class>(f, [&](const AlphaPoly& c) { return c.evaluate(alpha); });
}

MPoly<mpq_class> specialize(const MPoly<AlphaFrac>& f, const mpq_class& alpha) {
  return map_coefficients<mpq_class>(f, [&](const AlphaFrac& c) { return c.evaluate(alpha); });
}

}  // namespace jack
