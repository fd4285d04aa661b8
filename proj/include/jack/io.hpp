#pragma once

// JSON serialization, plain-text and LaTeX rendering, and the cache file
// format for memoized F_lambda tables.
//
// Polynomials are lists of terms {"exp":[e1..en], "coef":...} in graded-lex
// descending order. An AlphaPoly coefficient is the list of its integer
// coefficients (constant first) as decimal strings, an AlphaFrac is
// {"num":[...],"den":[...]}, and rationals are strings "p/q".

#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "jack/mpoly.hpp"
#include "jack/symmetric.hpp"

namespace jack::io {

using json = nlohmann::json;

json to_json(const mpz_class& c);
json to_json(const mpq_class& c);
json to_json(const AlphaPoly& c);
json to_json(const AlphaFrac& c);
json to_json(const Composition& c);

/// All parsers throw std::invalid_argument on malformed documents.
AlphaPoly alpha_poly_from_json(const json& j);
AlphaFrac alpha_frac_from_json(const json& j);
Composition composition_from_json(const json& j);

template <class C>
json terms_to_json(const MPoly<C>& f) {
  json out = json::array();
  for (const auto& [m, c] : f.terms()) out.push_back({{"exp", m.exponents()}, {"coef", to_json(c)}});
  return out;
}

MPoly<AlphaPoly> alpha_poly_terms_from_json(const json& terms, int n);
MPoly<AlphaFrac> alpha_frac_terms_from_json(const json& terms, int n);

/// {"lambda":[...], "basis":..., "entries":[{"mu":[...],"coef":...}]}
template <class C>
json expansion_to_json(const Composition& lambda, const std::string& basis, const Expansion<C>& e) {
  json entries = json::array();
  for (const auto& [mu, c] : e) entries.push_back({{"mu", to_json(mu)}, {"coef", to_json(c)}});
  return {{"lambda", to_json(lambda)}, {"basis", basis}, {"entries", std::move(entries)}};
}

enum class Style { Text, Latex };

/// Coefficient rendering: alpha is "a" in text and "\alpha" in LaTeX,
/// e.g. "a^2+3*a+2", "2/(a+1)".
std::string render(const mpz_class& c, Style style);
std::string render(const mpq_class& c, Style style);
std::string render(const AlphaPoly& c, Style style);
std::string render(const AlphaFrac& c, Style style);

/// "(a+1)*x1 + x2" in text, "(\alpha+1) x_{1} + x_{2}" in LaTeX.
std::string render_polynomial(const MPoly<mpz_class>& f, Style style);
std::string render_polynomial(const MPoly<mpq_class>& f, Style style);
std::string render_polynomial(const MPoly<AlphaPoly>& f, Style style);
std::string render_polynomial(const MPoly<AlphaFrac>& f, Style style);

/// basis_symbol is the text name of the basis element ("m", "m~"); in
/// LaTeX it is mapped to m or \tilde{m}. "(a+2) m[2,1] + 6 m[1,1,1]".
std::string render_expansion(const Expansion<AlphaPoly>& e, const std::string& basis_symbol, Style style);
std::string render_expansion(const Expansion<AlphaFrac>& e, const std::string& basis_symbol, Style style);

inline constexpr int kCacheVersion = 1;

/// Raised for cache files with a wrong version, inconsistent n, or that
/// cannot be parsed.
class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CacheFile {
  int n = 0;
  std::vector<std::pair<Composition, MPoly<AlphaPoly>>> entries;
};

json cache_to_json(const CacheFile& cache);
/// Throws CacheError. expected_n < 0 accepts any n.
CacheFile cache_from_json(const json& doc, int expected_n = -1);

CacheFile read_cache_file(const std::filesystem::path& path, int expected_n = -1);
void write_cache_file(const std::filesystem::path& path, const CacheFile& cache);

}  // namespace jack::io
