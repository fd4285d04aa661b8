#include "jack/io.hpp"

#include <fstream>
#include <sstream>

namespace jack::io {

json to_json(const mpz_class& c) { return c.get_str(); }
json to_json(const mpq_class& c) { return c.get_str(); }

json to_json(const AlphaPoly& c) {
  json out = json::array();
  for (const mpz_class& v : c.coefficients()) out.push_back(v.get_str());
  return out;
}

json to_json(const AlphaFrac& c) { return {{"num", to_json(c.num())}, {"den", to_json(c.den())}}; }

json to_json(const Composition& c) { return c.parts(); }

namespace {

mpz_class big_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (!j.is_string()) throw std::invalid_argument("expected an integer string");
  return mpz_class(j.get<std::string>());
}

Monomial exponents_from_json(const json& j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) {
    throw std::invalid_argument("exponent vector must have " + std::to_string(n) + " entries");
  }
  std::vector<int> e;
  for (const json& v : j) {
    if (!v.is_number_integer()) throw std::invalid_argument("exponent must be an integer");
    e.push_back(v.get<int>());
  }
  return Monomial(std::span<const int>(e));
}

template <class C, class Parse>
MPoly<C> terms_from_json(const json& terms, int n, Parse parse) {
  if (!terms.is_array()) throw std::invalid_argument("polynomial must be a list of terms");
  MPoly<C> f(n);
  for (const json& t : terms) {
    if (!t.is_object() || !t.contains("exp") || !t.contains("coef")) {
      throw std::invalid_argument("term needs \"exp\" and \"coef\"");
    }
    f.add_term(exponents_from_json(t.at("exp"), n), parse(t.at("coef")));
  }
  return f;
}

}  // namespace

AlphaPoly alpha_poly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("alpha polynomial must be a list of coefficients");
  std::vector<mpz_class> coef;
  for (const json& v : j) coef.push_back(big_from_json(v));
  return AlphaPoly(std::move(coef));
}

AlphaFrac alpha_frac_from_json(const json& j) {
  if (j.is_array()) return AlphaFrac(alpha_poly_from_json(j));
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw std::invalid_argument("fraction needs \"num\" and \"den\"");
  }
  try {
    return AlphaFrac(alpha_poly_from_json(j.at("num")), alpha_poly_from_json(j.at("den")));
  } catch (const std::domain_error& e) {
    throw std::invalid_argument(e.what());
  }
}

Composition composition_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("composition must be a list of integers");
  std::vector<int> parts;
  for (const json& v : j) {
    if (!v.is_number_integer()) throw std::invalid_argument("composition part must be an integer");
    parts.push_back(v.get<int>());
  }
  return Composition(std::move(parts));
}

MPoly<AlphaPoly> alpha_poly_terms_from_json(const json& terms, int n) {
  return terms_from_json<AlphaPoly>(terms, n, alpha_poly_from_json);
}

MPoly<AlphaFrac> alpha_frac_terms_from_json(const json& terms, int n) {
  return terms_from_json<AlphaFrac>(terms, n, alpha_frac_from_json);
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

// A coefficient split into sign and magnitude. body renders the magnitude as
// something that can be followed by a basis element without ambiguity.
struct Atom {
  bool negative = false;
  bool unit = false;
  std::string body;
};

int nonzero_count(const AlphaPoly& p) {
  int k = 0;
  for (const mpz_class& c : p.coefficients()) k += sgn(c) != 0;
  return k;
}

std::string wrap(const AlphaPoly& p, Style style) {
  std::string s = render(p, style);
  return nonzero_count(p) > 1 ? "(" + s + ")" : s;
}

Atom atom(const mpz_class& c, Style style) {
  const mpz_class mag = abs(c);
  return {sgn(c) < 0, mag == 1, render(mag, style)};
}

Atom atom(const mpq_class& c, Style style) {
  if (c.get_den() == 1) return atom(mpz_class(c.get_num()), style);
  const mpq_class mag = abs(c);
  std::string body = render(mag, style);
  if (style == Style::Text) body = "(" + body + ")";
  return {sgn(c) < 0, false, body};
}

Atom atom(const AlphaPoly& c, Style style) {
  const bool neg = sgn(c.leading()) < 0;
  const AlphaPoly mag = neg ? -c : c;
  return {neg, mag == AlphaPoly(1), wrap(mag, style)};
}

Atom atom(const AlphaFrac& c, Style style) {
  if (c.is_polynomial()) return atom(c.num(), style);
  const bool neg = sgn(c.num().leading()) < 0;
  const AlphaFrac mag = neg ? -c : c;
  std::string body = render(mag, style);
  if (style == Style::Text) body = "(" + body + ")";
  return {neg, false, body};
}

std::string render_monomial(const Monomial& m, Style style) {
  std::string out;
  for (int k = 0; k < m.n(); ++k) {
    const int e = m[k];
    if (e == 0) continue;
    const std::string idx = std::to_string(k + 1);
    if (style == Style::Text) {
      if (!out.empty()) out += '*';
      out += "x" + idx;
      if (e != 1) out += "^" + std::to_string(e);
    } else {
      out += "x_{" + idx + "}";
      if (e != 1) out += "^{" + std::to_string(e) + "}";
    }
  }
  return out;
}

std::string render_basis(const Composition& mu, const std::string& symbol, Style style) {
  std::string parts;
  for (int p : mu.parts()) {
    if (p == 0) continue;
    if (!parts.empty()) parts += ',';
    parts += std::to_string(p);
  }
  if (style == Style::Text) return symbol + "[" + parts + "]";
  const std::string head = symbol == "m~" ? "\\tilde{m}" : "m";
  return head + "_{(" + parts + ")}";
}

void join_term(std::string& out, const Atom& a, const std::string& basis, const std::string& glue) {
  std::string term;
  if (basis.empty()) {
    term = a.body;
  } else if (a.unit) {
    term = basis;
  } else {
    term = a.body + glue + basis;
  }
  if (out.empty()) {
    out = (a.negative ? "-" : "") + term;
  } else {
    out += (a.negative ? " - " : " + ") + term;
  }
}

template <class C>
std::string render_poly(const MPoly<C>& f, Style style) {
  if (f.is_zero()) return "0";
  std::string out;
  const std::string glue = style == Style::Text ? "*" : " ";
  for (const auto& [m, c] : f.terms()) join_term(out, atom(c, style), render_monomial(m, style), glue);
  return out;
}

template <class C>
std::string render_exp(const Expansion<C>& e, const std::string& symbol, Style style) {
  if (e.empty()) return "0";
  std::string out;
  for (const auto& [mu, c] : e) join_term(out, atom(c, style), render_basis(mu, symbol, style), " ");
  return out;
}

}  // namespace

std::string render(const mpz_class& c, Style) { return c.get_str(); }

std::string render(const mpq_class& c, Style style) {
  if (c.get_den() == 1 || style == Style::Text) return c.get_str();
  const std::string sign = sgn(c) < 0 ? "-" : "";
  return sign + "\\frac{" + mpz_class(abs(c.get_num())).get_str() + "}{" + c.get_den().get_str() + "}";
}

std::string render(const AlphaPoly& c, Style style) {
  if (c.is_zero()) return "0";
  std::string out;
  const auto& coef = c.coefficients();
  for (int k = c.degree(); k >= 0; --k) {
    const mpz_class& v = coef[static_cast<std::size_t>(k)];
    if (sgn(v) == 0) continue;
    if (out.empty()) {
      if (sgn(v) < 0) out += '-';
    } else {
      out += sgn(v) < 0 ? "-" : "+";
    }
    const mpz_class mag = abs(v);
    std::string power;
    if (k >= 1) power = style == Style::Text ? "a" : "\\alpha";
    if (k >= 2) power += style == Style::Text ? "^" + std::to_string(k) : "^{" + std::to_string(k) + "}";
    if (power.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += power;
    } else {
      out += mag.get_str() + (style == Style::Text ? "*" : "") + power;
    }
  }
  return out;
}

std::string render(const AlphaFrac& c, Style style) {
  if (c.is_polynomial()) return render(c.num(), style);
  if (style == Style::Latex) return "\\frac{" + render(c.num(), style) + "}{" + render(c.den(), style) + "}";
  return wrap(c.num(), style) + "/" + wrap(c.den(), style);
}

std::string render_polynomial(const MPoly<mpz_class>& f, Style style) { return render_poly(f, style); }
std::string render_polynomial(const MPoly<mpq_class>& f, Style style) { return render_poly(f, style); }
std::string render_polynomial(const MPoly<AlphaPoly>& f, Style style) { return render_poly(f, style); }
std::string render_polynomial(const MPoly<AlphaFrac>& f, Style style) { return render_poly(f, style); }

std::string render_expansion(const Expansion<AlphaPoly>& e, const std::string& symbol, Style style) {
  return render_exp(e, symbol, style);
}
std::string render_expansion(const Expansion<AlphaFrac>& e, const std::string& symbol, Style style) {
  return render_exp(e, symbol, style);
}

// ---------------------------------------------------------------------------
// Cache files

json cache_to_json(const CacheFile& cache) {
  json entries = json::array();
  for (const auto& [lambda, f] : cache.entries) {
    entries.push_back({{"lambda", to_json(lambda)}, {"poly", terms_to_json(f)}});
  }
  return {{"version", kCacheVersion}, {"n", cache.n}, {"entries", std::move(entries)}};
}

CacheFile cache_from_json(const json& doc, int expected_n) {
  if (!doc.is_object()) throw CacheError("cache document must be a JSON object");
  if (!doc.contains("version") || !doc.at("version").is_number_integer()) {
    throw CacheError("cache document has no version");
  }
  const long version = doc.at("version").get<long>();
  if (version != kCacheVersion) {
    throw CacheError("unsupported cache version " + std::to_string(version) + " (expected " +
                     std::to_string(kCacheVersion) + ")");
  }
  if (!doc.contains("n") || !doc.at("n").is_number_integer()) throw CacheError("cache document has no n");
  CacheFile out;
  out.n = doc.at("n").get<int>();
  if (out.n < 1 || out.n > kMaxVars) throw CacheError("cache n out of range: " + std::to_string(out.n));
  if (expected_n >= 0 && out.n != expected_n) {
    throw CacheError("cache holds n=" + std::to_string(out.n) + ", expected n=" + std::to_string(expected_n));
  }
  if (!doc.contains("entries") || !doc.at("entries").is_array()) throw CacheError("cache has no entries list");
  try {
    for (const json& e : doc.at("entries")) {
      const Composition lambda = composition_from_json(e.at("lambda"));
      if (lambda.n() != out.n) throw CacheError("entry " + lambda.to_string() + " does not have n parts");
      out.entries.emplace_back(lambda, alpha_poly_terms_from_json(e.at("poly"), out.n));
    }
  } catch (const CacheError&) {
    throw;
  } catch (const std::exception& e) {
    throw CacheError(std::string("corrupt cache entry: ") + e.what());
  }
  return out;
}

CacheFile read_cache_file(const std::filesystem::path& path, int expected_n) {
  std::ifstream in(path);
  if (!in) throw CacheError("cannot open cache file " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw CacheError("corrupt cache file " + path.string() + ": " + e.what());
  }
  return cache_from_json(doc, expected_n);
}

void write_cache_file(const std::filesystem::path& path, const CacheFile& cache) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << cache_to_json(cache).dump() << '\n';
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace jack::io
