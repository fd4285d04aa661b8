#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "jack/io.hpp"
#include "jack/recursion.hpp"
#include "jack/symmetric.hpp"
#include "support.hpp"

using namespace jack;
using namespace jack::io;
using support::a;
using support::mono;
using support::x;
using P = MPoly<AlphaPoly>;

namespace {

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "jackpoly-io-test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("scalar JSON round-trips") {
  const AlphaPoly p{3, 0, -12345678901234567LL};
  CHECK(to_json(p) == json::parse(R"(["3","0","-12345678901234567"])"));
  CHECK(alpha_poly_from_json(to_json(p)) == p);
  CHECK(alpha_poly_from_json(json::parse("[1, \"2\"]")) == AlphaPoly{1, 2});
  const AlphaFrac f(AlphaPoly(2), a + 1);
  CHECK(alpha_frac_from_json(to_json(f)) == f);
  CHECK(alpha_frac_from_json(json::parse("[\"5\"]")) == AlphaFrac(5));
  CHECK(to_json(mpq_class(3, 4)) == "3/4");
  CHECK(to_json(Composition{0, 2, 1}) == json::parse("[0,2,1]"));
  CHECK(composition_from_json(json::parse("[0,2,1]")) == Composition{0, 2, 1});
}

TEST_CASE("malformed JSON values are rejected") {
  CHECK_THROWS_AS((alpha_poly_from_json(json::parse("\"1\""))), std::invalid_argument);
  CHECK_THROWS_AS((alpha_poly_from_json(json::parse("[\"x\"]"))), std::invalid_argument);
  CHECK_THROWS_AS((alpha_frac_from_json(json::parse(R"({"num":["1"]})"))), std::invalid_argument);
  CHECK_THROWS_AS((alpha_frac_from_json(json::parse(R"({"num":["1"],"den":[]})"))), std::invalid_argument);
  CHECK_THROWS_AS((composition_from_json(json::parse("[1,-1]"))), std::invalid_argument);
  CHECK_THROWS_AS((composition_from_json(json::parse("[1.5]"))), std::invalid_argument);
  CHECK_THROWS_AS((alpha_poly_terms_from_json(json::parse(R"([{"exp":[1],"coef":["1"]}])"), 2)),
                  std::invalid_argument);
}

TEST_CASE("polynomial JSON round-trips") {
  MemoStore memo;
  for (const Composition& lam : compositions(3, 3)) {
    const P f = F_nonsym(lam, memo);
    CHECK(alpha_poly_terms_from_json(terms_to_json(f), 3) == f);
    const auto e = E_nonsym(lam, memo);
    CHECK(alpha_frac_terms_from_json(terms_to_json(e), 3) == e);
  }
  const json t = terms_to_json(F_nonsym({1, 0}));
  CHECK(t == json::parse(R"([{"exp":[1,0],"coef":["1","1"]},{"exp":[0,1],"coef":["1"]}])"));
}

TEST_CASE("expansion JSON") {
  const Expansion<AlphaPoly> e = expand_monomial(jack_J({2}, 2)).v;
  const json doc = expansion_to_json(Composition{2}, "m", e);
  CHECK(doc.at("basis") == "m");
  CHECK(doc.at("lambda") == json::parse("[2]"));
  CHECK(doc.at("entries").size() == 2);
  CHECK(doc.at("entries")[0].at("mu") == json::parse("[2,0]"));
  CHECK(doc.at("entries")[0].at("coef") == json::parse(R"(["1","1"])"));
}

TEST_CASE("text rendering") {
  CHECK(render_polynomial(F_nonsym({1, 0}), Style::Text) == "(a+1)*x1 + x2");
  CHECK(render_polynomial(E_nonsym({1, 0}), Style::Text) == "x1 + (1/(a+1))*x2");
  CHECK(render_polynomial(P(2), Style::Text) == "0");
  CHECK(render_polynomial(P::constant(2, AlphaPoly(-3)), Style::Text) == "-3");
  CHECK(render(AlphaPoly{2, 3, 1}, Style::Text) == "a^2+3*a+2");
  CHECK(render(AlphaFrac(AlphaPoly(2), a + 1), Style::Text) == "2/(a+1)");
  CHECK(render_expansion(expand_monomial(jack_J({2, 1}, 3)).v, "m", Style::Text) == "(a+2) m[2,1] + 6 m[1,1,1]");
  CHECK(render_expansion(expand_in_monomials(P_sym({2}, 2)), "m", Style::Text) == "m[2] + (2/(a+1)) m[1,1]");
  CHECK(render_expansion(expand_in_monomials(P_sym({1, 1}, 2)), "m", Style::Text) == "m[1,1]");
}

TEST_CASE("LaTeX rendering") {
  CHECK(render_polynomial(F_nonsym({1, 0}), Style::Latex) == "(\\alpha+1) x_{1} + x_{2}");
  CHECK(render(AlphaFrac(AlphaPoly(2), a + 1), Style::Latex) == "\\frac{2}{\\alpha+1}");
  const std::string tilde = render_expansion(expand_monomial(jack_J({2}, 2)).v_tilde, "m~", Style::Latex);
  CHECK(tilde.find("\\tilde{m}") != std::string::npos);
}

TEST_CASE("cache documents round-trip") {
  MemoStore memo;
  F_nonsym({2, 0, 1}, memo);
  CacheFile cache{3, memo.snapshot()};
  const json doc = cache_to_json(cache);
  CHECK(doc.at("version") == kCacheVersion);
  CHECK(doc.at("n") == 3);
  const CacheFile back = cache_from_json(doc, 3);
  CHECK(back.n == 3);
  CHECK(back.entries == cache.entries);

  const auto path = scratch("roundtrip.json");
  write_cache_file(path, cache);
  CHECK(read_cache_file(path).entries == cache.entries);
}

TEST_CASE("bad cache documents raise CacheError") {
  json doc = cache_to_json(CacheFile{2, {{Composition{1, 0}, F_nonsym({1, 0})}}});
  CHECK_NOTHROW(cache_from_json(doc));

  json wrong_version = doc;
  wrong_version["version"] = 99;
  CHECK_THROWS_AS((cache_from_json(wrong_version)), CacheError);

  CHECK_THROWS_AS((cache_from_json(doc, 3)), CacheError);

  json wrong_entry = doc;
  wrong_entry["entries"][0]["lambda"] = json::parse("[1,0,0]");
  CHECK_THROWS_AS((cache_from_json(wrong_entry)), CacheError);

  json no_version = doc;
  no_version.erase("version");
  CHECK_THROWS_AS((cache_from_json(no_version)), CacheError);

  const auto path = scratch("corrupt.json");
  std::ofstream(path) << "{ not json";
  CHECK_THROWS_AS((read_cache_file(path)), CacheError);
  CHECK_THROWS_AS((read_cache_file(scratch("missing-file.json"))), CacheError);
}
