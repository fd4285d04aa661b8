#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <map>
#include <ostream>
#include <regex>

#include "jack/io.hpp"
#include "jack/recursion.hpp"
#include "jack/symmetric.hpp"
#include "jack/tableau.hpp"
#include "jack/verify.hpp"

namespace jack::cli {

namespace fs = std::filesystem;
using io::json;

namespace {

constexpr int kDeskLimit = 8;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "json";
  int threads = 1;
  std::string cache_dir;  // empty: no cache for compute
  bool cache_explicit = false;
  bool force = false;
};

io::Style style_of(const std::string& format) { return format == "latex" ? io::Style::Latex : io::Style::Text; }

// ---------------------------------------------------------------------------
// Cache directory: one file per variable count, F_n<N>.json.

class CacheDir {
 public:
  explicit CacheDir(fs::path dir) : dir_(std::move(dir)) {}

  fs::path file(int n) const { return dir_ / ("F_n" + std::to_string(n) + ".json"); }

  std::vector<int> stored() const {
    std::vector<int> ns;
    if (!fs::is_directory(dir_)) return ns;
    static const std::regex name(R"(F_n(\d+)\.json)");
    for (const auto& entry : fs::directory_iterator(dir_)) {
      std::smatch m;
      const std::string base = entry.path().filename().string();
      if (std::regex_match(base, m, name)) ns.push_back(std::stoi(m[1]));
    }
    std::sort(ns.begin(), ns.end());
    return ns;
  }

  io::CacheFile read(int n) const {
    if (!fs::exists(file(n))) return {n, {}};
    return io::read_cache_file(file(n), n);
  }

  void load_into(int n, MemoStore& memo) const {
    for (auto& [lambda, f] : read(n).entries) memo.insert(lambda, std::move(f));
  }

  /// Merges entries into the stored file for cache.n.
  void merge(const io::CacheFile& cache) const {
    std::map<Composition, MPoly<AlphaPoly>> all;
    for (auto& [lambda, f] : read(cache.n).entries) all.insert_or_assign(lambda, std::move(f));
    for (const auto& [lambda, f] : cache.entries) all.insert_or_assign(lambda, f);
    io::CacheFile merged{cache.n, {all.begin(), all.end()}};
    io::write_cache_file(file(cache.n), merged);
  }

  void save_from(int n, const MemoStore& memo) const {
    io::CacheFile c{n, {}};
    for (auto& [lambda, f] : memo.snapshot()) {
      if (lambda.n() == n) c.entries.emplace_back(lambda, std::move(f));
    }
    merge(c);
  }

 private:
  fs::path dir_;
};

/// F_lambda through the recursion, using the cache directory when one was
/// given explicitly.
MPoly<AlphaPoly> cached_F(const Composition& lambda, const Globals& g) {
  MemoStore memo;
  if (!g.cache_explicit) return F_nonsym(lambda, memo);
  const CacheDir dir(g.cache_dir);
  dir.load_into(lambda.n(), memo);
  MPoly<AlphaPoly> f = F_nonsym(lambda, memo);
  dir.save_from(lambda.n(), memo);
  return f;
}

MPoly<AlphaPoly> cached_J(const Composition& partition, int n, const Globals& g) {
  const int l = partition.length();
  if (l == 0 || n < l) return jack_J(partition, n);
  const int big = n + l;
  if (big > kMaxVars) throw UsageError("n + l(lambda) exceeds the supported " + std::to_string(kMaxVars) + " variables");
  const MPoly<AlphaPoly> f = cached_F(partition.resized(big), g);
  std::vector<int> head;
  for (int i = 1; i <= l; ++i) head.push_back(i);
  return remove_variables(substitute_zero(f, head), head);
}

// ---------------------------------------------------------------------------
// compute

struct ComputeArgs {
  std::string kind;
  std::string lambda;
  int n = 0;
  std::string basis;
  std::string engine = "recursion";
};

Composition parse_lambda(const std::string& text, int n) {
  Composition lambda;
  try {
    lambda = Composition::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--lambda: ") + e.what());
  }
  if (n == 0) return lambda;
  if (n < 1) throw UsageError("--n: must be positive");
  try {
    return lambda.resized(n);
  } catch (const std::invalid_argument&) {
    throw UsageError("--n: " + std::to_string(n) + " is smaller than the length of --lambda " + text);
  }
}

template <class C>
void emit_polynomial(const std::string& kind, const Composition& lambda, const MPoly<C>& f, const Globals& g,
                     std::ostream& out) {
  if (g.format == "json") {
    json doc = {{"kind", "polynomial"},
                {"name", kind},
                {"lambda", io::to_json(lambda)},
                {"n", f.nvars()},
                {"terms", io::terms_to_json(f)}};
    out << doc.dump() << '\n';
  } else {
    out << io::render_polynomial(f, style_of(g.format)) << '\n';
  }
}

template <class C>
void emit_expansion(const std::string& kind, const Composition& lambda, int n, const std::string& basis,
                    const Expansion<C>& e, const Globals& g, std::ostream& out) {
  if (g.format == "json") {
    json doc = io::expansion_to_json(lambda, basis, e);
    doc["kind"] = "expansion";
    doc["name"] = kind;
    doc["n"] = n;
    out << doc.dump() << '\n';
  } else {
    out << io::render_expansion(e, basis == "m-tilde" ? "m~" : "m", style_of(g.format)) << '\n';
  }
}

int cmd_compute(const ComputeArgs& a, const Globals& g, std::ostream& out) {
  const Composition lambda = parse_lambda(a.lambda, a.n);
  const int n = lambda.n();
  if (!g.force && (lambda.degree() > kDeskLimit || n > kDeskLimit)) {
    throw UsageError("refusing |lambda| > 8 or n > 8 without --force");
  }
  if (n > kMaxVars) throw UsageError("--n: at most " + std::to_string(kMaxVars) + " variables are supported");
  const bool symmetric = a.kind == "J" || a.kind == "P";
  const std::string basis = a.basis.empty() ? (symmetric ? "m" : "x") : a.basis;
  if (symmetric && !lambda.is_partition()) throw UsageError("--lambda: " + a.kind + " requires a partition");
  if (!symmetric && basis != "x") throw UsageError("--basis: " + basis + " requires kind J or P");
  if (!symmetric && a.engine == "symmetrization") throw UsageError("--engine: symmetrization computes J or P only");

  if (!symmetric) {
    const MPoly<AlphaPoly> f = a.engine == "tableau" ? F_comb(lambda, g.threads) : cached_F(lambda, g);
    if (a.kind == "F") {
      emit_polynomial(a.kind, lambda, f, g, out);
    } else {
      emit_polynomial(a.kind, lambda, divide_by_alpha_poly(f, upper_hook_product(lambda)), g, out);
    }
    return kOk;
  }

  MPoly<AlphaPoly> j;
  if (a.engine == "tableau") {
    j = J_comb(lambda, n, g.threads);
  } else if (a.engine == "symmetrization") {
    if (n > 6) throw UsageError("--engine: symmetrization is limited to n <= 6");
    j = J_via_symmetrization(lambda, n);
  } else {
    j = cached_J(lambda, n, g);
  }

  if (a.kind == "J") {
    if (basis == "x") {
      emit_polynomial(a.kind, lambda, j, g, out);
    } else {
      const MonomialExpansion e = expand_monomial(j);
      emit_expansion(a.kind, lambda, n, basis, basis == "m" ? e.v : e.v_tilde, g, out);
    }
    return kOk;
  }
  const MPoly<AlphaFrac> p = divide_by_alpha_poly(j, lower_hook_product(lambda));
  if (basis == "x") {
    emit_polynomial(a.kind, lambda, p, g, out);
    return kOk;
  }
  Expansion<AlphaFrac> e = expand_in_monomials(p);
  if (basis == "m-tilde") {
    for (auto& [mu, c] : e) c = c / AlphaFrac(mpq_class(multiplicity_data(mu).u));
  }
  emit_expansion(a.kind, lambda, n, basis, e, g, out);
  return kOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string check;
  int n_max = 3;
  int deg_max = 4;
  std::vector<int> k_list = {1, 2};
};

int cmd_verify(const VerifyArgs& a, const Globals& g, std::ostream& out) {
  const auto& names = check_names();
  if (std::find(names.begin(), names.end(), a.check) == names.end()) {
    throw UsageError("unknown check '" + a.check + "'");
  }
  if (a.n_max < 1 || a.deg_max < 0) throw UsageError("--n-max must be >= 1 and --deg-max >= 0");
  if (!g.force && (a.n_max > kDeskLimit || a.deg_max > kDeskLimit)) {
    throw UsageError("refusing --n-max > 8 or --deg-max > 8 without --force");
  }
  for (int k : a.k_list) {
    if (k < 1) throw UsageError("--k-list: entries must be positive integers");
  }
  const Verdict v = run_check(a.check, {a.n_max, a.deg_max, a.k_list});
  if (g.format == "json") {
    out << json{{"kind", "verdict-list"}, {"verdicts", json::array({to_json(v)})}}.dump() << '\n';
  } else {
    out << (v.pass ? "PASS " : "FAIL ") << v.check << " (" << v.count << " cases)";
    if (!v.pass) out << " counterexample " << v.counterexample.dump();
    out << '\n';
  }
  return v.pass ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------------
// cache

struct CacheArgs {
  std::string action;
  std::string path;
  int n = 0;
};

std::size_t term_count(const io::CacheFile& c) {
  std::size_t t = 0;
  for (const auto& [lambda, f] : c.entries) t += f.size();
  return t;
}

int cmd_cache(const CacheArgs& a, const Globals& g, std::ostream& out) {
  const CacheDir dir(g.cache_dir);
  const bool text = g.format != "json";
  if (a.action == "stats") {
    std::size_t entries = 0, terms = 0;
    json files = json::array();
    for (int n : dir.stored()) {
      const io::CacheFile c = dir.read(n);
      entries += c.entries.size();
      terms += term_count(c);
      files.push_back({{"n", n}, {"entries", c.entries.size()}, {"terms", term_count(c)}});
    }
    if (text) {
      out << "entries " << entries << " terms " << terms << '\n';
    } else {
      out << json{{"kind", "cache-stats"}, {"entries", entries}, {"terms", terms}, {"files", files}}.dump() << '\n';
    }
    return kOk;
  }
  if (a.action == "clear") {
    const std::vector<int> ns = dir.stored();
    for (int n : ns) fs::remove(dir.file(n));
    if (text) {
      out << "cleared " << ns.size() << " files\n";
    } else {
      out << json{{"kind", "cache-clear"}, {"files", ns.size()}}.dump() << '\n';
    }
    return kOk;
  }
  if (a.path.empty()) throw UsageError("--path is required for cache " + a.action);
  if (a.action == "export") {
    int n = a.n;
    if (n == 0) {
      const std::vector<int> ns = dir.stored();
      if (ns.size() != 1) throw UsageError("--n: the cache holds " + std::to_string(ns.size()) + " variable counts");
      n = ns.front();
    }
    const io::CacheFile c = dir.read(n);
    io::write_cache_file(a.path, c);
    if (text) {
      out << "exported " << c.entries.size() << " entries (n=" << n << ")\n";
    } else {
      out << json{{"kind", "cache-export"}, {"n", n}, {"entries", c.entries.size()}, {"terms", term_count(c)}}.dump()
          << '\n';
    }
    return kOk;
  }
  if (a.action == "import") {
    const io::CacheFile c = io::read_cache_file(a.path, a.n == 0 ? -1 : a.n);
    dir.merge(c);
    if (text) {
      out << "imported " << c.entries.size() << " entries (n=" << c.n << ")\n";
    } else {
      out << json{{"kind", "cache-import"}, {"n", c.n}, {"entries", c.entries.size()}, {"terms", term_count(c)}}.dump()
          << '\n';
    }
    return kOk;
  }
  throw UsageError("unknown cache action '" + a.action + "'");
}

int env_threads() {
  const char* v = std::getenv("JACKPOLY_THREADS");
  if (!v || !*v) return 1;
  try {
    return std::max(1, std::stoi(v));
  } catch (const std::exception&) {
    throw UsageError(std::string("JACKPOLY_THREADS: not an integer: ") + v);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Jack polynomials: computation and verification", "jackpoly"};
  app.require_subcommand(1);

  Globals g;
  std::optional<int> threads;
  std::string cache_dir;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text", "latex"}));
  app.add_option("--threads", threads, "Worker threads for tableau sums (env JACKPOLY_THREADS)")
      ->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", cache_dir, "Cache directory (env JACKPOLY_CACHE_DIR)");
  app.add_flag("--force", g.force, "Allow inputs beyond |lambda| = 8 or n = 8");

  ComputeArgs ca;
  auto* compute = app.add_subcommand("compute", "Compute F, E, J or P")->fallthrough();
  compute->add_option("kind", ca.kind, "F, E, J or P")->required()->check(CLI::IsMember({"F", "E", "J", "P"}));
  compute->add_option("--lambda", ca.lambda, "Composition, e.g. 0,2,1")->required();
  compute->add_option("--n", ca.n, "Number of variables (default: length of --lambda)");
  compute->add_option("--basis", ca.basis, "x, m or m-tilde")->check(CLI::IsMember({"x", "m", "m-tilde"}));
  compute->add_option("--engine", ca.engine, "recursion, tableau or symmetrization")
      ->check(CLI::IsMember({"recursion", "tableau", "symmetrization"}));

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run a verification sweep")->fallthrough();
  std::string names;
  for (const std::string& c : check_names()) names += (names.empty() ? "" : ", ") + c;
  verify->add_option("check", va.check, "One of: " + names)->required();
  verify->add_option("--n-max", va.n_max, "Largest number of variables");
  verify->add_option("--deg-max", va.deg_max, "Largest degree");
  verify->add_option("--k-list", va.k_list, "Values k for alpha = 1/k")->delimiter(',');

  CacheArgs xa;
  auto* cache = app.add_subcommand("cache", "Inspect or move the F cache")->fallthrough();
  cache->add_option("action", xa.action, "stats, clear, export or import")
      ->required()
      ->check(CLI::IsMember({"stats", "clear", "export", "import"}));
  cache->add_option("--path", xa.path, "File for export/import");
  cache->add_option("--n", xa.n, "Variable count to export or expect on import");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    g.threads = threads ? *threads : env_threads();
    if (!cache_dir.empty()) {
      g.cache_dir = cache_dir;
      g.cache_explicit = true;
    } else if (const char* env = std::getenv("JACKPOLY_CACHE_DIR"); env && *env) {
      g.cache_dir = env;
      g.cache_explicit = true;
    } else {
      g.cache_dir = ".jackpoly-cache";
    }
    if (compute->parsed()) return cmd_compute(ca, g, out);
    if (verify->parsed()) return cmd_verify(va, g, out);
    return cmd_cache(xa, g, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const io::CacheError& e) {
    err << "error: " << e.what() << '\n';
    return kCacheError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace jack::cli
