#include "jack/composition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace jack {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("composition must have at least one part");
  for (int p : parts_) {
    if (p < 0) throw std::invalid_argument("composition parts must be non-negative");
  }
}

Composition Composition::zero(int n) { return Composition(std::vector<int>(static_cast<std::size_t>(n), 0)); }

Composition Composition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view field = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
      throw std::invalid_argument("malformed composition '" + std::string(text) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Composition(std::move(parts));
}

int Composition::degree() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Composition::length() const {
  for (int i = n(); i >= 1; --i) {
    if (parts_[static_cast<std::size_t>(i - 1)] != 0) return i;
  }
  return 0;
}

bool Composition::is_partition() const {
  return std::is_sorted(parts_.begin(), parts_.end(), std::greater<>());
}

bool Composition::contains(Box s) const {
  return s.row >= 1 && s.row <= n() && s.col >= 1 && s.col <= part(s.row);
}

std::vector<Box> Composition::boxes() const {
  std::vector<Box> out;
  for (int i = 1; i <= n(); ++i) {
    for (int j = 1; j <= part(i); ++j) out.push_back({i, j});
  }
  return out;
}

std::string Composition::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) os << ',';
    os << parts_[k];
  }
  return os.str();
}

Composition Composition::resized(int n) const {
  std::vector<int> p = parts_;
  if (n < static_cast<int>(p.size())) {
    for (std::size_t k = static_cast<std::size_t>(n); k < p.size(); ++k) {
      if (p[k] != 0) throw std::invalid_argument("resized: would drop a nonzero part");
    }
  }
  p.resize(static_cast<std::size_t>(n), 0);
  return Composition(std::move(p));
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size() + 1, false);
  for (int v : img_) {
    if (v < 1 || v > n() || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::simple(int n, int i) { return transposition(n, i, i + 1); }

Permutation Permutation::transposition(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n) throw std::out_of_range("transposition index");
  Permutation w = identity(n);
  std::swap(w.img_[static_cast<std::size_t>(i - 1)], w.img_[static_cast<std::size_t>(j - 1)]);
  return w;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 1; i <= n(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Permutation(std::move(inv));
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t a = 0; a < img_.size(); ++a) {
    for (std::size_t b = a + 1; b < img_.size(); ++b) inv += img_[a] > img_[b];
  }
  return inv;
}

Permutation operator*(const Permutation& w, const Permutation& v) {
  if (w.n() != v.n()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> img(static_cast<std::size_t>(w.n()));
  for (int i = 1; i <= w.n(); ++i) img[static_cast<std::size_t>(i - 1)] = w(v(i));
  return Permutation(std::move(img));
}

bool bruhat_leq(const Permutation& w, const Permutation& v) {
  if (w.n() != v.n()) return false;
  const int n = w.n();
  // rank[j] accumulates #{a <= i : w(a) >= j} row by row.
  std::vector<int> rw(static_cast<std::size_t>(n + 2), 0);
  std::vector<int> rv(static_cast<std::size_t>(n + 2), 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= w(i); ++j) ++rw[static_cast<std::size_t>(j)];
    for (int j = 1; j <= v(i); ++j) ++rv[static_cast<std::size_t>(j)];
    for (int j = 1; j <= n; ++j) {
      if (rw[static_cast<std::size_t>(j)] > rv[static_cast<std::size_t>(j)]) return false;
    }
  }
  return true;
}

Composition act(const Permutation& w, const Composition& lambda) {
  if (w.n() != lambda.n()) throw std::invalid_argument("act: size mismatch");
  std::vector<int> out(static_cast<std::size_t>(lambda.n()));
  for (int i = 1; i <= lambda.n(); ++i) out[static_cast<std::size_t>(w(i) - 1)] = lambda.part(i);
  return Composition(std::move(out));
}

Composition lambda_plus(const Composition& lambda) {
  std::vector<int> p = lambda.parts();
  std::sort(p.begin(), p.end(), std::greater<>());
  return Composition(std::move(p));
}

Permutation w_lambda(const Composition& lambda) {
  std::vector<int> positions(static_cast<std::size_t>(lambda.n()));
  std::iota(positions.begin(), positions.end(), 1);
  std::stable_sort(positions.begin(), positions.end(),
                   [&](int a, int b) { return lambda.part(a) > lambda.part(b); });
  // lambda_plus_j sits at position positions[j-1] of lambda.
  return Permutation(std::move(positions));
}

bool dominates(const Composition& a, const Composition& b) {
  if (a.n() != b.n() || a.degree() != b.degree()) return false;
  int sa = 0;
  int sb = 0;
  for (int i = 1; i <= a.n(); ++i) {
    sa += a.part(i);
    sb += b.part(i);
    if (sa < sb) return false;
  }
  return true;
}

Order compare(const Composition& lambda, const Composition& mu) {
  if (lambda.n() != mu.n() || lambda.degree() != mu.degree()) return Order::Incomparable;
  if (lambda == mu) return Order::Equal;
  const Composition lp = lambda_plus(lambda);
  const Composition mp = lambda_plus(mu);
  if (lp != mp) {
    if (dominates(lp, mp)) return Order::Greater;
    if (dominates(mp, lp)) return Order::Less;
    return Order::Incomparable;
  }
  const Permutation wl = w_lambda(lambda);
  const Permutation wm = w_lambda(mu);
  if (bruhat_leq(wl, wm)) return Order::Greater;
  if (bruhat_leq(wm, wl)) return Order::Less;
  return Order::Incomparable;
}

const char* to_string(Order o) {
  switch (o) {
    case Order::Less: return "LESS";
    case Order::Greater: return "GREATER";
    case Order::Equal: return "EQUAL";
    case Order::Incomparable: return "INCOMPARABLE";
  }
  return "?";
}

HookData hook_data(const Composition& lambda, Box s) {
  if (!lambda.contains(s)) throw std::out_of_range("box outside diagram");
  const int li = lambda.part(s.row);
  HookData h;
  h.arm = li - s.col;
  for (int k = 1; k < s.row; ++k) {
    const int lk = lambda.part(k) + 1;
    if (s.col <= lk && lk <= li) ++h.leg_upper;
  }
  for (int k = s.row + 1; k <= lambda.n(); ++k) {
    const int lk = lambda.part(k);
    if (s.col <= lk && lk <= li) ++h.leg_lower;
  }
  const long leg = h.leg_upper + h.leg_lower;
  h.lower = AlphaPoly::linear(h.arm, leg + 1);
  h.upper = AlphaPoly::linear(h.arm + 1, leg + 1);
  return h;
}

AlphaPoly lower_hook_product(const Composition& lambda) {
  AlphaPoly p(1);
  for (Box s : lambda.boxes()) p *= hook_data(lambda, s).lower;
  return p;
}

AlphaPoly upper_hook_product(const Composition& lambda) {
  AlphaPoly p(1);
  for (Box s : lambda.boxes()) p *= hook_data(lambda, s).upper;
  return p;
}

AlphaPoly eigenvalue(const Composition& lambda, int i) {
  if (i < 1 || i > lambda.n()) throw std::out_of_range("eigenvalue index");
  const int li = lambda.part(i);
  long k = 0;
  for (int j = 1; j < i; ++j) k += lambda.part(j) >= li;
  for (int j = i + 1; j <= lambda.n(); ++j) k += lambda.part(j) > li;
  return AlphaPoly::linear(li, -k);
}

Composition star_shape(const Composition& lambda) {
  const int m = lambda.length();
  if (m == 0) throw std::invalid_argument("star_shape: zero composition");
  std::vector<int> out(static_cast<std::size_t>(lambda.n()), 0);
  out[0] = lambda.part(m) - 1;
  for (int i = 1; i < m; ++i) out[static_cast<std::size_t>(i)] = lambda.part(i);
  return Composition(std::move(out));
}

Composition sharp_shape(const Composition& lambda) {
  const int m = lambda.length();
  if (m == 0) throw std::invalid_argument("sharp_shape: zero composition");
  std::vector<int> out(static_cast<std::size_t>(lambda.n()), 0);
  for (int i = 1; i < m; ++i) out[static_cast<std::size_t>(i - 1)] = lambda.part(i);
  out.back() = lambda.part(m);
  return Composition(std::move(out));
}

Composition zero_shape(const Composition& lambda) {
  if (!lambda.is_partition()) throw std::invalid_argument("zero_shape: not a partition");
  const int m = lambda.length();
  std::vector<int> out(static_cast<std::size_t>(lambda.n()), 0);
  for (int i = 1; i <= m; ++i) out[static_cast<std::size_t>(i - 1)] = lambda.part(m + 1 - i) - 1;
  return Composition(std::move(out));
}

Composition cyclic_shift(const Composition& lambda) {
  std::vector<int> out(lambda.parts().begin() + 1, lambda.parts().end());
  out.push_back(lambda.part(1) + 1);
  return Composition(std::move(out));
}

Multiplicities multiplicity_data(const Composition& lambda) {
  Multiplicities m;
  for (int p : lambda.parts()) {
    if (p > 0) ++m.counts[p];
  }
  for (const auto& [value, count] : m.counts) {
    for (int f = 2; f <= count; ++f) m.u *= f;
  }
  return m;
}

Composition conjugate(const Composition& partition) {
  if (!partition.is_partition()) throw std::invalid_argument("conjugate: not a partition");
  const int width = std::max(partition.part(1), 1);
  std::vector<int> out(static_cast<std::size_t>(width), 0);
  for (int j = 1; j <= partition.part(1); ++j) {
    for (int i = 1; i <= partition.n(); ++i) out[static_cast<std::size_t>(j - 1)] += partition.part(i) >= j;
  }
  return Composition(std::move(out));
}

namespace {

void fill_compositions(int n, int remaining, std::vector<int>& cur, std::vector<Composition>& out) {
  const std::size_t idx = cur.size();
  if (static_cast<int>(idx) == n - 1) {
    cur.push_back(remaining);
    out.emplace_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    cur.push_back(v);
    fill_compositions(n, remaining - v, cur, out);
    cur.pop_back();
  }
}

void fill_partitions(int n, int remaining, int cap, std::vector<int>& cur, std::vector<Composition>& out) {
  if (remaining == 0) {
    std::vector<int> p = cur;
    p.resize(static_cast<std::size_t>(n), 0);
    out.emplace_back(std::move(p));
    return;
  }
  if (static_cast<int>(cur.size()) == n) return;
  for (int v = std::min(remaining, cap); v >= 1; --v) {
    cur.push_back(v);
    fill_partitions(n, remaining - v, v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Composition> compositions(int n, int degree) {
  if (n < 1 || degree < 0) throw std::invalid_argument("compositions: bad arguments");
  std::vector<Composition> out;
  std::vector<int> cur;
  fill_compositions(n, degree, cur, out);
  return out;
}

std::vector<Composition> partitions(int n, int degree) {
  if (n < 1 || degree < 0) throw std::invalid_argument("partitions: bad arguments");
  std::vector<Composition> out;
  std::vector<int> cur;
  fill_partitions(n, degree, degree, cur, out);
  return out;
}

}  // namespace jack
