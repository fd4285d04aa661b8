#include "jack/recursion.hpp"

#include <mutex>
#include <stdexcept>

namespace jack {

std::optional<MPoly<AlphaPoly>> MemoStore::find(const Composition& lambda) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find(lambda);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void MemoStore::insert(const Composition& lambda, MPoly<AlphaPoly> f) {
  std::unique_lock lock(mutex_);
  entries_.insert_or_assign(lambda, std::move(f));
}

std::size_t MemoStore::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

std::size_t MemoStore::total_terms() const {
  std::shared_lock lock(mutex_);
  std::size_t total = 0;
  for (const auto& [lambda, f] : entries_) total += f.size();
  return total;
}

void MemoStore::clear() {
  std::unique_lock lock(mutex_);
  entries_.clear();
}

std::vector<std::pair<Composition, MPoly<AlphaPoly>>> MemoStore::snapshot() const {
  std::shared_lock lock(mutex_);
  return {entries_.begin(), entries_.end()};
}

MPoly<AlphaPoly> F_nonsym(const Composition& lambda, MemoStore& memo) {
  const int n = lambda.n();
  const int m = lambda.length();
  if (m == 0) return MPoly<AlphaPoly>::constant(n, AlphaPoly(1));
  if (auto hit = memo.find(lambda)) return *std::move(hit);

  const MPoly<AlphaPoly> prev = F_nonsym(star_shape(lambda), memo);
  MPoly<AlphaPoly> out = phi_k(m, prev) * (eigenvalue(lambda, m) + AlphaPoly(m));
  for (int i = m + 1; i <= n; ++i) out += phi_k(i, prev);
  memo.insert(lambda, out);
  return out;
}

MPoly<AlphaPoly> F_nonsym(const Composition& lambda) {
  MemoStore memo;
  return F_nonsym(lambda, memo);
}

MPoly<AlphaFrac> E_nonsym(const Composition& lambda, MemoStore& memo) {
  return divide_by_alpha_poly(F_nonsym(lambda, memo), upper_hook_product(lambda));
}

MPoly<AlphaFrac> E_nonsym(const Composition& lambda) {
  MemoStore memo;
  return E_nonsym(lambda, memo);
}

MPoly<AlphaFrac> swap_op(const Composition& lambda, int i, const MPoly<AlphaFrac>& f) {
  if (i < 1 || i >= lambda.n()) throw std::out_of_range("swap_op index");
  if (lambda.part(i) <= lambda.part(i + 1)) {
    throw std::invalid_argument("swap_op requires lambda_i > lambda_{i+1}");
  }
  const AlphaPoly x = eigenvalue(lambda, i) - eigenvalue(lambda, i + 1);
  if (x.is_zero()) throw std::domain_error("swap_op: vanishing spectral gap");
  return simple_reflection(i, f) + f * AlphaFrac(AlphaPoly(1), x);
}

namespace {

template <class C>
MPoly<C> apply_creation(const Composition& lambda, const MPoly<C>& f) {
  const int n = lambda.n();
  const int m = lambda.length();
  if (m == 0) throw std::invalid_argument("creation_X: zero composition");
  // chain = s_i s_{i+1} ... s_{n-1} f, built from i = n (identity) down to m.
  MPoly<C> chain = f;
  MPoly<C> tail(n);
  for (int i = n; i > m; --i) {
    tail += chain;
    chain = simple_reflection(i - 1, chain);
  }
  return chain * C(eigenvalue(lambda, m) + AlphaPoly(m)) + tail;
}

}  // namespace

MPoly<AlphaPoly> creation_X(const Composition& lambda, const MPoly<AlphaPoly>& f) {
  return apply_creation(lambda, f);
}

MPoly<AlphaFrac> creation_X(const Composition& lambda, const MPoly<AlphaFrac>& f) {
  return apply_creation(lambda, f);
}

CyclicWitness cyclic_phi(const Composition& lambda) {
  const int n = lambda.n();
  if (lambda.part(n) == 0) throw std::invalid_argument("cyclic_phi requires lambda_n != 0");
  MemoStore memo;
  CyclicWitness w;
  w.lhs = E_nonsym(lambda, memo);
  w.rhs = phi(E_nonsym(star_shape(lambda), memo));
  w.holds = w.lhs == w.rhs;
  return w;
}

}  // namespace jack
