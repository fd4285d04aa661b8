#include "jack/tableau.hpp"

#include <algorithm>
#include <future>
#include <ostream>
#include <stdexcept>

#include "jack/recursion.hpp"

namespace jack {

Tableau::Tableau(Composition shape, int labels) : shape_(std::move(shape)), labels_(labels) {
  if (labels < 1) throw std::invalid_argument("tableau needs at least one label");
  for (int p : shape_.parts()) rows_.emplace_back(static_cast<std::size_t>(p), 0);
}

Monomial Tableau::weight() const {
  Monomial m(labels_);
  for (const auto& row : rows_) {
    for (int v : row) m.add(v - 1, 1);
  }
  return m;
}

namespace {

bool admissible_at(const Tableau& t, Box s) {
  const Composition& sh = t.shape();
  const int v = t.label(s);
  for (int r = s.row + 1; r <= sh.n(); ++r) {
    if (sh.part(r) >= s.col && t.label({r, s.col}) == v) return false;
  }
  if (s.col > 1) {
    for (int r = 1; r < s.row; ++r) {
      if (sh.part(r) >= s.col - 1 && t.label({r, s.col - 1}) == v) return false;
    }
  }
  return true;
}

bool is_critical(const Tableau& t, Box s, bool zero_variant) {
  if (s.col > 1) return t.label(s) == t.label({s.row, s.col - 1});
  return zero_variant && t.label(s) == s.row;
}

std::vector<Box> column_major(const Composition& shape) {
  std::vector<Box> order;
  const int width = *std::max_element(shape.parts().begin(), shape.parts().end());
  for (int j = 1; j <= width; ++j) {
    for (int i = 1; i <= shape.n(); ++i) {
      if (shape.part(i) >= j) order.push_back({i, j});
    }
  }
  return order;
}

}  // namespace

bool is_admissible(const Tableau& t) {
  for (Box s : t.shape().boxes()) {
    const int v = t.label(s);
    if (v < 1 || v > t.labels() || !admissible_at(t, s)) return false;
  }
  return true;
}

bool is_zero_admissible(const Tableau& t) {
  if (!is_admissible(t)) return false;
  for (int i = 1; i <= t.shape().n(); ++i) {
    if (t.shape().part(i) >= 1 && t.label({i, 1}) < i) return false;
  }
  return true;
}

AlphaPoly hook_weight(const Tableau& t, bool zero_variant) {
  AlphaPoly w(1);
  for (Box s : t.shape().boxes()) {
    if (is_critical(t, s, zero_variant)) w *= hook_data(t.shape(), s).upper;
  }
  return w;
}

TableauEnumerator::TableauEnumerator(Composition shape, int labels, bool zero_variant,
                                     std::optional<int> first_label)
    : tableau_(shape, labels),
      order_(column_major(shape)),
      cur_(order_.size(), 0),
      zero_variant_(zero_variant),
      first_label_(first_label) {}

int TableauEnumerator::min_label(std::size_t pos) const {
  if (pos == 0 && first_label_) return *first_label_;
  const Box s = order_[pos];
  return (zero_variant_ && s.col == 1) ? s.row : 1;
}

int TableauEnumerator::max_label(std::size_t pos) const {
  if (pos == 0 && first_label_) return *first_label_;
  return tableau_.labels();
}

bool TableauEnumerator::fits(std::size_t pos, int v) const {
  const Box s = order_[pos];
  if (zero_variant_ && s.col == 1 && v < s.row) return false;
  const Composition& sh = tableau_.shape();
  for (int r = 1; r < s.row; ++r) {
    if (sh.part(r) >= s.col && tableau_.label({r, s.col}) == v) return false;
    if (s.col > 1 && sh.part(r) >= s.col - 1 && tableau_.label({r, s.col - 1}) == v) return false;
  }
  return true;
}

bool TableauEnumerator::next() {
  if (done_) return false;
  const std::size_t total = order_.size();
  std::size_t pos = 0;
  if (!started_) {
    started_ = true;
    if (total == 0) return true;  // the empty tableau
    cur_[0] = min_label(0) - 1;
  } else {
    if (total == 0) {
      done_ = true;
      return false;
    }
    pos = total - 1;
  }
  while (true) {
    int v = cur_[pos] + 1;
    const int hi = max_label(pos);
    while (v <= hi && !fits(pos, v)) ++v;
    if (v <= hi) {
      cur_[pos] = v;
      tableau_.set_label(order_[pos], v);
      if (pos + 1 == total) return true;
      ++pos;
      cur_[pos] = min_label(pos) - 1;
    } else {
      if (pos == 0) {
        done_ = true;
        return false;
      }
      --pos;
    }
  }
}

namespace {

MPoly<AlphaPoly> tableau_sum(const Composition& shape, int labels, bool zero_variant, int threads) {
  if (labels > kMaxVars) throw std::invalid_argument("too many labels");
  const std::vector<Box> boxes = shape.boxes();
  std::vector<AlphaPoly> hooks;
  hooks.reserve(boxes.size());
  for (Box s : boxes) hooks.push_back(hook_data(shape, s).upper);

  auto partial = [&](std::optional<int> first) {
    MPoly<AlphaPoly> acc(labels);
    TableauEnumerator e(shape, labels, zero_variant, first);
    while (e.next()) {
      const Tableau& t = e.current();
      AlphaPoly w(1);
      for (std::size_t k = 0; k < boxes.size(); ++k) {
        if (is_critical(t, boxes[k], zero_variant)) w *= hooks[k];
      }
      acc.add_term(t.weight(), std::move(w));
    }
    return acc;
  };

  if (threads <= 1 || shape.is_zero()) return partial(std::nullopt);

  std::vector<std::future<MPoly<AlphaPoly>>> parts;
  const int workers = std::min(threads, labels);
  for (int w = 0; w < workers; ++w) {
    parts.push_back(std::async(std::launch::async, [&, w] {
      MPoly<AlphaPoly> acc(labels);
      for (int first = 1 + w; first <= labels; first += workers) acc += partial(first);
      return acc;
    }));
  }
  MPoly<AlphaPoly> total(labels);
  for (auto& p : parts) total += p.get();
  return total;
}

}  // namespace

MPoly<AlphaPoly> F_comb(const Composition& lambda, int threads) {
  return tableau_sum(lambda, lambda.n(), true, threads);
}

MPoly<AlphaPoly> J_comb(const Composition& partition, int n, int threads) {
  if (!partition.is_partition()) throw std::invalid_argument("J_comb requires a partition");
  return tableau_sum(partition, n, false, threads);
}

std::size_t count_tableaux(const Composition& shape, int labels, bool zero_variant) {
  std::size_t count = 0;
  TableauEnumerator e(shape, labels, zero_variant);
  while (e.next()) ++count;
  return count;
}

void dump_tableaux(std::ostream& os, const Composition& shape, int labels, bool zero_variant) {
  os << "# shape " << shape.to_string() << " labels " << labels << '\n';
  TableauEnumerator e(shape, labels, zero_variant);
  while (e.next()) {
    const Tableau& t = e.current();
    for (int i = 1; i <= shape.n(); ++i) {
      if (i > 1) os << " | ";
      if (shape.part(i) == 0) {
        os << '-';
        continue;
      }
      for (int j = 1; j <= shape.part(i); ++j) {
        if (j > 1) os << ' ';
        os << t.label({i, j});
      }
    }
    os << '\n';
  }
}

LemmaWitness l2_l3_witness(const Composition& lambda, TableauLemma kind, int i) {
  LemmaWitness w;
  const MPoly<AlphaPoly> base = F_comb(lambda);
  if (kind == TableauLemma::L2) {
    if (i < 1 || i >= lambda.n() || lambda.part(i) != 0 || lambda.part(i + 1) == 0) {
      throw std::invalid_argument("L2 requires lambda_i = 0 and lambda_{i+1} > 0");
    }
    w.d = hook_data(lambda, {i + 1, 1}).upper;
    w.lhs = F_comb(act(Permutation::simple(lambda.n(), i), lambda)) * w.d;
    w.rhs = simple_reflection(i, base) * (w.d - AlphaPoly(1)) + base;
  } else {
    const Composition shifted = cyclic_shift(lambda);
    w.d = hook_data(shifted, {lambda.n(), 1}).upper;
    w.lhs = F_comb(shifted);
    w.rhs = phi(base) * w.d;
  }
  w.holds = w.lhs == w.rhs;
  return w;
}

}  // namespace jack
