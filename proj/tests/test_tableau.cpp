#include <doctest.h>

#include <sstream>

#include "jack/recursion.hpp"
#include "jack/tableau.hpp"
#include "support.hpp"

using namespace jack;
using support::a;
using support::mono;
using support::x;
using P = MPoly<AlphaPoly>;

namespace {

Tableau filled(const Composition& shape, int labels, const std::vector<std::vector<int>>& rows) {
  Tableau t(shape, labels);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      t.set_label({static_cast<int>(i + 1), static_cast<int>(j + 1)}, rows[i][j]);
    }
  }
  return t;
}

// Brute-force tableau sum over every labeling. The zero variant prepends a
// virtual column 0 whose row i carries label i; the ordinary conditions are
// then applied to the augmented diagram.
P brute_force_sum(const Composition& shape, int n, bool zero_variant, std::size_t* count = nullptr) {
  const std::vector<Box> boxes = shape.boxes();
  std::vector<int> labels(boxes.size(), 1);
  P total(n);
  std::size_t seen = 0;
  auto label_at = [&](int row, int col) -> int {
    if (col == 0) return row;
    for (std::size_t k = 0; k < boxes.size(); ++k) {
      if (boxes[k].row == row && boxes[k].col == col) return labels[k];
    }
    return 0;
  };
  auto exists = [&](int row, int col) {
    if (col == 0) return zero_variant;
    return shape.part(row) >= col;
  };
  while (true) {
    bool ok = true;
    for (std::size_t k = 0; k < boxes.size() && ok; ++k) {
      const auto [i, j] = boxes[k];
      for (int r = 1; r <= shape.n() && ok; ++r) {
        if (r != i && exists(r, j) && label_at(r, j) == labels[k]) ok = false;
        if (r < i && exists(r, j - 1) && label_at(r, j - 1) == labels[k]) ok = false;
      }
    }
    if (ok) {
      ++seen;
      AlphaPoly w(1);
      Monomial m(n);
      for (std::size_t k = 0; k < boxes.size(); ++k) {
        const auto [i, j] = boxes[k];
        m.add(labels[k] - 1, 1);
        if (exists(i, j - 1) && label_at(i, j - 1) == labels[k]) w *= hook_data(shape, boxes[k]).upper;
      }
      total.add_term(m, w);
    }
    std::size_t k = 0;
    while (k < labels.size() && labels[k] == n) labels[k++] = 1;
    if (k == labels.size()) break;
    ++labels[k];
  }
  if (count) *count = seen;
  return total;
}

}  // namespace

TEST_CASE("admissibility examples") {
  CHECK_FALSE(is_admissible(filled({1, 1}, 2, {{1}, {1}})));
  CHECK(is_admissible(filled({2, 1}, 2, {{2, 1}, {1}})));
  for (int p = 1; p <= 2; ++p) {
    for (int q = 1; q <= 2; ++q) CHECK(is_admissible(filled({2}, 2, {{p, q}})));
  }
  // Row 2 may not repeat the label of an earlier row one column to the left.
  CHECK_FALSE(is_admissible(filled({1, 2}, 2, {{1}, {2, 1}})));
}

TEST_CASE("zero-admissibility examples") {
  CHECK_FALSE(is_zero_admissible(filled({0, 1}, 2, {{}, {1}})));
  CHECK(is_zero_admissible(filled({0, 1}, 2, {{}, {2}})));
  CHECK(is_zero_admissible(filled({1, 1}, 2, {{1}, {2}})));
  CHECK_FALSE(is_zero_admissible(filled({1, 1}, 2, {{2}, {2}})));
}

TEST_CASE("hook weights") {
  CHECK(hook_weight(filled({2}, 1, {{1, 1}}), false) == a + 1);
  CHECK(hook_weight(filled({1, 1}, 2, {{1}, {2}}), true) == (a + 2) * (a + 1));
  CHECK(hook_weight(filled({1, 1}, 2, {{1}, {2}}), false) == AlphaPoly(1));
  CHECK(hook_weight(filled({2, 1}, 3, {{2, 1}, {3}}), false) == AlphaPoly(1));
  CHECK(hook_weight(filled({2, 1}, 3, {{2, 1}, {3}}), true) == AlphaPoly(1));
}

TEST_CASE("tableau weight") {
  CHECK(filled({2, 1}, 3, {{2, 1}, {2}}).weight() == Monomial{1, 2, 0});
}

TEST_CASE("combinatorial F examples") {
  CHECK(F_comb({1, 0}) == x(2, 1) * (a + 1) + x(2, 2));
  CHECK(F_comb({0, 1}) == x(2, 2) * (a + 2));
  CHECK(F_comb({0, 0}) == P::constant(2, AlphaPoly(1)));
  CHECK(count_tableaux({1, 0}, 2, true) == 2);
  CHECK(count_tableaux({0, 1}, 2, true) == 1);
}

TEST_CASE("combinatorial J examples") {
  CHECK(J_comb({2}, 2) == (mono({2, 0}) + mono({0, 2})) * (a + 1) + mono({1, 1}, AlphaPoly(2)));
  CHECK(J_comb({1, 1}, 3) == (mono({1, 1, 0}) + mono({1, 0, 1}) + mono({0, 1, 1})) * AlphaPoly(2));
  const P j21 = J_comb({2, 1}, 3);
  CHECK(j21.coefficient(Monomial{2, 1, 0}) == a + 2);
  CHECK(j21.coefficient(Monomial{0, 1, 2}) == a + 2);
  CHECK(j21.coefficient(Monomial{1, 1, 1}) == AlphaPoly(6));
  CHECK(j21.size() == 7);
  CHECK(count_tableaux({2}, 2, false) == 4);
  CHECK_THROWS_AS((J_comb({1, 2}, 2)), std::invalid_argument);
}

TEST_CASE("tableau counts for one box and one row") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(count_tableaux({1}, n, false) == static_cast<std::size_t>(n));
    CHECK(count_tableaux({2}, n, false) == static_cast<std::size_t>(n * n));
  }
}

TEST_CASE("enumerator agrees with brute-force labelings (n <= 3, size <= 4)") {
  for (int n = 1; n <= 3; ++n) {
    for (int d = 0; d <= 4; ++d) {
      for (const Composition& lam : compositions(n, d)) {
        std::size_t brute_count = 0;
        const P brute = brute_force_sum(lam, n, true, &brute_count);
        CHECK(count_tableaux(lam, n, true) == brute_count);
        CHECK(F_comb(lam) == brute);
        if (lam.is_partition()) {
          for (int labels = std::max(lam.length(), 1); labels <= 3; ++labels) {
            const Composition shape = lam.length() == 0 ? lam : lam.resized(lam.length());
            std::size_t c = 0;
            CHECK(J_comb(shape, labels) == brute_force_sum(shape, labels, false, &c));
            CHECK(count_tableaux(shape, labels, false) == c);
          }
        }
      }
    }
  }
}

TEST_CASE("tableau sum agrees with the recursion (n <= 4, degree <= 4)") {
  MemoStore memo;
  for (int n = 1; n <= 4; ++n) {
    for (int d = 0; d <= 4; ++d) {
      for (const Composition& lam : compositions(n, d)) CHECK(F_comb(lam) == F_nonsym(lam, memo));
    }
  }
}

TEST_CASE("parallel and serial sums are identical") {
  for (const Composition& lam : {Composition{2, 0, 1, 1}, Composition{0, 3, 1}, Composition{1, 1, 1, 1}}) {
    const P serial = F_comb(lam, 1);
    for (int threads : {2, 3, 8}) CHECK(F_comb(lam, threads) == serial);
  }
  const P serial = J_comb({2, 1}, 4, 1);
  CHECK(J_comb({2, 1}, 4, 3) == serial);
}

TEST_CASE("J sums are symmetric") {
  for (int n = 1; n <= 4; ++n) {
    for (int d = 1; d <= 4; ++d) {
      for (const Composition& lam : partitions(d, d)) {
        const Composition shape = lam.resized(lam.length());
        CHECK(is_symmetric(J_comb(shape, n)));
      }
    }
  }
}

TEST_CASE("dump format") {
  std::ostringstream os;
  dump_tableaux(os, {1, 0}, 2, true);
  CHECK(os.str() == "# shape 1,0 labels 2\n1 | -\n2 | -\n");
  std::ostringstream os2;
  dump_tableaux(os2, {0, 1}, 2, true);
  CHECK(os2.str() == "# shape 0,1 labels 2\n- | 2\n");
}

TEST_CASE("lemma witnesses") {
  const LemmaWitness w = l2_l3_witness({0, 1}, TableauLemma::L2, 1);
  CHECK(w.holds);
  CHECK(w.d == a + 2);
  const LemmaWitness v = l2_l3_witness({0, 0}, TableauLemma::L3);
  CHECK(v.holds);
  CHECK(v.d == a + 2);
  CHECK(v.lhs == F_comb({0, 1}));
  CHECK(v.rhs == x(2, 2) * (a + 2));
  CHECK(l2_l3_witness({0, 0, 1}, TableauLemma::L2, 2).holds);
  CHECK_THROWS_AS((l2_l3_witness({1, 0}, TableauLemma::L2, 1)), std::invalid_argument);
}

TEST_CASE("lemma witnesses hold on small shapes (n <= 3, degree <= 3)") {
  for (int n = 2; n <= 3; ++n) {
    for (int d = 0; d <= 3; ++d) {
      for (const Composition& lam : compositions(n, d)) {
        CHECK(l2_l3_witness(lam, TableauLemma::L3).holds);
        for (int i = 1; i < n; ++i) {
          if (lam.part(i) == 0 && lam.part(i + 1) > 0) CHECK(l2_l3_witness(lam, TableauLemma::L2, i).holds);
        }
      }
    }
  }
}
