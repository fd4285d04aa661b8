#pragma once

// Generalized tableaux and the combinatorial formulas
//   F_lambda = sum over 0-admissible T of d_T^0(alpha) x^T
//   J_lambda = sum over admissible T of d_T(alpha) x^T.

#include <iosfwd>
#include <optional>
#include <vector>

#include "jack/composition.hpp"
#include "jack/mpoly.hpp"

namespace jack {

/// Labeling of the diagram of a composition by 1..labels.
class Tableau {
 public:
  Tableau() = default;
  Tableau(Composition shape, int labels);

  const Composition& shape() const { return shape_; }
  int labels() const { return labels_; }
  int label(Box s) const { return rows_.at(s.row - 1).at(s.col - 1); }
  void set_label(Box s, int v) { rows_.at(s.row - 1).at(s.col - 1) = v; }

  /// Occurrence count of each label, as an exponent vector in `labels` variables.
  Monomial weight() const;

 private:
  Composition shape_;
  int labels_ = 0;
  std::vector<std::vector<int>> rows_;
};

/// Conditions (a) and (b): labels in a column are distinct, and T(i,j)
/// differs from T(i',j-1) for every i' < i.
bool is_admissible(const Tableau& t);
/// Admissible and T(i,1) >= i in the first column.
bool is_zero_admissible(const Tableau& t);

/// Product of d_lambda(s) over critical boxes (j > 1, T(i,j) = T(i,j-1)); with
/// zero_variant also over first-column boxes with T(i,1) = i.
AlphaPoly hook_weight(const Tableau& t, bool zero_variant);

/// Streams every admissible (or 0-admissible) tableau of a shape by
/// backtracking over boxes in column-major order. Single consumer.
///
///   TableauEnumerator e(shape, n, true);
///   while (e.next()) use(e.current());
class TableauEnumerator {
 public:
  /// first_label pins the label of the first box in column-major order.
  TableauEnumerator(Composition shape, int labels, bool zero_variant,
                    std::optional<int> first_label = std::nullopt);

  bool next();
  const Tableau& current() const { return tableau_; }

 private:
  bool fits(std::size_t pos, int v) const;
  int min_label(std::size_t pos) const;
  int max_label(std::size_t pos) const;

  Tableau tableau_;
  std::vector<Box> order_;
  std::vector<int> cur_;
  bool zero_variant_;
  std::optional<int> first_label_;
  bool started_ = false;
  bool done_ = false;
};

/// Tableau sum over 0-admissible tableaux; labels = lambda.n(). The sum is
/// split by the label of the first box across `threads` workers and the
/// partial sums are added in label order.
MPoly<AlphaPoly> F_comb(const Composition& lambda, int threads = 1);

/// Tableau sum over admissible tableaux of a partition shape with labels
/// 1..n. Throws std::invalid_argument for a non-partition.
MPoly<AlphaPoly> J_comb(const Composition& partition, int n, int threads = 1);

/// Number of tableaux the enumerator visits.
std::size_t count_tableaux(const Composition& shape, int labels, bool zero_variant);

/// Writes "# shape <parts> labels <n>" and then one tableau per line, rows
/// separated by " | " and empty rows printed as "-".
void dump_tableaux(std::ostream& os, const Composition& shape, int labels, bool zero_variant);

enum class TableauLemma { L2, L3 };

struct LemmaWitness {
  bool holds = false;
  AlphaPoly d;
  MPoly<AlphaPoly> lhs;
  MPoly<AlphaPoly> rhs;
};

/// L2 (needs lambda_i = 0 < lambda_{i+1}):
///   d F'_{s_i lambda} = (d - 1) s_i F'_lambda + F'_lambda, d = d_lambda(i+1, 1).
/// L3 (i ignored):
///   F'_{Phi lambda} = d Phi(F'_lambda), d = d_{Phi lambda}(n, 1),
///   Phi lambda = (lambda_2, ..., lambda_n, lambda_1 + 1).
/// Here F' is the raw 0-admissible tableau sum. Throws std::invalid_argument
/// when the precondition fails.
LemmaWitness l2_l3_witness(const Composition& lambda, TableauLemma kind, int i = 0);

}  // namespace jack
