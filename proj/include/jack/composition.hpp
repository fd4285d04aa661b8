#pragma once

// Compositions, partitions and their diagrams; the symmetric group acting on
// positions; the composition order (dominance refined by Bruhat order); arm
// and leg statistics, alpha-hooks and the spectral vector.
//
// Indices that denote rows, positions or variables are 1-based throughout
// the public interface, matching the usual notation x_1..x_n.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "jack/alpha_poly.hpp"

namespace jack {

struct Box {
  int row = 1;
  int col = 1;
  friend auto operator<=>(const Box&, const Box&) = default;
};

class Composition {
 public:
  Composition() = default;
  /// Throws std::invalid_argument on an empty list or a negative part.
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

  static Composition zero(int n);
  /// Parses "0,2,1". Throws std::invalid_argument on malformed input.
  static Composition parse(std::string_view text);

  int n() const { return static_cast<int>(parts_.size()); }
  /// 1-based part lambda_i.
  int part(int i) const { return parts_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& parts() const { return parts_; }

  int degree() const;
  /// Largest i with lambda_i != 0; 0 for the zero composition.
  int length() const;
  bool is_zero() const { return length() == 0; }
  bool is_partition() const;

  bool contains(Box s) const;
  /// Boxes of the diagram in row-major order.
  std::vector<Box> boxes() const;

  /// Comma separated parts, e.g. "0,2,1".
  std::string to_string() const;
  /// The same composition padded with zeros (or truncated zeros) to n parts.
  Composition resized(int n) const;

  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

/// Element of S_n stored by its images w(1..n).
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless images is a bijection of {1..n}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// Simple reflection s_i = (i, i+1).
  static Permutation simple(int n, int i);
  static Permutation transposition(int n, int i, int j);

  int n() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& images() const { return img_; }

  Permutation inverse() const;
  /// Coxeter length (number of inversions).
  int length() const;

  /// (w * v)(i) = w(v(i)).
  friend Permutation operator*(const Permutation& w, const Permutation& v);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> img_;
};

/// Bruhat order by the rank-matrix criterion: w <= v iff
/// #{a <= i : w(a) >= j} <= #{a <= i : v(a) >= j} for all i, j.
bool bruhat_leq(const Permutation& w, const Permutation& v);

/// Positional action: (w.lambda)_{w(i)} = lambda_i.
Composition act(const Permutation& w, const Composition& lambda);

/// Weakly decreasing rearrangement.
Composition lambda_plus(const Composition& lambda);

/// Minimal-length w with lambda = w . lambda_plus(lambda). Equal parts keep
/// their relative order (stable sort), which yields the minimal coset
/// representative.
Permutation w_lambda(const Composition& lambda);

/// Dominance on partitions of equal size and degree via prefix sums.
bool dominates(const Composition& a, const Composition& b);

enum class Order { Less, Greater, Equal, Incomparable };

/// Compositions of equal n and degree are ordered first by dominance of the
/// sorted partitions, then inside one orbit by reversed Bruhat order of the
/// minimal representatives. Everything else is Incomparable.
Order compare(const Composition& lambda, const Composition& mu);

const char* to_string(Order o);

struct HookData {
  int arm = 0;
  int leg_upper = 0;  // l'
  int leg_lower = 0;  // l''
  AlphaPoly lower;    // c = alpha*a + (l' + l'' + 1)
  AlphaPoly upper;    // d = alpha*(a+1) + (l' + l'' + 1)
};

/// Throws std::out_of_range if s lies outside the diagram.
HookData hook_data(const Composition& lambda, Box s);

/// Product of the lower hooks c(s) over the diagram.
AlphaPoly lower_hook_product(const Composition& lambda);
/// Product of the upper hooks d(s) over the diagram.
AlphaPoly upper_hook_product(const Composition& lambda);

/// Spectral value alpha*lambda_i - k' - k'' with
/// k' = #{j < i : lambda_j >= lambda_i}, k'' = #{j > i : lambda_j > lambda_i}.
AlphaPoly eigenvalue(const Composition& lambda, int i);

/// (lambda_m - 1, lambda_1, ..., lambda_{m-1}, 0, ..., 0), m = length.
Composition star_shape(const Composition& lambda);
/// (lambda_1, ..., lambda_{m-1}, 0, ..., 0, lambda_m).
Composition sharp_shape(const Composition& lambda);
/// (lambda_m - 1, ..., lambda_1 - 1, 0, ..., 0) for a partition.
Composition zero_shape(const Composition& lambda);
/// (lambda_2, ..., lambda_n, lambda_1 + 1).
Composition cyclic_shift(const Composition& lambda);

struct Multiplicities {
  std::map<int, int> counts;  // part value (>= 1) -> number of occurrences
  std::int64_t u = 1;         // product of counts[i]!
};

Multiplicities multiplicity_data(const Composition& lambda);

/// Conjugate partition, padded to max(lambda_1, 1) parts.
Composition conjugate(const Composition& partition);

/// All compositions of the given degree with n parts, in lexicographically
/// decreasing order.
std::vector<Composition> compositions(int n, int degree);
/// All partitions of the given degree with at most n nonzero parts, padded
/// to n, in lexicographically decreasing order.
std::vector<Composition> partitions(int n, int degree);

}  // namespace jack
