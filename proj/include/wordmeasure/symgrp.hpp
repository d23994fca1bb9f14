// Symmetric-group combinatorics: permutations in one-line notation,
// partitions, irreducible characters and the Catalan/Moebius weight.
#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wordmeasure/ratfunc.hpp"

namespace wm {

/// A bijection of {0, ..., L-1} stored as its image array.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `image` is a bijection.
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int size);
  /// Cycle notation helper, e.g. from_cycles(3, {{0, 1, 2}}).
  static Permutation from_cycles(int size, const std::vector<std::vector<int>>& cycles);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[static_cast<size_t>(i)]; }
  const std::vector<int>& image() const { return image_; }
  bool is_identity() const;

  int num_cycles() const;
  /// Minimal number of transpositions: size() - num_cycles().
  int norm() const { return size() - num_cycles(); }
  int sign() const { return norm() % 2 == 0 ? 1 : -1; }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

  std::string to_string() const;

 private:
  std::vector<int> image_;
};

/// (p * q)(i) = p(q(i)).
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
/// All of S_L in lexicographic order of image arrays.
std::vector<Permutation> all_permutations(int size);
/// Distance in the Cayley graph of transpositions: ||a^-1 b||.
int transposition_distance(const Permutation& a, const Permutation& b);

/// Weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  /// Sorts the parts descending; throws on a non-positive part.
  explicit Partition(std::vector<int> parts);
  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }

  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

  std::string to_string() const;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Cycle lengths, fixed points included as parts of size 1.
using CycleType = Partition;

CycleType cycle_type(const Permutation& p);
/// A representative permutation with the given cycle type.
Permutation permutation_of_type(const CycleType& mu);

/// All partitions of `n`, in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions(int n);

/// Irreducible character chi_lambda at the class mu (Murnaghan-Nakayama).
/// Throws std::invalid_argument on a size mismatch.
Integer character(const Partition& lambda, const CycleType& mu);

/// Number of standard Young tableaux of shape lambda (hook-length formula).
Integer syt_count(const Partition& lambda);

/// d_lambda(n): number of semistandard tableaux of shape lambda with entries
/// in [n], as a polynomial in n.
Polynomial ssyt_poly(const Partition& lambda);

/// m-th Catalan number.
Integer catalan(int m);

/// sgn(p) * prod over cycles C of catalan(|C| - 1).
Integer moebius(const Permutation& p);

/// Order of the centralizer of an element of cycle type mu.
Integer centralizer_order(const CycleType& mu);

Integer factorial(int n);

}  // namespace wm
