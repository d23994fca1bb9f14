// Matchings of letters and the CW surfaces built from them.
//
// For a balanced tuple, a matching for generator x is a bijection from the
// x^{+1} occurrences to the x^{-1} occurrences (both indexed in word-then-letter
// order), stored as a Permutation. A MatchingTuple holds, per generator, the
// sequence sigma_{x,0}, ..., sigma_{x,kappa_x}.
//
// Surface model: each word w_i gives an oriented circle cut by |w_i| o-points
// into letter intervals. An interval for x^{+1} carries the points
// (x,0), ..., (x,kappa_x) in orientation order; for x^{-1} the order is
// reversed. Matching edges join the (x,j)-points of lambda and sigma_{x,j}(lambda).
// Faces are the orbits of "walk forward to the next marked point, then cross
// the matching edge there".
#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "wordmeasure/symgrp.hpp"
#include "wordmeasure/words.hpp"

namespace wm {

/// Raised when an enumeration would exceed its configured visit budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnbalancedTuple : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Per-generator sequences of matchings. Generators follow TupleStats order.
struct MatchingTuple {
  std::vector<std::vector<Permutation>> sequences;

  int kappa(size_t generator) const { return static_cast<int>(sequences[generator].size()) - 1; }
  int kappa_total() const;
  /// No two adjacent matchings equal.
  bool is_restricted() const;
  friend auto operator<=>(const MatchingTuple&, const MatchingTuple&) = default;
  friend bool operator==(const MatchingTuple&, const MatchingTuple&) = default;
};

/// Letter layout of a balanced tuple, shared by all surface computations.
class MatchingSpace {
 public:
  /// Throws UnbalancedTuple.
  explicit MatchingSpace(const WordTuple& t);

  const WordTuple& tuple() const { return tuple_; }
  const TupleStats& stats() const { return stats_; }
  size_t num_generators() const { return stats_.generators.size(); }
  int letters_of(size_t generator) const { return stats_.generators[generator].positive_count; }
  /// Sum of L_x.
  int total_letters() const { return total_letters_; }
  /// Number of o-points, i.e. total word length.
  int num_o_points() const { return num_o_points_; }

  /// Validates shapes and bijectivity of a matching tuple for this space.
  void check(const MatchingTuple& s) const;

  /// o-disc count; depends only on the first and last matching per generator.
  int count_o_discs(const std::vector<const Permutation*>& first, const std::vector<const Permutation*>& last) const;
  int count_o_discs(const MatchingTuple& s) const;

  /// Pairs (start o-point of the positive occurrence, end o-point of its
  /// image) for `first`, and (end, start) for `last`, as used by the o-disc count.
  int start_o_point(const LetterPosition& p) const;
  int end_o_point(const LetterPosition& p) const;

 private:
  WordTuple tuple_;
  TupleStats stats_;
  std::vector<int> word_offset_;
  int total_letters_ = 0;
  int num_o_points_ = 0;
};

enum class FaceType { ODisc, ZDisc };

struct Face {
  FaceType type = FaceType::ODisc;
  int generator = -1;  // for z-discs: generator index (TupleStats order)
  int level = -1;      // for z-discs: j, the face is an (x,j)-disc
  int boundary_length = 0;  // 1-cells traversed
  int o_points = 0;
};

struct SurfaceComponent {
  int genus = 0;
  int boundaries = 0;
  int chi = 0;
};

struct CombinatorialSurface {
  int vertices = 0;
  int edges = 0;
  std::vector<Face> faces;
  int chi = 0;
  std::vector<SurfaceComponent> components;
  int o_discs = 0;

  int z_discs(int generator, int level) const;
  nlohmann::json to_json() const;
};

/// All of MATCH^kappa for a fixed kappa, in odometer order (last generator's
/// last matching varies fastest). The visitor returns false to stop early.
void for_each_matching(const MatchingSpace& space, const std::vector<int>& kappa,
                       const std::function<bool(const MatchingTuple&)>& visit);
/// prod_x (L_x!)^{kappa_x + 1}.
Integer matching_count(const MatchingSpace& space, const std::vector<int>& kappa);

struct RestrictedOptions {
  int chi_floor = 0;
  /// Upper bound on |kappa|; negative means only the chi bound applies.
  int kappa_bound = -1;
  /// Keep only sigma with chi(sigma) == chi_floor.
  bool exact_chi = false;
  std::uint64_t budget = kDefaultBudget;
};

/// Every restricted sigma with chi(sigma) >= chi_floor. Enumerates the
/// extreme matchings first, then interior chains with norm pruning against
/// #o-discs - sum L_x - chi_floor. Throws BudgetExceeded after `budget` visits.
/// Returns the number of visited tuples.
std::uint64_t for_each_restricted(const MatchingSpace& space, const RestrictedOptions& options,
                                  const std::function<void(const MatchingTuple&, int chi)>& visit);

/// Full face tracing.
CombinatorialSurface build_surface(const MatchingSpace& space, const MatchingTuple& s);

/// #o-discs - sum_x [L_x + sum_j ||sigma_{x,j}^-1 sigma_{x,j+1}||].
int chi_closed_form(const MatchingSpace& space, const MatchingTuple& s);

}  // namespace wm
