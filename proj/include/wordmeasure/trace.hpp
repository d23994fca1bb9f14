// Moments Tr_{w1,...,wl}(n) of word measures on U(n), exactly and as
// Laurent series, plus the surface invariants derived from them.
#pragma once

#include <cstdint>
#include <optional>

#include "wordmeasure/ratfunc.hpp"
#include "wordmeasure/surface.hpp"
#include "wordmeasure/words.hpp"

namespace wm {

struct TraceResult {
  RationalFunction value;
  /// The rational function equals the Haar integral for n >= threshold.
  int threshold = 1;
};

/// Finite formula: sum over MATCH^{kappa=1} of
/// prod_x Wg_{L_x}(sigma_{x,0}^-1 sigma_{x,1}) n^{#o-discs}, times n^t.
/// Terms are grouped by (cycle types, o-disc count) before any rational
/// arithmetic. Throws BudgetExceeded when prod_x (L_x!)^2 > budget.
TraceResult trace_rational(const WordTuple& t, std::uint64_t budget = kDefaultBudget);

/// Direct restricted-matching sum of (-1)^{|kappa|} n^{chi(sigma)} over
/// chi(sigma) >= chi_max - 2(depth - 1), shifted by n^t. The returned floor
/// marks the lowest exponent covered. An unbalanced tuple gives the zero
/// series.
LaurentSeries trace_laurent(const WordTuple& t, int depth = 2, std::uint64_t budget = kDefaultBudget);

/// max chi over MATCH^{kappa=0}; nullopt stands for -oo (unbalanced).
std::optional<int> chi_max(const WordTuple& t, std::uint64_t budget = kDefaultBudget);

/// (1 - chi_max(w)) / 2. Throws std::invalid_argument for trivial or
/// unbalanced words.
int commutator_length(const FreeWord& w, std::uint64_t budget = kDefaultBudget);

/// min over 1 <= l <= max_l and 1 <= j_1 <= ... <= j_l <= max_j of
/// -chi_max(w^j_1, ..., w^j_l) / (2 (j_1 + ... + j_l)).
Rational scl_upper(const FreeWord& w, int max_l, int max_j, std::uint64_t budget = kDefaultBudget);

}  // namespace wm
