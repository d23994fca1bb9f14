// The unitary Weingarten function Wg_L and monomial integrals over U(n).
#pragma once

#include <span>
#include <utility>

#include "wordmeasure/group_ring.hpp"
#include "wordmeasure/ratfunc.hpp"
#include "wordmeasure/symgrp.hpp"

namespace wm {

/// Raised when an oracle computation is asked for a size beyond its cap.
class CapExceeded : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr int kDefaultOracleCap = 4;

/// Wg_L(mu) from the character expansion
///   Wg_L(mu) = 1/(L!)^2 sum_{lambda |- L} chi_lambda(e)^2 chi_lambda(mu) / d_lambda(n).
/// Values are cached per cycle type; the cache is safe for concurrent use.
RationalFunction wg(const CycleType& mu);
inline RationalFunction wg(const Permutation& p) { return wg(cycle_type(p)); }

/// The full inverse of sigma -> n^{#cycles(sigma)} in Q(n)[S_L], computed by
/// group-ring inversion. Independent of wg(); used as its oracle.
GroupRingElement wg_table(int size, int cap = kDefaultOracleCap);

struct LeadingTerm {
  Integer coefficient;
  int exponent;
  friend bool operator==(const LeadingTerm&, const LeadingTerm&) = default;
};

/// (Moeb(p), -(L + ||p||)).
LeadingTerm wg_leading(const Permutation& p);

/// Truncated asymptotic series
///   n^-L sum_k sum_{rho_1...rho_k = p, rho_i != id} (-1)^k n^{-sum ||rho_i||}
/// keeping exponents >= floor. Enumerates factorizations depth-first.
LaurentSeries wg_asymptotic(const Permutation& p, int floor, int cap = kDefaultOracleCap);

/// E[A_{i1 j1} ... A_{iL jL} conj(A_{i'1 j'1}) ... conj(A_{i'L j'L})] over
/// Haar U(n), as a rational function of n. Index tuples must have equal length.
RationalFunction monomial_integral(std::span<const int> rows, std::span<const int> cols,
                                   std::span<const int> conj_rows, std::span<const int> conj_cols);

}  // namespace wm
