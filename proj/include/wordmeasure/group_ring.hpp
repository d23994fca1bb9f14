// Elements of the group ring Q(n)[S_L].
#pragma once

#include <map>

#include "wordmeasure/ratfunc.hpp"
#include "wordmeasure/symgrp.hpp"

namespace wm {

class SingularElement : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class GroupRingElement {
 public:
  explicit GroupRingElement(int size) : size_(size) {}

  static GroupRingElement delta_identity(int size);
  /// sigma -> n^{#cycles(sigma)}.
  static GroupRingElement cycle_power(int size);

  int size() const { return size_; }
  /// Zero for permutations not stored.
  RationalFunction operator[](const Permutation& p) const;
  void set(const Permutation& p, RationalFunction value);
  const std::map<Permutation, RationalFunction>& entries() const { return entries_; }

  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    return a.size_ == b.size_ && a.entries_ == b.entries_;
  }

 private:
  int size_;
  std::map<Permutation, RationalFunction> entries_;  // no zero values
};

/// Convolution: (a * b)(pi) = sum over sigma tau = pi of a(sigma) b(tau).
GroupRingElement groupring_mul(const GroupRingElement& a, const GroupRingElement& b);

/// Two-sided inverse by Gaussian elimination over Q(n) on the L! x L! system
/// of right multiplication. Throws SingularElement.
GroupRingElement groupring_invert(const GroupRingElement& a);

}  // namespace wm
