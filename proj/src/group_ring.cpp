#include "wordmeasure/group_ring.hpp"

#include <utility>

namespace wm {

GroupRingElement GroupRingElement::delta_identity(int size) {
  GroupRingElement e(size);
  e.set(Permutation::identity(size), RationalFunction(1));
  return e;
}

GroupRingElement GroupRingElement::cycle_power(int size) {
  GroupRingElement e(size);
  for (const auto& p : all_permutations(size)) e.set(p, RationalFunction::power_of_n(p.num_cycles()));
  return e;
}

RationalFunction GroupRingElement::operator[](const Permutation& p) const {
  auto it = entries_.find(p);
  return it == entries_.end() ? RationalFunction() : it->second;
}

void GroupRingElement::set(const Permutation& p, RationalFunction value) {
  if (p.size() != size_) throw std::invalid_argument("group ring: permutation of the wrong size");
  if (value.is_zero())
    entries_.erase(p);
  else
    entries_.insert_or_assign(p, std::move(value));
}

GroupRingElement groupring_mul(const GroupRingElement& a, const GroupRingElement& b) {
  if (a.size() != b.size()) throw std::invalid_argument("group ring: size mismatch");
  std::map<Permutation, RationalFunction> acc;
  for (const auto& [s, x] : a.entries())
    for (const auto& [t, y] : b.entries()) acc[compose(s, t)] += x * y;
  GroupRingElement out(a.size());
  for (auto& [p, v] : acc) out.set(p, std::move(v));
  return out;
}

GroupRingElement groupring_invert(const GroupRingElement& a) {
  const int size = a.size();
  const auto perms = all_permutations(size);
  const size_t m = perms.size();
  std::map<Permutation, size_t> index;
  for (size_t i = 0; i < m; ++i) index.emplace(perms[i], i);

  // Unknown b with (a * b)(pi) = [pi = id]:  sum_tau a(pi tau^-1) b(tau).
  std::vector<std::vector<RationalFunction>> mat(m, std::vector<RationalFunction>(m + 1));
  for (size_t r = 0; r < m; ++r) {
    for (size_t c = 0; c < m; ++c) mat[r][c] = a[compose(perms[r], inverse(perms[c]))];
    mat[r][m] = perms[r].is_identity() ? RationalFunction(1) : RationalFunction();
  }
  for (size_t col = 0; col < m; ++col) {
    size_t pivot = col;
    while (pivot < m && mat[pivot][col].is_zero()) ++pivot;
    if (pivot == m)
      throw SingularElement("group ring element of S_" + std::to_string(size) + " is not invertible");
    std::swap(mat[col], mat[pivot]);
    const RationalFunction inv = mat[col][col].inverse();
    for (size_t c = col; c <= m; ++c) mat[col][c] *= inv;
    for (size_t r = 0; r < m; ++r) {
      if (r == col || mat[r][col].is_zero()) continue;
      const RationalFunction factor = mat[r][col];
      for (size_t c = col; c <= m; ++c)
        if (!mat[col][c].is_zero()) mat[r][c] -= factor * mat[col][c];
    }
  }
  GroupRingElement out(size);
  for (size_t i = 0; i < m; ++i) out.set(perms[i], mat[i][m]);
  return out;
}

}  // namespace wm
