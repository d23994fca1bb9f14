#include "wordmeasure/weingarten.hpp"

#include <functional>
#include <map>
#include <mutex>

namespace wm {

namespace {

struct WgCache {
  std::mutex mutex;
  std::map<std::vector<int>, RationalFunction> table;
};

WgCache& wg_cache() {
  static WgCache cache;
  return cache;
}

}  // namespace

RationalFunction wg(const CycleType& mu) {
  const int size = mu.size();
  if (size < 1) throw std::invalid_argument("wg: L must be at least 1");
  {
    auto& cache = wg_cache();
    std::lock_guard lock(cache.mutex);
    auto it = cache.table.find(mu.parts());
    if (it != cache.table.end()) return it->second;
  }
  const Integer fact = factorial(size);
  const Partition identity_type(std::vector<int>(static_cast<size_t>(size), 1));
  RationalFunction total;
  for (const auto& lambda : partitions(size)) {
    const Integer dim = character(lambda, identity_type);
    const Integer chi = character(lambda, mu);
    if (chi == 0) continue;
    Rational weight(dim * dim * chi, fact * fact);
    weight.canonicalize();
    total += RationalFunction(Polynomial::constant(weight), ssyt_poly(lambda));
  }
  auto& cache = wg_cache();
  std::lock_guard lock(cache.mutex);
  cache.table.emplace(mu.parts(), total);
  return total;
}

GroupRingElement wg_table(int size, int cap) {
  if (size > cap) throw CapExceeded("wg_table: L = " + std::to_string(size) + " exceeds cap " + std::to_string(cap));
  return groupring_invert(GroupRingElement::cycle_power(size));
}

LeadingTerm wg_leading(const Permutation& p) { return {moebius(p), -(p.size() + p.norm())}; }

LaurentSeries wg_asymptotic(const Permutation& p, int floor, int cap) {
  const int size = p.size();
  if (size > cap)
    throw CapExceeded("wg_asymptotic: L = " + std::to_string(size) + " exceeds cap " + std::to_string(cap));
  LaurentSeries out(floor);
  const int budget = -floor - size;
  if (budget < 0) return out;

  std::vector<std::pair<Permutation, int>> steps;
  for (auto& rho : all_permutations(size))
    if (!rho.is_identity()) {
      int nrm = rho.norm();
      steps.emplace_back(std::move(rho), nrm);
    }

  // theta is the running product rho_1 ... rho_k.
  std::function<void(const Permutation&, int, int)> dfs = [&](const Permutation& theta, int used, int k) {
    if (theta == p) out.add_term(-size - used, k % 2 == 0 ? 1 : -1);
    for (const auto& [rho, nrm] : steps) {
      if (used + nrm > budget) continue;
      Permutation next = compose(theta, rho);
      if (used + nrm + transposition_distance(next, p) > budget) continue;
      dfs(next, used + nrm, k + 1);
    }
  };
  dfs(Permutation::identity(size), 0, 0);
  return out;
}

RationalFunction monomial_integral(std::span<const int> rows, std::span<const int> cols,
                                   std::span<const int> conj_rows, std::span<const int> conj_cols) {
  const size_t size = rows.size();
  if (cols.size() != size || conj_rows.size() != size || conj_cols.size() != size)
    throw std::invalid_argument("monomial_integral: index tuples of unequal length");
  if (size == 0) return RationalFunction(1);
  const auto perms = all_permutations(static_cast<int>(size));
  auto aligns = [&](const Permutation& s, std::span<const int> a, std::span<const int> b) {
    for (size_t k = 0; k < size; ++k)
      if (a[k] != b[static_cast<size_t>(s(static_cast<int>(k)))]) return false;
    return true;
  };
  std::vector<Permutation> row_matches;
  std::vector<Permutation> col_matches;
  for (const auto& s : perms) {
    if (aligns(s, rows, conj_rows)) row_matches.push_back(s);
    if (aligns(s, cols, conj_cols)) col_matches.push_back(s);
  }
  std::map<CycleType, long> counts;
  for (const auto& s : row_matches)
    for (const auto& t : col_matches) ++counts[cycle_type(compose(inverse(s), t))];
  RationalFunction total;
  for (const auto& [mu, count] : counts) total += RationalFunction(count) * wg(mu);
  return total;
}

}  // namespace wm
