#include "wordmeasure/symgrp.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wm {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    if (v < 0 || v >= size() || seen[static_cast<size_t>(v)])
      throw std::invalid_argument("permutation image is not a bijection");
    seen[static_cast<size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int size) {
  std::vector<int> v(static_cast<size_t>(size));
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation Permutation::from_cycles(int size, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> v(static_cast<size_t>(size));
  std::iota(v.begin(), v.end(), 0);
  for (const auto& c : cycles)
    for (size_t i = 0; i < c.size(); ++i) v[static_cast<size_t>(c[i])] = c[(i + 1) % c.size()];
  return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (image_[static_cast<size_t>(i)] != i) return false;
  return true;
}

int Permutation::num_cycles() const {
  std::vector<bool> seen(image_.size(), false);
  int cycles = 0;
  for (int i = 0; i < size(); ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    ++cycles;
    for (int j = i; !seen[static_cast<size_t>(j)]; j = image_[static_cast<size_t>(j)]) seen[static_cast<size_t>(j)] = true;
  }
  return cycles;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < size(); ++i) os << (i ? " " : "") << image_[static_cast<size_t>(i)];
  os << "]";
  return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> v(static_cast<size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) v[static_cast<size_t>(i)] = p(q(i));
  return Permutation(std::move(v));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> v(static_cast<size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) v[static_cast<size_t>(p(i))] = i;
  return Permutation(std::move(v));
}

std::vector<Permutation> all_permutations(int size) {
  std::vector<int> v(static_cast<size_t>(size));
  std::iota(v.begin(), v.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

int transposition_distance(const Permutation& a, const Permutation& b) {
  // ||a^-1 b|| without materializing the product.
  const int n = a.size();
  std::vector<int> ainv(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) ainv[static_cast<size_t>(a(i))] = i;
  std::vector<bool> seen(static_cast<size_t>(n), false);
  int cycles = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    ++cycles;
    for (int j = i; !seen[static_cast<size_t>(j)]; j = ainv[static_cast<size_t>(b(j))]) seen[static_cast<size_t>(j)] = true;
  }
  return n - cycles;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ")";
  return os.str();
}

CycleType cycle_type(const Permutation& p) {
  std::vector<bool> seen(static_cast<size_t>(p.size()), false);
  std::vector<int> lengths;
  for (int i = 0; i < p.size(); ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<size_t>(j)]; j = p(j)) {
      seen[static_cast<size_t>(j)] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition(std::move(lengths));
}

Permutation permutation_of_type(const CycleType& mu) {
  std::vector<std::vector<int>> cycles;
  int next = 0;
  for (int part : mu.parts()) {
    std::vector<int> c(static_cast<size_t>(part));
    std::iota(c.begin(), c.end(), next);
    next += part;
    cycles.push_back(std::move(c));
  }
  return Permutation::from_cycles(mu.size(), cycles);
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions_rec(remaining - p, p, current, out);
    current.pop_back();
  }
}

// Beta-set (first-column hook lengths) of lambda padded to `length` parts.
std::vector<int> beta_set(const std::vector<int>& parts, int length) {
  std::vector<int> beta(static_cast<size_t>(length));
  for (int i = 0; i < length; ++i) {
    int part = i < static_cast<int>(parts.size()) ? parts[static_cast<size_t>(i)] : 0;
    beta[static_cast<size_t>(i)] = part + (length - 1 - i);
  }
  return beta;
}

std::vector<int> parts_from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int length = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < length; ++i) {
    int part = beta[static_cast<size_t>(i)] - (length - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return parts;
}

using CharKey = std::pair<std::vector<int>, std::vector<int>>;

struct CharacterMemo {
  std::mutex mutex;
  std::map<CharKey, Integer> table;
};

CharacterMemo& character_memo() {
  static CharacterMemo memo;
  return memo;
}

// Murnaghan-Nakayama: strip rim hooks of length mu[0] from lambda. A rim hook
// of length r corresponds to moving a bead of the beta-set from b to b - r;
// its height is the number of beads strictly between.
Integer mn(const std::vector<int>& lambda, const std::vector<int>& mu) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  CharKey key{lambda, mu};
  {
    auto& memo = character_memo();
    std::lock_guard lock(memo.mutex);
    auto it = memo.table.find(key);
    if (it != memo.table.end()) return it->second;
  }
  const int r = mu.front();
  std::vector<int> rest(mu.begin() + 1, mu.end());
  const int length = static_cast<int>(lambda.size());
  std::vector<int> beta = beta_set(lambda, length);
  Integer total = 0;
  for (int idx = 0; idx < length; ++idx) {
    const int b = beta[static_cast<size_t>(idx)];
    const int target = b - r;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int other : beta)
      if (other > target && other < b) ++between;
    std::vector<int> moved = beta;
    moved[static_cast<size_t>(idx)] = target;
    Integer sub = mn(parts_from_beta(moved), rest);
    if (between % 2 == 0)
      total += sub;
    else
      total -= sub;
  }
  auto& memo = character_memo();
  std::lock_guard lock(memo.mutex);
  memo.table.emplace(std::move(key), total);
  return total;
}

}  // namespace

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> current;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  partitions_rec(n, n, current, out);
  return out;
}

Integer character(const Partition& lambda, const CycleType& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("character: |lambda| != |mu|");
  return mn(lambda.parts(), mu.parts());
}

Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Integer syt_count(const Partition& lambda) {
  const auto& parts = lambda.parts();
  Integer hooks = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < parts[static_cast<size_t>(i)]; ++j) {
      int arm = parts[static_cast<size_t>(i)] - j - 1;
      int leg = 0;
      for (int k = i + 1; k < lambda.length() && parts[static_cast<size_t>(k)] > j; ++k) ++leg;
      hooks *= arm + leg + 1;
    }
  }
  return factorial(lambda.size()) / hooks;
}

Polynomial ssyt_poly(const Partition& lambda) {
  const auto& parts = lambda.parts();
  Polynomial p = Polynomial::constant(Rational(syt_count(lambda), factorial(lambda.size())));
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < parts[static_cast<size_t>(i)]; ++j)
      p *= Polynomial(std::vector<Rational>{Rational(j - i), Rational(1)});
  return p;
}

Integer catalan(int m) {
  Integer c = factorial(2 * m);
  c /= factorial(m);
  c /= factorial(m + 1);
  return c;
}

Integer moebius(const Permutation& p) {
  Integer value = p.sign();
  const CycleType type = cycle_type(p);
  for (int len : type.parts()) value *= catalan(len - 1);
  return value;
}

Integer centralizer_order(const CycleType& mu) {
  std::map<int, int> mult;
  for (int p : mu.parts()) ++mult[p];
  Integer z = 1;
  for (auto [part, m] : mult) {
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(part), static_cast<unsigned long>(m));
    z *= pw * factorial(m);
  }
  return z;
}

}  // namespace wm
