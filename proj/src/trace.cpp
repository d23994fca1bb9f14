#include "wordmeasure/trace.hpp"

#include <algorithm>
#include <limits>
#include <functional>
#include <map>

#include "wordmeasure/weingarten.hpp"

namespace wm {

namespace {

Integer product_of_factorials(const MatchingSpace& space, int power) {
  Integer total = 1;
  for (size_t k = 0; k < space.num_generators(); ++k) {
    Integer f = factorial(space.letters_of(k));
    for (int i = 0; i < power; ++i) total *= f;
  }
  return total;
}

void check_budget(const Integer& count, std::uint64_t budget, const std::string& what, const WordTuple& t) {
  if (count > Integer(std::to_string(budget)))
    throw BudgetExceeded(what + ": " + count.get_str() + " matchings for \"" + t.to_string() + "\" exceed budget " +
                         std::to_string(budget));
}

}  // namespace

TraceResult trace_rational(const WordTuple& t, std::uint64_t budget) {
  TraceResult out;
  const TupleStats stats = letter_stats(t);
  for (const auto& g : stats.generators) out.threshold = std::max(out.threshold, g.positive_count);
  if (!stats.balanced()) {
    out.value = RationalFunction(0);
    return out;
  }
  const MatchingSpace space(t);
  check_budget(product_of_factorials(space, 2), budget, "trace_rational", t);

  const size_t gens = space.num_generators();
  std::vector<std::vector<Permutation>> perms(gens);
  for (size_t k = 0; k < gens; ++k) perms[k] = all_permutations(space.letters_of(k));

  // (cycle type of sigma_0^-1 sigma_1 per generator) -> o-disc count -> multiplicity
  std::map<std::vector<CycleType>, std::map<int, long>> groups;
  std::vector<size_t> first(gens, 0);
  std::vector<size_t> last(gens, 0);
  std::vector<const Permutation*> fp(gens);
  std::vector<const Permutation*> lp(gens);
  std::vector<CycleType> types(gens);
  // Odometer over (first, last) pairs per generator.
  while (true) {
    for (size_t k = 0; k < gens; ++k) {
      fp[k] = &perms[k][first[k]];
      lp[k] = &perms[k][last[k]];
      types[k] = cycle_type(compose(inverse(*fp[k]), *lp[k]));
    }
    ++groups[types][space.count_o_discs(fp, lp)];
    size_t d = gens;
    bool done = true;
    while (d > 0) {
      --d;
      if (++last[d] < perms[d].size()) {
        done = false;
        break;
      }
      last[d] = 0;
      if (++first[d] < perms[d].size()) {
        done = false;
        break;
      }
      first[d] = 0;
    }
    if (done) break;
  }

  RationalFunction total;
  for (const auto& [key, by_o] : groups) {
    RationalFunction weight(1);
    for (const auto& mu : key) weight *= wg(mu);
    std::vector<Rational> coeffs;
    for (const auto& [o, count] : by_o) {
      if (static_cast<int>(coeffs.size()) <= o) coeffs.resize(static_cast<size_t>(o) + 1);
      coeffs[static_cast<size_t>(o)] += count;
    }
    total += weight * RationalFunction(Polynomial(std::move(coeffs)));
  }
  out.value = total * RationalFunction::power_of_n(t.trivial);
  return out;
}

std::optional<int> chi_max(const WordTuple& t, std::uint64_t budget) {
  if (!letter_stats(t).balanced()) return std::nullopt;
  const MatchingSpace space(t);
  check_budget(product_of_factorials(space, 1), budget, "chi_max", t);
  int best = std::numeric_limits<int>::min();
  for_each_matching(space, std::vector<int>(space.num_generators(), 0), [&](const MatchingTuple& s) {
    best = std::max(best, space.count_o_discs(s) - space.total_letters());
    return true;
  });
  return best;
}

LaurentSeries trace_laurent(const WordTuple& t, int depth, std::uint64_t budget) {
  if (depth < 1) throw std::invalid_argument("trace_laurent: depth must be at least 1");
  const auto top = chi_max(t, budget);
  if (!top) return LaurentSeries(std::numeric_limits<int>::min() / 2);
  const MatchingSpace space(t);
  RestrictedOptions options;
  options.chi_floor = *top - 2 * (depth - 1);
  options.budget = budget;
  LaurentSeries out(options.chi_floor + t.trivial);
  for_each_restricted(space, options, [&](const MatchingTuple& s, int chi) {
    out.add_term(chi + t.trivial, s.kappa_total() % 2 == 0 ? 1 : -1);
  });
  return out;
}

int commutator_length(const FreeWord& w, std::uint64_t budget) {
  const FreeWord r = reduce(w);
  if (r.is_identity()) throw std::invalid_argument("commutator length of the trivial word");
  const auto chi = chi_max(make_word_tuple({r}), budget);
  if (!chi) throw std::invalid_argument("\"" + r.to_string() + "\" is not in the commutator subgroup");
  return (1 - *chi) / 2;
}

Rational scl_upper(const FreeWord& w, int max_l, int max_j, std::uint64_t budget) {
  const FreeWord r = reduce(w);
  if (r.is_identity()) throw std::invalid_argument("scl of the trivial word");
  if (!letter_stats(make_word_tuple({r})).balanced())
    throw std::invalid_argument("\"" + r.to_string() + "\" is not in the commutator subgroup");
  if (max_l < 1 || max_j < 1) throw std::invalid_argument("scl_upper: max_l and max_j must be positive");

  std::optional<Rational> best;
  std::vector<int> js;
  // Weakly increasing exponent tuples of length 1..max_l.
  std::function<void(int)> rec = [&](int lo) {
    if (!js.empty()) {
      std::vector<FreeWord> words;
      int total = 0;
      for (int j : js) {
        words.push_back(power(r, j));
        total += j;
      }
      const auto chi = chi_max(make_word_tuple(words), budget);
      Rational value(-*chi, 2 * total);
      value.canonicalize();
      if (!best || value < *best) best = value;
    }
    if (static_cast<int>(js.size()) == max_l) return;
    for (int j = lo; j <= max_j; ++j) {
      js.push_back(j);
      rec(j);
      js.pop_back();
    }
  };
  rec(1);
  return *best;
}

}  // namespace wm
