#include <doctest.h>

#include <array>

#include "wordmeasure/weingarten.hpp"

using namespace wm;

namespace {
const RationalFunction n = RationalFunction::variable();
}

TEST_CASE("Wg_2 and Wg_3 class values") {
  CHECK(wg(CycleType({1, 1})) == (n.pow(2) - 1).inverse());
  CHECK(wg(CycleType({2})) == RationalFunction(-1) / (n * (n.pow(2) - 1)));
  CHECK(wg(CycleType({1, 1, 1})) == (n.pow(2) - 2) / (n * (n.pow(2) - 1) * (n.pow(2) - 4)));
  CHECK(wg(CycleType({2, 1})) == RationalFunction(-1) / ((n.pow(2) - 1) * (n.pow(2) - 4)));
  CHECK(wg(CycleType({3})) == RationalFunction(2) / (n * (n.pow(2) - 1) * (n.pow(2) - 4)));
  CHECK(wg(CycleType({1})) == n.inverse());
  CHECK_THROWS(wg(CycleType()));
}

TEST_CASE("wg_table") {
  CHECK(wg_table(1)[Permutation::identity(1)] == n.inverse());
  const auto t2 = wg_table(2);
  CHECK(t2[Permutation::identity(2)] == (n.pow(2) - 1).inverse());
  CHECK(wg_table(3)[Permutation::from_cycles(3, {{0, 1}})] == RationalFunction(-1) / ((n.pow(2) - 1) * (n.pow(2) - 4)));
  CHECK_THROWS_AS(wg_table(5), CapExceeded);
}

TEST_CASE("wg_leading") {
  CHECK(wg_leading(Permutation::identity(2)) == LeadingTerm{1, -2});
  CHECK(wg_leading(Permutation::from_cycles(2, {{0, 1}})) == LeadingTerm{-1, -3});
  CHECK(wg_leading(Permutation::from_cycles(3, {{0, 1, 2}})) == LeadingTerm{2, -5});
}

TEST_CASE("wg_asymptotic") {
  const auto a = wg_asymptotic(Permutation::identity(1), -3);
  CHECK(a.terms().size() == 1);
  CHECK(a.coefficient(-1) == 1);
  const auto b = wg_asymptotic(Permutation::identity(2), -6);
  CHECK(b.terms().size() == 3);
  CHECK(b.coefficient(-2) == 1);
  CHECK(b.coefficient(-4) == 1);
  CHECK(b.coefficient(-6) == 1);
  const auto c = wg_asymptotic(Permutation::from_cycles(2, {{0, 1}}), -5);
  CHECK(c.terms().size() == 2);
  CHECK(c.coefficient(-3) == -1);
  CHECK(c.coefficient(-5) == -1);
  CHECK_THROWS_AS(wg_asymptotic(Permutation::identity(5), -6), CapExceeded);
}

TEST_CASE("monomial integrals") {
  const std::array<int, 1> one{1};
  CHECK(monomial_integral(one, one, one, one) == n.inverse());
  const std::array<int, 2> diag{1, 2};
  CHECK(monomial_integral(diag, diag, diag, diag) == (n.pow(2) - 1).inverse());
  // E|U_11|^4 = 2/(n(n+1))
  const std::array<int, 2> ones{1, 1};
  CHECK(monomial_integral(ones, ones, ones, ones) == RationalFunction(2) / (n * (n + 1)));
  const std::array<int, 2> other{1, 3};
  CHECK(monomial_integral(diag, diag, other, diag).is_zero());
  const std::array<int, 1> two{2};
  CHECK(monomial_integral(one, one, two, one).is_zero());
}

TEST_CASE("property: characters agree with group-ring inversion for L <= 4") {
  for (int size = 1; size <= 4; ++size) {
    const auto table = wg_table(size);
    for (const auto& p : all_permutations(size)) CHECK(table[p] == wg(p));
  }
}

TEST_CASE("property: convolution identity") {
  for (int size = 1; size <= 4; ++size) {
    const auto perms = all_permutations(size);
    for (const auto& pi : perms) {
      RationalFunction sum;
      for (const auto& s : perms) sum += wg(s) * RationalFunction::power_of_n(compose(inverse(s), pi).num_cycles());
      CHECK(sum == (pi.is_identity() ? RationalFunction(1) : RationalFunction(0)));
    }
  }
}

TEST_CASE("property: leading term and the n^-2 gap") {
  for (int size = 1; size <= 4; ++size)
    for (const auto& mu : partitions(size)) {
      const Permutation p = permutation_of_type(mu);
      const LeadingTerm lead = wg_leading(p);
      const LaurentSeries s = wg(mu).laurent(lead.exponent - 6);
      CHECK(s.leading_exponent() == lead.exponent);
      CHECK(s.coefficient(lead.exponent) == Rational(lead.coefficient));
      CHECK(s.coefficient(lead.exponent - 1) == 0);
    }
}

TEST_CASE("property: asymptotic factorization sum equals the expansion") {
  for (int size = 1; size <= 3; ++size)
    for (const auto& p : all_permutations(size))
      for (int floor = -8; floor <= -1; ++floor) CHECK(wg_asymptotic(p, floor) == wg(p).laurent(floor));
}

TEST_CASE("property: poles only at integers |k| < L") {
  for (int size = 1; size <= 5; ++size)
    for (const auto& mu : partitions(size)) {
      Polynomial d = wg(mu).denominator();
      for (int k = -(size - 1); k <= size - 1; ++k) {
        const Polynomial root({-k, 1});
        while (d.degree() > 0) {
          auto [q, r] = Polynomial::divmod(d, root);
          if (!r.is_zero()) break;
          d = q;
        }
      }
      CHECK(d == Polynomial({1}));
    }
}
