#include <doctest.h>

#include "wordmeasure/trace.hpp"

using namespace wm;

namespace {
const RationalFunction n = RationalFunction::variable();
RationalFunction tr(const char* s) { return trace_rational(parse(s)).value; }
}  // namespace

TEST_CASE("trace_rational") {
  CHECK(tr("[x,y]") == n.inverse());
  CHECK(tr("[x,y]^3") == RationalFunction(9) * (n.pow(2) + 4) / (n.pow(5) - 5 * n.pow(3) + 4 * n));
  CHECK(tr("x^2yxy^-1,(x^2yxy^-1)^-1") == RationalFunction(1));
  CHECK(tr("x^2y").is_zero());
  CHECK(tr("x,X") == RationalFunction(1));
  CHECK(trace_rational(parse("[x,y]^2")).threshold == 2);
  CHECK(trace_rational(parse("[x^3,y]")).threshold == 3);
}

TEST_CASE("trivial words multiply by n") {
  CHECK(tr("[x,y],1") == RationalFunction(1));
  CHECK(tr("1") == n);
  CHECK(tr("1,xX") == n.pow(2));
}

TEST_CASE("trace_laurent") {
  const auto a = trace_laurent(parse("[x,y]"), 3);
  CHECK(a.terms().size() == 1);
  CHECK(a.coefficient(-1) == 1);
  CHECK(a.floor() == -5);
  const auto b = trace_laurent(parse("[x,y]^2"), 1);
  CHECK(b.terms().size() == 1);
  CHECK(b.coefficient(-3) == -4);
  const auto c = trace_laurent(parse("x,X"), 1);
  CHECK(c.terms().size() == 1);
  CHECK(c.coefficient(0) == 1);
  CHECK_THROWS(trace_laurent(parse("[x,y]"), 0));
  CHECK_THROWS_AS(trace_laurent(parse("[x,y]^3"), 4, 1000), BudgetExceeded);
}

TEST_CASE("chi_max") {
  CHECK(chi_max(parse("[x,y]")) == -1);
  CHECK_FALSE(chi_max(parse("x^2y")).has_value());
  CHECK(chi_max(parse("x^2yxy^-1,(x^2yxy^-1)^-1")) == 0);
  CHECK(chi_max(parse("[x,y]^2,([x,y]^2)^-1")) == 0);
}

TEST_CASE("commutator length") {
  CHECK(commutator_length(parse_word("[x,y]")) == 1);
  CHECK(commutator_length(parse_word("[x,y]^3")) == 2);
  CHECK(commutator_length(parse_word("[x,y]^2")) == 2);
  CHECK(commutator_length(parse_word("[x,y][x,z][x,t]")) == 3);
  CHECK_THROWS_AS(commutator_length(parse_word("x")), std::invalid_argument);
  CHECK_THROWS_AS(commutator_length(parse_word("xX")), std::invalid_argument);
}

TEST_CASE("scl upper bound") {
  CHECK(scl_upper(parse_word("[x,y]"), 1, 1) == Rational(1, 2));
  CHECK(scl_upper(parse_word("[x,y]"), 1, 3) == Rational(1, 2));
  CHECK(scl_upper(parse_word("[x,y][x,z][x,t]"), 1, 1) == Rational(5, 2));
  CHECK_THROWS_AS(scl_upper(parse_word("x"), 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(scl_upper(parse_word("[x,y]^4"), 2, 2, 10), BudgetExceeded);
}

TEST_CASE("constant term of (w, w^-1) counts matchings of powers") {
  // w = x^2yxy^-1 is not a proper power: limit 1; (xy)^2 is a square: limit 2.
  const auto f = tr("x^2yxy^-1,(x^2yxy^-1)^-1");
  CHECK(f.order() == 0);
  CHECK(f.leading_coefficient() == 1);
  const auto g = tr("(xy)^2,(xy)^-2");
  CHECK(g.order() == 0);
  CHECK(g.leading_coefficient() == 2);
}

TEST_CASE("deeper direct enumeration still matches the expansion") {
  for (const char* text : {"[x,y]^2", "[x,y]^3", "[x^3,y]", "x^2y^2,xy^-3x^-3y", "x^2y^2xy^-1,(x^2y^2xy^-1)^-1",
                           "[x,y][x,z][x,t]"}) {
    const WordTuple t = parse(text);
    const LaurentSeries direct = trace_laurent(t, 4);
    CHECK(direct == trace_rational(t).value.laurent(direct.floor()));
  }
  const auto s = trace_laurent(parse("[x,y]^3"), 4);
  CHECK(s.coefficient(-9) == 1521);
}
