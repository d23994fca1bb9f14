#include <doctest.h>

#include <map>
#include <set>

#include "wordmeasure/classify.hpp"
#include "wordmeasure/trace.hpp"

using namespace wm;

namespace {

int classes_at(const char* t, int chi) {
  int count = 0;
  for (const auto& c : incompressible_classes(parse(t)))
    if (c.chi == chi) ++count;
  return count;
}

Integer l2_top(const char* text) {
  const WordTuple t = parse(text);
  const int cm = *chi_max(t);
  Integer sum = 0;
  for (const auto& c : incompressible_classes(t))
    if (c.chi == cm) sum += class_l2_euler(t, c);
  return sum;
}

}  // namespace

TEST_CASE("build_graph") {
  const auto a = build_graph(parse("[x,y]"));
  CHECK(a.vertices.size() == 1);
  CHECK(a.base_count == 1);
  CHECK(a.edges.empty());
  const auto b = build_graph(parse("[x,y]^2"));
  CHECK(b.base_count == 4);
  // kappa = 1 layer: one extra distinct matching for x or for y
  CHECK(b.vertices.size() == 4 + 4 + 4);
  for (const auto& [lo, up] : b.edges) {
    CHECK(lo < b.base_count);
    CHECK(up >= b.base_count);
    CHECK(b.vertices[lo].chi == b.vertices[up].chi);
  }
  CHECK(build_graph(parse("x,X")).vertices.size() == 1);
  CHECK_THROWS_AS(build_graph(parse("x^2y")), UnbalancedTuple);
}

TEST_CASE("class counts") {
  CHECK(classes_at("[x,y]", -1) == 1);
  CHECK(classes_at("[x^3,y]", -1) == 3);
  CHECK(classes_at("[x,y]^3", -3) == 9);
  CHECK(classes_at("x^2yxy^-1,(x^2yxy^-1)^-1", 0) == 1);
}

TEST_CASE("class descriptors") {
  const auto cs = incompressible_classes(parse("[x,y]^2"));
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].chi == -3);
  CHECK(cs[0].downward_closed);
  REQUIRE(cs[0].profile.size() == 1);
  CHECK(cs[0].profile[0].genus == 2);
  CHECK(cs[0].profile[0].boundaries == 1);
  CHECK(cs[0].to_json().at("chi") == -3);
  const auto annulus = incompressible_classes(parse("x,X"));
  REQUIRE(annulus.size() == 1);
  CHECK(annulus[0].profile[0].genus == 0);
  CHECK(annulus[0].profile[0].boundaries == 2);
}

TEST_CASE("L2-Euler characteristics") {
  const WordTuple t = parse("[x,y]");
  CHECK(class_l2_euler(t, incompressible_classes(t).at(0)) == 1);
  const WordTuple u = parse("[x,y]^2");
  CHECK(class_l2_euler(u, incompressible_classes(u).at(0)) == -4);
  const WordTuple v = parse("[x,y][x,z]");
  const auto cv = incompressible_classes(v);
  REQUIRE(cv.size() == 1);
  CHECK(cv[0].chi == -3);
  CHECK(class_l2_euler(v, cv[0]) == 0);
  CHECK(l2_top("[x,y][x,z][x,t]") == 0);
}

TEST_CASE("every class has the chi of its vertices; top level always present") {
  for (const char* text : {"[x,y]^2", "[x^3,y]", "x^2y^2,xy^-3x^-3y", "[x,y][x,z]"}) {
    const WordTuple t = parse(text);
    const MatchingSpace space(t);
    const int cm = *chi_max(t);
    int top = 0;
    for (const auto& c : graph_components(t)) {
      for (const auto& v : c.vertices) CHECK(chi_closed_form(space, v) == c.chi);
      if (c.chi == cm) {
        CHECK(c.downward_closed);
        ++top;
      }
    }
    CHECK(top >= 1);
  }
}

TEST_CASE("leading coefficient identity on the table tuples") {
  for (const char* text : {"[x,y]", "[x^3,y]", "[x,y]^2", "[x,y]^3", "[x,y][x,z]", "[x,y][x,z][x,t]",
                           "x^2y^2,xy^-3x^-3y", "x^2yxy^-1,(x^2yxy^-1)^-1", "x^2y^2xy^-1,(x^2y^2xy^-1)^-1"}) {
    const WordTuple t = parse(text);
    const int cm = *chi_max(t);
    CHECK(Rational(l2_top(text)) == trace_rational(t).value.laurent(cm).coefficient(cm));
  }
}

TEST_CASE("equivariance under relabeling and permuting the tuple") {
  auto profile = [](const WordTuple& t) {
    std::multiset<std::pair<int, long>> out;
    for (const auto& c : incompressible_classes(t)) out.insert({c.chi, class_l2_euler(t, c).get_si()});
    return out;
  };
  for (const char* text : {"x^2y^2,xy^-3x^-3y", "[x,y][x,z]", "[x^2,y]"}) {
    const WordTuple t = parse(text);
    // x -> c, y -> a, z -> b, then reverse the word order
    const std::map<int, FreeWord> images = {{'x' - 'a', parse_word("c")}, {'y' - 'a', parse_word("a")},
                                            {'z' - 'a', parse_word("b")}};
    std::vector<FreeWord> ws;
    for (auto it = t.words.rbegin(); it != t.words.rend(); ++it) ws.push_back(substitute(*it, images));
    CHECK(profile(make_word_tuple(ws)) == profile(t));
  }
}
