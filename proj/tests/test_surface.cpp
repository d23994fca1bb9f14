#include <doctest.h>

#include <map>
#include <set>

#include "wordmeasure/surface.hpp"

using namespace wm;

namespace {

MatchingTuple kappa0(std::initializer_list<Permutation> ms) {
  MatchingTuple s;
  for (const auto& m : ms) s.sequences.push_back({m});
  return s;
}

}  // namespace

TEST_CASE("matching counts") {
  const MatchingSpace a(parse("[x,y]"));
  CHECK(matching_count(a, {1, 1}) == 1);
  int visited = 0;
  for_each_matching(a, {1, 1}, [&](const MatchingTuple&) { return ++visited, true; });
  CHECK(visited == 1);

  const MatchingSpace b(parse("[x,y]^2"));
  CHECK(matching_count(b, {1, 1}) == 16);
  std::set<MatchingTuple> seen;
  for_each_matching(b, {1, 1}, [&](const MatchingTuple& s) { return seen.insert(s), true; });
  CHECK(seen.size() == 16);

  // x x y y | x Y Y Y X X X y has L_x = L_y = 3.
  const MatchingSpace c(parse("x^2y^2,xy^-3x^-3y"));
  CHECK(c.letters_of(0) == 3);
  CHECK(c.letters_of(1) == 3);
  CHECK(matching_count(c, {1, 1}) == 1296);

  CHECK_THROWS_AS(MatchingSpace(parse("x^2y")), UnbalancedTuple);
}

TEST_CASE("annulus for (x, x^-1)") {
  const MatchingSpace space(parse("x,X"));
  const auto surf = build_surface(space, kappa0({Permutation::identity(1)}));
  CHECK(surf.chi == 0);
  REQUIRE(surf.components.size() == 1);
  CHECK(surf.components[0].genus == 0);
  CHECK(surf.components[0].boundaries == 2);
  CHECK(surf.o_discs == 1);
  CHECK(chi_closed_form(space, kappa0({Permutation::identity(1)})) == 0);
}

TEST_CASE("punctured torus for [x,y]") {
  const MatchingSpace space(parse("[x,y]"));
  const auto s = kappa0({Permutation::identity(1), Permutation::identity(1)});
  const auto surf = build_surface(space, s);
  CHECK(surf.vertices == 8);
  CHECK(surf.edges == 10);
  CHECK(surf.faces.size() == 1);
  CHECK(surf.chi == -1);
  REQUIRE(surf.components.size() == 1);
  CHECK(surf.components[0].genus == 1);
  CHECK(surf.components[0].boundaries == 1);
  CHECK(surf.o_discs == 1);
  CHECK(chi_closed_form(space, s) == -1);
  const auto j = surf.to_json();
  CHECK(j.at("chi") == -1);
  CHECK(j.at("faces").at(0).at("type") == "o-disc");
}

TEST_CASE("matchings with kappa = (1,1,0) on [x,y][x,z]") {
  // L_x = 2, L_y = L_z = 1. With sigma_x0 != sigma_x1 and two o-discs the
  // surface has genus 2, one boundary circle and chi = -3.
  const MatchingSpace space(parse("[x,y][x,z]"));
  REQUIRE(space.letters_of(0) == 2);
  int found = 0;
  for_each_matching(space, {1, 1, 0}, [&](const MatchingTuple& s) {
    if (s.sequences[0][0] == s.sequences[0][1]) return true;
    const auto surf = build_surface(space, s);
    if (surf.o_discs != 2) return true;
    ++found;
    CHECK(surf.chi == -3);
    CHECK(chi_closed_form(space, s) == -3);
    CHECK(surf.z_discs(0, 0) == 1);
    CHECK(surf.z_discs(1, 0) == 1);
    CHECK(surf.z_discs(2, 0) == 0);
    REQUIRE(surf.components.size() == 1);
    CHECK(surf.components[0].genus == 2);
    CHECK(surf.components[0].boundaries == 1);
    return true;
  });
  CHECK(found > 0);
}

TEST_CASE("restricted enumeration") {
  for (const char* t : {"[x,y]", "x,X"}) {
    const MatchingSpace space(parse(t));
    for (int floor : {-1, -3, -7}) {
      int count = 0;
      RestrictedOptions o;
      o.chi_floor = floor;
      for_each_restricted(space, o, [&](const MatchingTuple& s, int) {
        ++count;
        CHECK(s.kappa_total() == 0);
      });
      CHECK(count == 1);
    }
  }
}

TEST_CASE("restricted enumeration matches brute force on [x,y]^2") {
  const MatchingSpace space(parse("[x,y]^2"));
  const int floor = -5;
  std::map<MatchingTuple, int> fast;
  RestrictedOptions o;
  o.chi_floor = floor;
  for_each_restricted(space, o, [&](const MatchingTuple& s, int chi) {
    CHECK(s.is_restricted());
    CHECK(chi >= floor);
    CHECK(chi == chi_closed_form(space, s));
    fast[s] = chi;
  });
  // Brute force over a box. Every sigma here has one o-disc (chi_max = -3),
  // so chi >= -5 allows at most two restricted steps in total.
  std::map<MatchingTuple, int> slow;
  int max_kappa_seen = 0;
  for (int kx = 0; kx <= 4; ++kx)
    for (int ky = 0; ky <= 4; ++ky)
      for_each_matching(space, {kx, ky}, [&](const MatchingTuple& s) {
        if (!s.is_restricted()) return true;
        const int chi = chi_closed_form(space, s);
        if (chi >= floor) {
          slow[s] = chi;
          max_kappa_seen = std::max({max_kappa_seen, kx, ky});
        }
        return true;
      });
  CHECK(max_kappa_seen < 4);  // the box was large enough
  CHECK(fast == slow);
  CHECK(fast.size() > 4);
}

TEST_CASE("budget") {
  const MatchingSpace space(parse("[x,y]^3"));
  RestrictedOptions o;
  o.chi_floor = -9;
  o.budget = 50;
  CHECK_THROWS_AS(for_each_restricted(space, o, [](const MatchingTuple&, int) {}), BudgetExceeded);
}
