#include "wordmeasure/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace wm {

namespace {

int base_chi(const MatchingSpace& space, const std::vector<const Permutation*>& choice) {
  return space.count_o_discs(choice, choice) - space.total_letters();
}

}  // namespace

ClassificationGraph build_graph(const WordTuple& t, std::uint64_t budget) {
  const MatchingSpace space(t);
  const size_t gens = space.num_generators();
  std::vector<std::vector<Permutation>> perms(gens);
  Integer base = 1;
  for (size_t k = 0; k < gens; ++k) {
    perms[k] = all_permutations(space.letters_of(k));
    base *= Integer(perms[k].size());
  }
  Integer total = base;
  for (size_t k = 0; k < gens; ++k) total += base * Integer(perms[k].size() - 1);
  if (total > Integer(std::to_string(budget)))
    throw BudgetExceeded("build_graph: " + total.get_str() + " vertices for \"" + t.to_string() + "\" exceed budget " +
                         std::to_string(budget));

  ClassificationGraph g;
  // kappa = 0 layer in mixed radix, last generator fastest.
  std::vector<size_t> radix(gens, 1);
  for (size_t k = gens; k-- > 1;) radix[k - 1] = radix[k] * perms[k].size();
  auto base_index = [&](const std::vector<size_t>& digits) {
    size_t idx = 0;
    for (size_t k = 0; k < gens; ++k) idx += digits[k] * radix[k];
    return idx;
  };

  const size_t nbase = static_cast<size_t>(base.get_ui());
  std::vector<size_t> digits(gens, 0);
  std::vector<const Permutation*> choice(gens);
  for (size_t idx = 0; idx < nbase; ++idx) {
    size_t rest = idx;
    GraphVertex v;
    for (size_t k = 0; k < gens; ++k) {
      digits[k] = rest / radix[k];
      rest %= radix[k];
      choice[k] = &perms[k][digits[k]];
      v.sigma.sequences.push_back({*choice[k]});
    }
    v.chi = base_chi(space, choice);
    g.vertices.push_back(std::move(v));
  }
  g.base_count = nbase;

  std::vector<const Permutation*> first(gens);
  std::vector<const Permutation*> last(gens);
  for (size_t idx = 0; idx < nbase; ++idx) {
    size_t rest = idx;
    for (size_t k = 0; k < gens; ++k) {
      digits[k] = rest / radix[k];
      rest %= radix[k];
      first[k] = last[k] = &perms[k][digits[k]];
    }
    // sigma_{x,0} is digits[x]; sigma_{x,1} ranges over the other matchings.
    for (size_t x = 0; x < gens; ++x) {
      for (size_t b = 0; b < perms[x].size(); ++b) {
        if (b == digits[x]) continue;
        GraphVertex v;
        v.generator = static_cast<int>(x);
        v.sigma = g.vertices[idx].sigma;
        v.sigma.sequences[x].push_back(perms[x][b]);
        last[x] = &perms[x][b];
        v.chi = space.count_o_discs(first, last) - space.total_letters() -
                transposition_distance(perms[x][digits[x]], perms[x][b]);
        last[x] = first[x];
        const size_t upper = g.vertices.size();
        std::vector<size_t> other = digits;
        other[x] = b;
        for (size_t lower : {idx, base_index(other)})
          if (g.vertices[lower].chi == v.chi) g.edges.emplace_back(lower, upper);
        g.vertices.push_back(std::move(v));
      }
    }
  }
  return g;
}

nlohmann::json IncompressibleClass::to_json() const {
  nlohmann::json prof = nlohmann::json::array();
  for (const auto& c : profile) prof.push_back({{"genus", c.genus}, {"boundaries", c.boundaries}, {"chi", c.chi}});
  nlohmann::json verts = nlohmann::json::array();
  for (const auto& s : vertices) {
    nlohmann::json m = nlohmann::json::array();
    for (const auto& seq : s.sequences) m.push_back(seq.front().to_string());
    verts.push_back(std::move(m));
  }
  return {{"id", id}, {"chi", chi}, {"downward_closed", downward_closed}, {"profile", prof}, {"vertices", verts}};
}

std::vector<IncompressibleClass> graph_components(const WordTuple& t, std::uint64_t budget) {
  const MatchingSpace space(t);
  const ClassificationGraph g = build_graph(t, budget);
  const size_t nv = g.vertices.size();
  std::vector<size_t> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> lower_degree(nv, 0);
  for (const auto& [lo, up] : g.edges) {
    ++lower_degree[up];
    size_t a = find(lo);
    size_t b = find(up);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  // Roots are the smallest member, hence a kappa = 0 vertex whenever one exists.
  std::map<size_t, IncompressibleClass> by_root;
  for (size_t v = 0; v < nv; ++v) {
    const size_t r = find(v);
    if (r >= g.base_count) continue;  // isolated kappa = 1 material
    auto& c = by_root[r];
    if (v < g.base_count) {
      if (c.vertices.empty()) {
        c.chi = g.vertices[v].chi;
        c.downward_closed = true;
      }
      c.vertices.push_back(g.vertices[v].sigma);
    } else if (lower_degree[v] != 2) {
      // A single x-matching deletion of a two-element sequence gives two
      // distinct faces; both must lie in the component.
      c.downward_closed = false;
    }
  }
  std::vector<IncompressibleClass> out;
  for (auto& [root, c] : by_root) {
    c.id = static_cast<int>(out.size());
    const CombinatorialSurface surf = build_surface(space, c.vertices.front());
    c.profile = surf.components;
    std::sort(c.profile.begin(), c.profile.end(), [](const SurfaceComponent& a, const SurfaceComponent& b) {
      return std::tie(a.genus, a.boundaries) < std::tie(b.genus, b.boundaries);
    });
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<IncompressibleClass> incompressible_classes(const WordTuple& t, std::uint64_t budget) {
  std::vector<IncompressibleClass> out;
  for (auto& c : graph_components(t, budget))
    if (c.downward_closed) {
      c.id = static_cast<int>(out.size());
      out.push_back(std::move(c));
    }
  return out;
}

// Membership: sigma realizes the class iff one of its kappa = 0 faces (one
// matching kept per generator) has the same chi and is a vertex of the class.
// For an incompressible pair no transverse map has a compressible piece, so
// every sigma in the sum fills, and a filling sigma is equivalent to each of
// its equal-chi kappa = 0 faces (deleting a matching whose neighbours differ
// only by an isotopy keeps the map's class). One such face lying in the
// component therefore certifies equivalence.
Integer class_l2_euler(const WordTuple& t, const IncompressibleClass& c, std::uint64_t budget) {
  if (!c.downward_closed) throw std::invalid_argument("class_l2_euler: class is not downward-closed");
  const MatchingSpace space(t);
  const std::set<MatchingTuple> members(c.vertices.begin(), c.vertices.end());

  const bool cyclic = std::all_of(t.words.begin(), t.words.end(),
                                  [](const FreeWord& w) { return w.is_cyclically_reduced(); });
  const int ell = static_cast<int>(t.words.size());
  RestrictedOptions options;
  options.chi_floor = c.chi;
  options.exact_chi = true;
  options.kappa_bound = cyclic ? -c.chi : ell / 2 - c.chi;
  options.budget = budget;

  const size_t gens = space.num_generators();
  Integer total = 0;
  MatchingTuple face;
  face.sequences.resize(gens);
  std::vector<const Permutation*> choice(gens);
  for_each_restricted(space, options, [&](const MatchingTuple& s, int chi) {
    std::vector<size_t> pick(gens, 0);
    while (true) {
      for (size_t k = 0; k < gens; ++k) {
        choice[k] = &s.sequences[k][pick[k]];
        face.sequences[k].assign(1, *choice[k]);
      }
      if (base_chi(space, choice) == chi && members.count(face)) {
        total += s.kappa_total() % 2 == 0 ? 1 : -1;
        return;
      }
      size_t k = gens;
      while (k > 0) {
        --k;
        if (++pick[k] < s.sequences[k].size()) break;
        pick[k] = 0;
        if (k == 0) return;
      }
      if (gens == 0) return;
    }
  });
  return total;
}

}  // namespace wm
