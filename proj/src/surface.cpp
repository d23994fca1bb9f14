#include "wordmeasure/surface.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace wm {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[static_cast<size_t>(x)] != x) {
      parent_[static_cast<size_t>(x)] = parent_[static_cast<size_t>(parent_[static_cast<size_t>(x)])];
      x = parent_[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
  }
  int classes() {
    int count = 0;
    for (int i = 0; i < static_cast<int>(parent_.size()); ++i)
      if (find(i) == i) ++count;
    return count;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

int MatchingTuple::kappa_total() const {
  int total = 0;
  for (size_t k = 0; k < sequences.size(); ++k) total += kappa(k);
  return total;
}

bool MatchingTuple::is_restricted() const {
  for (const auto& seq : sequences)
    for (size_t j = 1; j < seq.size(); ++j)
      if (seq[j] == seq[j - 1]) return false;
  return true;
}

MatchingSpace::MatchingSpace(const WordTuple& t) : tuple_(t), stats_(letter_stats(t)) {
  if (!stats_.balanced()) throw UnbalancedTuple("word tuple \"" + t.to_string() + "\" is not balanced");
  int offset = 0;
  for (const auto& w : tuple_.words) {
    word_offset_.push_back(offset);
    offset += static_cast<int>(w.length());
  }
  num_o_points_ = offset;
  total_letters_ = stats_.total_positive();
}

void MatchingSpace::check(const MatchingTuple& s) const {
  if (s.sequences.size() != num_generators()) throw std::invalid_argument("matching tuple: wrong generator count");
  for (size_t k = 0; k < num_generators(); ++k) {
    if (s.sequences[k].empty()) throw std::invalid_argument("matching tuple: empty sequence");
    for (const auto& p : s.sequences[k])
      if (p.size() != letters_of(k)) throw std::invalid_argument("matching tuple: matching of the wrong size");
  }
}

int MatchingSpace::start_o_point(const LetterPosition& p) const {
  return word_offset_[static_cast<size_t>(p.word)] + p.letter;
}

int MatchingSpace::end_o_point(const LetterPosition& p) const {
  const int len = static_cast<int>(tuple_.words[static_cast<size_t>(p.word)].length());
  return word_offset_[static_cast<size_t>(p.word)] + (p.letter + 1) % len;
}

int MatchingSpace::count_o_discs(const std::vector<const Permutation*>& first,
                                 const std::vector<const Permutation*>& last) const {
  // The (x,0)-point of an x^{+1} letter sits next to its start o-point and the
  // (x,0)-point of an x^{-1} letter next to its end o-point; symmetrically for
  // the last level. Crossing those matching edges identifies o-points.
  UnionFind uf(num_o_points_);
  for (size_t k = 0; k < num_generators(); ++k) {
    const auto& g = stats_.generators[k];
    for (int a = 0; a < g.positive_count; ++a) {
      const auto& lambda = g.positive[static_cast<size_t>(a)];
      const auto& mu_first = g.negative[static_cast<size_t>((*first[k])(a))];
      const auto& mu_last = g.negative[static_cast<size_t>((*last[k])(a))];
      uf.unite(start_o_point(lambda), end_o_point(mu_first));
      uf.unite(end_o_point(lambda), start_o_point(mu_last));
    }
  }
  return uf.classes();
}

int MatchingSpace::count_o_discs(const MatchingTuple& s) const {
  std::vector<const Permutation*> first;
  std::vector<const Permutation*> last;
  for (const auto& seq : s.sequences) {
    first.push_back(&seq.front());
    last.push_back(&seq.back());
  }
  return count_o_discs(first, last);
}

int CombinatorialSurface::z_discs(int generator, int level) const {
  return static_cast<int>(std::count_if(faces.begin(), faces.end(), [&](const Face& f) {
    return f.type == FaceType::ZDisc && f.generator == generator && f.level == level;
  }));
}

nlohmann::json CombinatorialSurface::to_json() const {
  nlohmann::json fs = nlohmann::json::array();
  for (const auto& f : faces) {
    nlohmann::json j = {{"boundary_length", f.boundary_length}};
    if (f.type == FaceType::ODisc) {
      j["type"] = "o-disc";
      j["o_points"] = f.o_points;
    } else {
      j["type"] = "z-disc";
      j["generator"] = f.generator;
      j["level"] = f.level;
    }
    fs.push_back(std::move(j));
  }
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : components) comps.push_back({{"genus", c.genus}, {"boundaries", c.boundaries}, {"chi", c.chi}});
  return {{"vertices", vertices}, {"edges", edges}, {"faces", fs},
          {"chi", chi},           {"o_discs", o_discs}, {"components", comps}};
}

namespace {

struct ZPoint {
  int word;
  int generator;
  int level;
  int sign;
  int occurrence;  // index among positive or negative occurrences
  bool last_on_letter;
};

}  // namespace

CombinatorialSurface build_surface(const MatchingSpace& space, const MatchingTuple& s) {
  space.check(s);
  const auto& words = space.tuple().words;
  const auto& gens = space.stats().generators;
  std::map<int, size_t> gen_slot;
  for (size_t k = 0; k < gens.size(); ++k) gen_slot[gens[k].generator] = k;

  // occurrence index of each letter
  std::map<LetterPosition, int> occurrence;
  for (const auto& g : gens) {
    for (size_t a = 0; a < g.positive.size(); ++a) occurrence[g.positive[a]] = static_cast<int>(a);
    for (size_t b = 0; b < g.negative.size(); ++b) occurrence[g.negative[b]] = static_cast<int>(b);
  }

  std::vector<ZPoint> z;
  std::vector<int> next;
  // z-point ids by (generator, occurrence, level) for each sign
  std::vector<std::vector<std::vector<int>>> pos_z(gens.size());
  std::vector<std::vector<std::vector<int>>> neg_z(gens.size());
  for (size_t k = 0; k < gens.size(); ++k) {
    pos_z[k].assign(static_cast<size_t>(gens[k].positive_count), std::vector<int>(static_cast<size_t>(s.kappa(k) + 1)));
    neg_z[k].assign(static_cast<size_t>(gens[k].negative_count), std::vector<int>(static_cast<size_t>(s.kappa(k) + 1)));
  }

  int vertices = 0;
  for (size_t wi = 0; wi < words.size(); ++wi) {
    const int circle_start = static_cast<int>(z.size());
    const auto& ls = words[wi].letters();
    for (size_t li = 0; li < ls.size(); ++li) {
      const size_t k = gen_slot.at(ls[li].generator);
      const int kap = s.kappa(k);
      const int occ = occurrence.at(LetterPosition{static_cast<int>(wi), static_cast<int>(li)});
      vertices += kap + 2;
      for (int step = 0; step <= kap; ++step) {
        const int level = ls[li].sign > 0 ? step : kap - step;
        const int id = static_cast<int>(z.size());
        z.push_back({static_cast<int>(wi), static_cast<int>(k), level, ls[li].sign, occ, step == kap});
        (ls[li].sign > 0 ? pos_z : neg_z)[k][static_cast<size_t>(occ)][static_cast<size_t>(level)] = id;
      }
    }
    const int circle_end = static_cast<int>(z.size());
    for (int id = circle_start; id < circle_end; ++id) next.push_back(id + 1 < circle_end ? id + 1 : circle_start);
  }

  auto partner = [&](int id) {
    const ZPoint& p = z[static_cast<size_t>(id)];
    const Permutation& m = s.sequences[static_cast<size_t>(p.generator)][static_cast<size_t>(p.level)];
    if (p.sign > 0) return neg_z[static_cast<size_t>(p.generator)][static_cast<size_t>(m(p.occurrence))][static_cast<size_t>(p.level)];
    const Permutation minv = inverse(m);
    return pos_z[static_cast<size_t>(p.generator)][static_cast<size_t>(minv(p.occurrence))][static_cast<size_t>(p.level)];
  };

  CombinatorialSurface out;
  int matching_edges = 0;
  for (size_t k = 0; k < gens.size(); ++k) matching_edges += gens[k].positive_count * (s.kappa(k) + 1);
  out.vertices = vertices;
  out.edges = vertices + matching_edges;

  // Components: circles joined by matching edges.
  UnionFind circles(static_cast<int>(words.size()));
  for (size_t k = 0; k < gens.size(); ++k)
    for (const auto& m : s.sequences[k])
      for (int a = 0; a < gens[k].positive_count; ++a)
        circles.unite(gens[k].positive[static_cast<size_t>(a)].word, gens[k].negative[static_cast<size_t>(m(a))].word);

  std::vector<bool> seen(z.size(), false);
  std::vector<int> face_word;
  for (size_t start = 0; start < z.size(); ++start) {
    if (seen[start]) continue;
    Face face;
    std::set<std::pair<int, int>> colors;
    int id = static_cast<int>(start);
    while (!seen[static_cast<size_t>(id)]) {
      seen[static_cast<size_t>(id)] = true;
      const ZPoint& p = z[static_cast<size_t>(id)];
      const int nx = next[static_cast<size_t>(id)];
      colors.insert({p.generator, p.level});
      colors.insert({z[static_cast<size_t>(nx)].generator, z[static_cast<size_t>(nx)].level});
      if (p.last_on_letter) {
        ++face.o_points;
        face.boundary_length += 2;
      } else {
        face.boundary_length += 1;
      }
      face.boundary_length += 1;  // matching edge
      id = partner(nx);
    }
    if (face.o_points > 0) {
      face.type = FaceType::ODisc;
      ++out.o_discs;
    } else {
      face.type = FaceType::ZDisc;
      const int gen = colors.begin()->first;
      const int lo = colors.begin()->second;
      for (const auto& [g, lvl] : colors)
        if (g != gen || (lvl != lo && lvl != lo + 1) || colors.size() != 2)
          throw std::logic_error("z-disc bounded by more than two adjacent colors");
      face.generator = gen;
      face.level = lo;
    }
    out.faces.push_back(face);
    face_word.push_back(z[start].word);
  }
  out.chi = out.vertices - out.edges + static_cast<int>(out.faces.size());

  // Per-component accounting.
  std::map<int, SurfaceComponent> comps;
  std::map<int, int> comp_v;
  std::map<int, int> comp_e;
  std::map<int, int> comp_f;
  for (size_t wi = 0; wi < words.size(); ++wi) {
    const int root = circles.find(static_cast<int>(wi));
    comps[root].boundaries += 1;
    for (const auto& l : words[wi].letters()) {
      const int kap = s.kappa(gen_slot.at(l.generator));
      comp_v[root] += kap + 2;
      comp_e[root] += kap + 2;
      if (l.sign > 0) comp_e[root] += kap + 1;
    }
  }
  for (int w : face_word) comp_f[circles.find(w)] += 1;
  for (auto& [root, c] : comps) {
    c.chi = comp_v[root] - comp_e[root] + comp_f[root];
    c.genus = (2 - c.chi - c.boundaries) / 2;
    out.components.push_back(c);
  }
  return out;
}

int chi_closed_form(const MatchingSpace& space, const MatchingTuple& s) {
  space.check(s);
  int chi = space.count_o_discs(s);
  for (size_t k = 0; k < s.sequences.size(); ++k) {
    chi -= space.letters_of(k);
    const auto& seq = s.sequences[k];
    for (size_t j = 0; j + 1 < seq.size(); ++j) chi -= transposition_distance(seq[j], seq[j + 1]);
  }
  return chi;
}

Integer matching_count(const MatchingSpace& space, const std::vector<int>& kappa) {
  Integer total = 1;
  for (size_t k = 0; k < space.num_generators(); ++k) {
    Integer f = factorial(space.letters_of(k));
    for (int j = 0; j <= kappa[k]; ++j) total *= f;
  }
  return total;
}

void for_each_matching(const MatchingSpace& space, const std::vector<int>& kappa,
                       const std::function<bool(const MatchingTuple&)>& visit) {
  const size_t gens = space.num_generators();
  if (kappa.size() != gens) throw std::invalid_argument("kappa has the wrong number of generators");
  std::vector<std::vector<Permutation>> perms(gens);
  std::vector<std::pair<size_t, size_t>> digits;  // (generator, level)
  for (size_t k = 0; k < gens; ++k) {
    if (kappa[k] < 0) throw std::invalid_argument("kappa must be non-negative");
    perms[k] = all_permutations(space.letters_of(k));
    for (int j = 0; j <= kappa[k]; ++j) digits.emplace_back(k, static_cast<size_t>(j));
  }
  MatchingTuple current;
  current.sequences.resize(gens);
  for (size_t k = 0; k < gens; ++k) current.sequences[k].assign(static_cast<size_t>(kappa[k] + 1), perms[k][0]);
  std::vector<size_t> odometer(digits.size(), 0);
  while (true) {
    if (!visit(current)) return;
    size_t d = digits.size();
    while (d > 0) {
      --d;
      auto [k, j] = digits[d];
      if (++odometer[d] < perms[k].size()) {
        current.sequences[k][j] = perms[k][odometer[d]];
        break;
      }
      odometer[d] = 0;
      current.sequences[k][j] = perms[k][0];
      if (d == 0) return;
    }
    if (digits.empty()) return;
  }
}

namespace {

class RestrictedEnumerator {
 public:
  RestrictedEnumerator(const MatchingSpace& space, const RestrictedOptions& options,
                       const std::function<void(const MatchingTuple&, int)>& visit)
      : space_(space), options_(options), visit_(visit), gens_(space.num_generators()) {
    for (size_t k = 0; k < gens_; ++k) {
      if (space.letters_of(k) > 6)
        throw BudgetExceeded("restricted enumeration: L_x = " + std::to_string(space.letters_of(k)) +
                             " is beyond the supported range (<= 6)");
      perms_.push_back(all_permutations(space.letters_of(k)));
      const size_t m = perms_.back().size();
      std::vector<int> table(m * m);
      for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b) table[a * m + b] = transposition_distance(perms_.back()[a], perms_.back()[b]);
      dist_.push_back(std::move(table));
    }
    current_.sequences.resize(gens_);
    chain_.resize(gens_);
  }

  std::uint64_t run() {
    Integer extremes = 1;
    for (size_t k = 0; k < gens_; ++k) extremes *= Integer(perms_[k].size() * perms_[k].size());
    if (extremes > Integer(std::to_string(options_.budget)))
      throw BudgetExceeded("restricted enumeration: " + extremes.get_str() + " extreme matching pairs for \"" +
                           space_.tuple().to_string() + "\" exceed budget " + std::to_string(options_.budget));
    first_.assign(gens_, 0);
    last_.assign(gens_, 0);
    extremes_rec(0);
    return visits_;
  }

 private:
  int dist(size_t k, int a, int b) const {
    return dist_[k][static_cast<size_t>(a) * perms_[k].size() + static_cast<size_t>(b)];
  }

  void count_visit() {
    if (++visits_ > options_.budget)
      throw BudgetExceeded("restricted enumeration exceeded budget of " + std::to_string(options_.budget) +
                           " visited matchings (tuple \"" + space_.tuple().to_string() + "\")");
  }

  void extremes_rec(size_t k) {
    if (k == gens_) {
      count_visit();
      start_interior();
      return;
    }
    for (size_t a = 0; a < perms_[k].size(); ++a)
      for (size_t b = 0; b < perms_[k].size(); ++b) {
        first_[k] = static_cast<int>(a);
        last_[k] = static_cast<int>(b);
        extremes_rec(k + 1);
      }
  }

  void start_interior() {
    std::vector<const Permutation*> f;
    std::vector<const Permutation*> l;
    for (size_t k = 0; k < gens_; ++k) {
      f.push_back(&perms_[k][static_cast<size_t>(first_[k])]);
      l.push_back(&perms_[k][static_cast<size_t>(last_[k])]);
    }
    o_discs_ = space_.count_o_discs(f, l);
    budget_ = o_discs_ - space_.total_letters() - options_.chi_floor;
    // Minimal norm and kappa still required from generators k.. onwards.
    min_norm_after_.assign(gens_ + 1, 0);
    min_kappa_after_.assign(gens_ + 1, 0);
    for (size_t k = gens_; k-- > 0;) {
      const int d = dist(k, first_[k], last_[k]);
      min_norm_after_[k] = min_norm_after_[k + 1] + d;
      min_kappa_after_[k] = min_kappa_after_[k + 1] + (d > 0 ? 1 : 0);
    }
    if (min_norm_after_[0] > budget_) return;
    if (options_.kappa_bound >= 0 && min_kappa_after_[0] > options_.kappa_bound) return;
    generator_rec(0, 0, 0);
  }

  void generator_rec(size_t k, int norm_used, int kappa_used) {
    if (k == gens_) {
      const int chi = o_discs_ - space_.total_letters() - norm_used;
      if (options_.exact_chi && chi != options_.chi_floor) return;
      count_visit();
      visit_(current_, chi);
      return;
    }
    chain_[k].clear();
    chain_[k].push_back(first_[k]);
    current_.sequences[k].clear();
    current_.sequences[k].push_back(perms_[k][static_cast<size_t>(first_[k])]);
    chain_rec(k, norm_used, kappa_used);
  }

  void chain_rec(size_t k, int norm_used, int kappa_used) {
    const int cur = chain_[k].back();
    const int target = last_[k];
    if (cur == target) generator_rec(k + 1, norm_used, kappa_used);
    if (options_.kappa_bound >= 0 && kappa_used + 1 + min_kappa_after_[k + 1] > options_.kappa_bound) return;
    const int m = static_cast<int>(perms_[k].size());
    for (int nxt = 0; nxt < m; ++nxt) {
      if (nxt == cur) continue;
      const int step = dist(k, cur, nxt);
      if (norm_used + step + dist(k, nxt, target) + min_norm_after_[k + 1] > budget_) continue;
      chain_[k].push_back(nxt);
      current_.sequences[k].push_back(perms_[k][static_cast<size_t>(nxt)]);
      chain_rec(k, norm_used + step, kappa_used + 1);
      chain_[k].pop_back();
      current_.sequences[k].pop_back();
    }
  }

  const MatchingSpace& space_;
  const RestrictedOptions& options_;
  const std::function<void(const MatchingTuple&, int)>& visit_;
  size_t gens_;
  std::vector<std::vector<Permutation>> perms_;
  std::vector<std::vector<int>> dist_;
  std::vector<int> first_;
  std::vector<int> last_;
  std::vector<std::vector<int>> chain_;
  MatchingTuple current_;
  int o_discs_ = 0;
  int budget_ = 0;
  std::vector<int> min_norm_after_;
  std::vector<int> min_kappa_after_;
  std::uint64_t visits_ = 0;
};

}  // namespace

std::uint64_t for_each_restricted(const MatchingSpace& space, const RestrictedOptions& options,
                                  const std::function<void(const MatchingTuple&, int chi)>& visit) {
  return RestrictedEnumerator(space, options, visit).run();
}

}  // namespace wm
