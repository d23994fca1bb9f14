// Incompressible classes of admissible surfaces via the matching graph on
// the |kappa| <= 1 layer, and their L2-Euler characteristics.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wordmeasure/surface.hpp"
#include "wordmeasure/words.hpp"

namespace wm {

struct GraphVertex {
  MatchingTuple sigma;
  int chi = 0;
  int generator = -1;  // the generator with kappa_x = 1, or -1 on the kappa = 0 layer
};

struct ClassificationGraph {
  std::vector<GraphVertex> vertices;  // kappa = 0 layer first
  size_t base_count = 0;              // number of kappa = 0 vertices
  /// (kappa = 0 vertex, kappa = 1 vertex) pairs with equal chi.
  std::vector<std::pair<size_t, size_t>> edges;
};

/// Throws UnbalancedTuple, or BudgetExceeded if the graph would have more
/// than `budget` vertices.
ClassificationGraph build_graph(const WordTuple& t, std::uint64_t budget = kDefaultBudget);

struct IncompressibleClass {
  int id = 0;
  std::vector<MatchingTuple> vertices;  // kappa = 0 members
  int chi = 0;
  std::vector<SurfaceComponent> profile;  // per component of a representative, sorted
  bool downward_closed = false;
  nlohmann::json to_json() const;
};

/// Every connected component of the graph that contains a kappa = 0 vertex,
/// with its downward-closed flag, ordered by first kappa = 0 vertex.
std::vector<IncompressibleClass> graph_components(const WordTuple& t, std::uint64_t budget = kDefaultBudget);

/// The downward-closed components only.
std::vector<IncompressibleClass> incompressible_classes(const WordTuple& t, std::uint64_t budget = kDefaultBudget);

/// Alternating count sum (-1)^{|kappa|} over restricted sigma realizing the
/// class. Requires a downward-closed class of this tuple.
Integer class_l2_euler(const WordTuple& t, const IncompressibleClass& c, std::uint64_t budget = kDefaultBudget);

}  // namespace wm
