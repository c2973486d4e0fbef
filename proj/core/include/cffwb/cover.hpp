#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cffwb/combinatorics.hpp"
#include "cffwb/graphs.hpp"

namespace cffwb {

/// Complete bipartite subgraph of a host graph, as vertex index sets.
/// Either side may be empty (an empty graph is a biclique).
struct Biclique {
  std::vector<int> X;  // sorted; left class for bipartite hosts
  std::vector<int> Y;  // sorted; right class for bipartite hosts

  long cross_edges() const {
    return static_cast<long>(X.size()) * static_cast<long>(Y.size());
  }
};

/// Multiset of bicliques claimed to cover every host edge >= d times.
struct BicliqueCover {
  LabeledGraph host;
  int d = 1;
  std::vector<Biclique> parts;
};

struct CoverValidation {
  bool ok = false;
  /// Coverage count per edge, aligned with host.edges().
  std::vector<int> edge_coverage;
  std::string reason;  // empty when ok
};

/// Checks every part is a genuine biclique of the host and that the minimum
/// edge coverage is >= d.  Dangling vertex references throw structural_error.
CoverValidation validate_cover(const BicliqueCover& c);

/// All inclusion-maximal bicliques with nonempty sides, canonical order.
std::vector<Biclique> enumerate_maximal_bicliques(const LabeledGraph& g,
                                                  int max_vertices = 40);

/// B(G): maximum |X|*|Y| over bicliques of g.
long max_biclique_edge_count(const LabeledGraph& g, int max_vertices = 40);

struct SolveResult {
  Count lower;
  Count upper;
  bool exact = false;
  std::optional<BicliqueCover> witness;  // achieves `upper`
  long nodes = 0;
};

/// Exact bc_d(g) by branch-and-bound over the maximal-biclique multicover
/// formulation.  C4-free bipartite hosts with d = 1 short-circuit to the
/// vertex cover number.  On budget exhaustion returns a certified
/// [lower, upper] interval with exact = false.
SolveResult exact_bcd(const LabeledGraph& g, int d,
                      long node_budget = 10'000'000, int max_vertices = 40);

struct BcStar {
  Ratio value;
  int minimizing_m = 0;  // smallest minimizer
};

/// bc*(I_t(r,w)) = min_{w <= m <= t-r} C(t,m) / C(t-r-w, m-w), exact.
BcStar bc_star_formula(int t, int r, int w);

/// bc*(G) = |E(G)| / B(G) for edge-transitive G, exact.
Ratio bc_star_edge_transitive(const Count& edge_count, const Count& B);

/// Structured text (JSON) serialization; bit-exact round-trip.
std::string emit_cover(const BicliqueCover& c);
BicliqueCover parse_cover(const std::string& text);

}  // namespace cffwb
