#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cffwb/errors.hpp"

namespace cffwb {

/// Vertex label: a sorted subset of [t] (index labels are singletons {i}).
using Label = std::vector<int>;

/// Bipartite or general graph whose vertices carry subset labels.
///
/// Bipartite: vertices [0, n_left) are the left class, the rest the right
/// class.  General: n_left equals the vertex count.  Vertices within a class
/// are ordered lexicographically by label; labels are unique within a class.
struct LabeledGraph {
  bool bipartite = true;
  int n_left = 0;
  std::vector<Label> labels;
  std::vector<std::vector<int>> adj;  // sorted neighbor lists
  std::string family;                 // "it:t,r,w", "kminus:n", "complete:n", ...

  int vertex_count() const { return static_cast<int>(labels.size()); }
  int n_right() const { return vertex_count() - n_left; }
  long edge_count() const;
  bool has_edge(int u, int v) const;
  /// Edges as (u, v) pairs with u < v, sorted; bipartite edges as (left, right).
  std::vector<std::pair<int, int>> edges() const;
  /// Vertex index of a label in the left / right class, -1 if absent.
  int find_left(const Label& label) const;
  int find_right(const Label& label) const;
};

/// Bi-intersection graph: left = r-subsets of [t], right = w-subsets,
/// adjacent iff disjoint.  Requires 0 < w <= r <= t, t <= 16.
LabeledGraph build_bi_intersection(int t, int r, int w);

/// Subset graph: left = a-subsets, right = b-subsets (a <= b), adjacent iff
/// the small one is contained in the big one.
LabeledGraph build_subset_graph(int t, int a, int b);

/// K_{n,n} minus the perfect matching {v_i v'_i}.
LabeledGraph build_kminus(int n);

/// Complete graph K_n (general, not bipartite).
LabeledGraph build_complete(int n);

/// Parse a family descriptor: "it:T,R,W", "subset:T,A,B", "kminus:N",
/// "complete:N".
LabeledGraph build_graph(const std::string& family);

/// Maximum matching of a bipartite graph (augmenting paths).
int max_matching(const LabeledGraph& g);

/// Minimum vertex cover size of a bipartite graph (equals max_matching).
int vertex_cover_number(const LabeledGraph& g);

/// A minimum vertex cover of a bipartite graph, by the alternating-path
/// construction; sorted vertex indices.
std::vector<int> min_vertex_cover(const LabeledGraph& g);

/// Maximum induced matching: edges pairwise sharing no endpoint and with no
/// host edge joining endpoints of distinct chosen edges.  Branch-and-bound;
/// instances above max_vertices are rejected.
int max_induced_matching(const LabeledGraph& g, int max_vertices = 40);

/// True iff no two vertices share two common neighbors.
bool is_c4_free(const LabeledGraph& g);

int max_degree(const LabeledGraph& g);

}  // namespace cffwb
