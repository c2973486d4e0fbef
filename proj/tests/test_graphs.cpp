#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "cffwb/combinatorics.hpp"
#include "cffwb/graphs.hpp"
#include "doctest.h"

using namespace cffwb;

namespace {

Label complement_in(int t, const Label& s) {
  Label out;
  for (int i = 1; i <= t; ++i)
    if (!std::binary_search(s.begin(), s.end(), i)) out.push_back(i);
  return out;
}

}  // namespace

TEST_CASE("bi-intersection graph shape") {
  LabeledGraph g = build_bi_intersection(3, 1, 1);
  CHECK(g.vertex_count() == 6);
  CHECK(g.n_left == 3);
  CHECK(g.edge_count() == 6);

  LabeledGraph h = build_bi_intersection(4, 2, 1);
  CHECK(h.n_left == 6);
  CHECK(h.n_right() == 4);
  CHECK(h.edge_count() == 12);

  CHECK_THROWS_AS(build_bi_intersection(3, 1, 2), domain_error);  // w > r
  CHECK_THROWS_AS(build_bi_intersection(17, 2, 1), domain_error);
}

TEST_CASE("complete graph") {
  LabeledGraph g = build_complete(3);
  CHECK_FALSE(g.bipartite);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
}

TEST_CASE("family descriptor parser") {
  CHECK(build_graph("it:4,2,1").edge_count() == 12);
  CHECK(build_graph("kminus:3").edge_count() == 6);
  CHECK(build_graph("complete:4").edge_count() == 6);
  CHECK(build_graph("subset:3,1,2").edge_count() == 6);
  CHECK_THROWS_AS(build_graph("nonsense:1"), parse_error);
}

TEST_CASE("max matching") {
  CHECK(max_matching(build_bi_intersection(4, 2, 1)) == 4);
  CHECK(max_matching(build_bi_intersection(5, 2, 2)) == 10);
  CHECK(max_matching(build_kminus(3)) == 3);
  CHECK_THROWS_AS(max_matching(build_complete(3)), unsupported_error);
}

TEST_CASE("vertex cover equals matching (Konig)") {
  CHECK(vertex_cover_number(build_bi_intersection(4, 2, 1)) == 4);
  CHECK(vertex_cover_number(build_bi_intersection(5, 2, 2)) == 10);
  CHECK(vertex_cover_number(build_kminus(1)) == 0);  // edgeless
  for (int t = 2; t <= 6; ++t) {
    LabeledGraph g = build_kminus(t);
    CHECK(vertex_cover_number(g) == max_matching(g));
  }
}

TEST_CASE("min_vertex_cover is a cover of the stated size") {
  for (const char* fam : {"it:5,2,1", "kminus:5", "it:6,2,2"}) {
    LabeledGraph g = build_graph(fam);
    std::vector<int> cover = min_vertex_cover(g);
    CHECK(static_cast<int>(cover.size()) == vertex_cover_number(g));
    for (auto [u, v] : g.edges())
      CHECK((std::binary_search(cover.begin(), cover.end(), u) ||
             std::binary_search(cover.begin(), cover.end(), v)));
  }
}

TEST_CASE("max induced matching") {
  CHECK(max_induced_matching(build_bi_intersection(4, 2, 1)) == 3);
  CHECK(max_induced_matching(build_bi_intersection(4, 2, 2)) == 6);
  CHECK(max_induced_matching(build_subset_graph(1, 1, 1)) == 1);  // one edge
}

TEST_CASE("c4 freeness") {
  CHECK(is_c4_free(build_bi_intersection(5, 2, 2)));
  CHECK(is_c4_free(build_bi_intersection(4, 2, 2)));
  CHECK_FALSE(is_c4_free(build_kminus(4)));
}

TEST_CASE("max degree") {
  CHECK(max_degree(build_bi_intersection(4, 2, 1)) == 3);
  CHECK(max_degree(build_kminus(5)) == 4);
  CHECK(max_degree(build_kminus(1)) == 0);
}

TEST_CASE("degree regularity of the bi-intersection graph") {
  for (int t = 2; t <= 7; ++t)
    for (int r = 1; r <= t; ++r)
      for (int w = 1; w <= r && r + w <= t; ++w) {
        LabeledGraph g = build_bi_intersection(t, r, w);
        for (int v = 0; v < g.n_left; ++v)
          CHECK(Count(static_cast<long>(g.adj[v].size())) ==
                binomial(t - r, w));
        for (int v = g.n_left; v < g.vertex_count(); ++v)
          CHECK(Count(static_cast<long>(g.adj[v].size())) ==
                binomial(t - w, r));
      }
}

TEST_CASE("bi-intersection is the subset graph under label complement") {
  for (int t = 2; t <= 7; ++t)
    for (int r = 1; r <= t; ++r)
      for (int w = 1; w <= r && r + w <= t; ++w) {
        LabeledGraph it = build_bi_intersection(t, r, w);
        LabeledGraph sub = build_subset_graph(t, r, t - w);
        REQUIRE(it.edge_count() == sub.edge_count());
        std::set<std::pair<int, int>> sub_edges;
        for (auto e : sub.edges()) sub_edges.insert(e);
        for (auto [u, v] : it.edges()) {
          int su = sub.find_left(it.labels[u]);
          int sv = sub.find_right(complement_in(t, it.labels[v]));
          REQUIRE(su >= 0);
          REQUIRE(sv >= 0);
          CHECK(sub_edges.count({su, sv}) == 1);
        }
      }
}

TEST_CASE("I_t(1,1) is K-minus under singleton labels") {
  for (int t = 2; t <= 7; ++t) {
    LabeledGraph it = build_bi_intersection(t, 1, 1);
    LabeledGraph km = build_kminus(t);
    CHECK(it.edges() == km.edges());
  }
}
