#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "cffwb/constructions.hpp"
#include "cffwb/cover.hpp"
#include "cffwb/graphs.hpp"
#include "doctest.h"

using namespace cffwb;

TEST_CASE("validate_cover on constructed covers") {
  BicliqueCover had = hadamard_cover(hadamard_matrix(4));
  CoverValidation v = validate_cover(had);
  CHECK(v.ok);
  for (int c : v.edge_coverage) CHECK(c == 1);

  BicliqueCover orb = orbit_cover(3, 1, 1);
  CoverValidation vo = validate_cover(orb);
  CHECK(vo.ok);
  for (int c : vo.edge_coverage) CHECK(c == 2);
}

TEST_CASE("validate_cover rejects an empty cover of a nonempty graph") {
  BicliqueCover c;
  c.host = build_kminus(3);
  c.d = 1;
  CHECK_FALSE(validate_cover(c).ok);
}

TEST_CASE("validate_cover flags dangling references") {
  BicliqueCover c;
  c.host = build_kminus(2);
  c.d = 1;
  c.parts.push_back({{0}, {99}});
  CHECK_THROWS_AS(validate_cover(c), structural_error);
}

TEST_CASE("validate_cover rejects non-bicliques") {
  BicliqueCover c;
  c.host = build_kminus(3);  // v_1 not adjacent to v'_1
  c.d = 1;
  c.parts.push_back({{0}, {3}});  // v_1, v'_1
  CoverValidation v = validate_cover(c);
  CHECK_FALSE(v.ok);
  CHECK_FALSE(v.reason.empty());
}

TEST_CASE("maximal biclique enumeration") {
  LabeledGraph single = build_subset_graph(1, 1, 1);
  auto bs = enumerate_maximal_bicliques(single);
  REQUIRE(bs.size() == 1);
  CHECK(bs[0].X == std::vector<int>{0});
  CHECK(bs[0].Y == std::vector<int>{1});

  auto km3 = enumerate_maximal_bicliques(build_kminus(3));
  CHECK(km3.size() == 6);
  for (const Biclique& b : km3) {
    CHECK(b.cross_edges() == 2);
    CHECK((b.X.size() == 1 || b.Y.size() == 1));
  }
}

TEST_CASE("max biclique edge count") {
  CHECK(max_biclique_edge_count(build_bi_intersection(4, 2, 1)) == 3);
  CHECK(max_biclique_edge_count(build_kminus(7)) == 12);
  CHECK(max_biclique_edge_count(build_kminus(3)) == 2);
  CHECK(max_biclique_edge_count(build_kminus(1)) == 0);  // edgeless
}

TEST_CASE("exact bc_1 values") {
  CHECK(exact_bcd(build_kminus(3), 1).lower == 3);
  CHECK(exact_bcd(build_bi_intersection(5, 2, 2), 1).lower == 10);
  SolveResult k3 = exact_bcd(build_complete(3), 1);
  CHECK(k3.exact);
  CHECK(k3.lower == 2);
}

TEST_CASE("exact_bcd returns a valid witness") {
  for (const char* fam : {"kminus:4", "it:4,2,1", "complete:4"}) {
    LabeledGraph g = build_graph(fam);
    for (int d : {1, 2}) {
      SolveResult res = exact_bcd(g, d);
      REQUIRE(res.exact);
      REQUIRE(res.witness.has_value());
      CHECK(Count(static_cast<long>(res.witness->parts.size())) == res.lower);
      CHECK(res.witness->d == d);
      CHECK(validate_cover(*res.witness).ok);
    }
  }
}

TEST_CASE("exact_bcd budget exhaustion yields a certified interval") {
  // bc(K-minus_4) = 4 but the root lower bound is 3, so one node cannot finish
  SolveResult res = exact_bcd(build_kminus(4), 1, /*node_budget=*/1);
  CHECK_FALSE(res.exact);
  CHECK(res.lower <= res.upper);
  CHECK(res.lower >= 3);
  CHECK(res.upper >= 4);
}

TEST_CASE("bc_star_formula") {
  BcStar a = bc_star_formula(3, 1, 1);
  CHECK(a.value == 3);
  CHECK(a.minimizing_m == 1);
  BcStar b = bc_star_formula(4, 1, 1);
  CHECK(b.value == 3);
  CHECK(b.minimizing_m == 2);
  CHECK(bc_star_formula(5, 2, 2).value == 10);
  CHECK_THROWS_AS(bc_star_formula(3, 2, 2), domain_error);
}

TEST_CASE("bc_star_edge_transitive") {
  CHECK(bc_star_edge_transitive(42, 12) == Ratio(7, 2));
  CHECK(bc_star_edge_transitive(6, 2) == 3);
  CHECK(bc_star_edge_transitive(12, 3) == 4);
  CHECK_THROWS_AS(bc_star_edge_transitive(5, 0), domain_error);
}

TEST_CASE("fractional formula agrees with the enumeration oracle") {
  for (int t = 2; t <= 6; ++t)
    for (int r = 1; r < t; ++r)
      for (int w = 1; w <= r && r + w <= t; ++w) {
        LabeledGraph g = build_bi_intersection(t, r, w);
        Count edges = binomial(t, r) * binomial(t - r, w);
        long B = max_biclique_edge_count(g, 64);
        CHECK(bc_star_formula(t, r, w).value ==
              bc_star_edge_transitive(edges, Count(B)));
        Count formula_B = 0;
        for (int tp = 0; tp <= t; ++tp)
          formula_B = std::max(formula_B,
                               Count(binomial(tp, r) * binomial(t - tp, w)));
        CHECK(Count(B) == formula_B);
      }
}

TEST_CASE("bc_d sandwich and monotonicity in d") {
  for (const char* fam : {"kminus:3", "kminus:4", "it:4,2,1"}) {
    LabeledGraph g = build_graph(fam);
    SolveResult d1 = exact_bcd(g, 1);
    SolveResult d2 = exact_bcd(g, 2);
    SolveResult d4 = exact_bcd(g, 4);
    REQUIRE(d1.exact);
    REQUIRE(d2.exact);
    REQUIRE(d4.exact);
    CHECK(d2.lower >= d1.lower);
    CHECK(d2.lower <= 2 * d1.lower);
    CHECK(d4.lower <= 2 * d2.lower);
  }
}

TEST_CASE("Lovasz relation on small hosts") {
  for (int t = 2; t <= 6; ++t) {
    LabeledGraph g = build_bi_intersection(t, 1, 1);
    SolveResult res = exact_bcd(g, 1);
    REQUIRE(res.exact);
    double star = bc_star_formula(t, 1, 1).value.get_d();
    double delta = max_degree(g);
    CHECK(res.lower.get_d() <= star * (1.0 + std::log(delta)) + 1e-9);
  }
}

TEST_CASE("disjoint union lower bound") {
  // two disjoint copies of K-minus_3 inside one bipartite host
  LabeledGraph g;
  g.bipartite = true;
  g.n_left = 6;
  for (int i = 1; i <= 6; ++i) g.labels.push_back({i});
  for (int i = 1; i <= 6; ++i) g.labels.push_back({i});
  g.adj.assign(12, {});
  auto add_edge = [&](int u, int v) {
    g.adj[u].push_back(6 + v);
    g.adj[6 + v].push_back(u);
  };
  for (int base : {0, 3})
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j) add_edge(base + i, base + j);
  for (auto& list : g.adj) std::sort(list.begin(), list.end());
  SolveResult whole = exact_bcd(g, 1);
  SolveResult part = exact_bcd(build_kminus(3), 1);
  REQUIRE(whole.exact);
  CHECK(whole.lower >= 2 * part.lower);
}

TEST_CASE("cover serialization round-trips") {
  for (const BicliqueCover& c :
       {orbit_cover(3, 1, 1), hadamard_cover(hadamard_matrix(8)),
        *exact_bcd(build_complete(4), 1).witness}) {
    BicliqueCover back = parse_cover(emit_cover(c));
    CHECK(back.d == c.d);
    CHECK(back.host.family == c.host.family);
    REQUIRE(back.parts.size() == c.parts.size());
    for (size_t i = 0; i < c.parts.size(); ++i) {
      CHECK(back.parts[i].X == c.parts[i].X);
      CHECK(back.parts[i].Y == c.parts[i].Y);
    }
    CHECK(emit_cover(back) == emit_cover(c));
  }
}
