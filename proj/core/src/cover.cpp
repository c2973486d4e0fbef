#include "cffwb/cover.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "detail.hpp"

namespace cffwb {

namespace {

std::map<std::pair<int, int>, int> edge_index_map(
    const std::vector<std::pair<int, int>>& es) {
  std::map<std::pair<int, int>, int> idx;
  for (size_t i = 0; i < es.size(); ++i) idx[es[i]] = static_cast<int>(i);
  return idx;
}

std::pair<int, int> ordered(int u, int v) {
  return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
}

}  // namespace

CoverValidation validate_cover(const BicliqueCover& c) {
  const LabeledGraph& g = c.host;
  auto es = g.edges();
  auto idx = edge_index_map(es);
  CoverValidation result;
  result.edge_coverage.assign(es.size(), 0);

  int n = g.vertex_count();
  auto fail = [&](const std::string& why) {
    result.ok = false;
    if (result.reason.empty()) result.reason = why;
  };
  result.ok = true;
  for (size_t p = 0; p < c.parts.size(); ++p) {
    const Biclique& part = c.parts[p];
    for (int v : part.X)
      if (v < 0 || v >= n)
        throw structural_error("validate_cover: dangling vertex in part " +
                               std::to_string(p + 1));
    for (int v : part.Y)
      if (v < 0 || v >= n)
        throw structural_error("validate_cover: dangling vertex in part " +
                               std::to_string(p + 1));
    std::string tag = "part " + std::to_string(p + 1);
    if (g.bipartite) {
      for (int x : part.X)
        if (x >= g.n_left) fail(tag + ": X vertex not in left class");
      for (int y : part.Y)
        if (y < g.n_left) fail(tag + ": Y vertex not in right class");
    } else {
      for (int x : part.X)
        if (std::binary_search(part.Y.begin(), part.Y.end(), x))
          fail(tag + ": X and Y overlap");
    }
    for (int x : part.X)
      for (int y : part.Y) {
        if (!g.has_edge(x, y)) {
          fail(tag + ": missing host edge between declared sides");
          continue;
        }
        ++result.edge_coverage[idx[ordered(x, y)]];
      }
  }
  for (size_t e = 0; e < es.size(); ++e)
    if (result.edge_coverage[e] < c.d)
      fail("edge (" + std::to_string(es[e].first) + "," +
           std::to_string(es[e].second) + ") covered " +
           std::to_string(result.edge_coverage[e]) + " < d");
  return result;
}

std::vector<Biclique> enumerate_maximal_bicliques(const LabeledGraph& g,
                                                  int max_vertices) {
  int n = g.vertex_count();
  if (n > max_vertices)
    throw budget_error("enumerate_maximal_bicliques: vertex cap exceeded");

  // Placement graph: cliques correspond to bicliques (X side, Y side).
  // Bipartite hosts have fixed sides; general hosts get two placements per
  // vertex.
  size_t np = g.bipartite ? static_cast<size_t>(n) : 2 * static_cast<size_t>(n);
  auto vertex_of = [&](size_t p) {
    return g.bipartite ? static_cast<int>(p) : static_cast<int>(p / 2);
  };
  auto is_x_side = [&](size_t p) {
    return g.bipartite ? static_cast<int>(p) < g.n_left : p % 2 == 0;
  };
  std::vector<detail::Bits> compat(np, detail::Bits(np));
  for (size_t a = 0; a < np; ++a)
    for (size_t b = a + 1; b < np; ++b) {
      int u = vertex_of(a), v = vertex_of(b);
      if (u == v) continue;
      bool ok = is_x_side(a) == is_x_side(b) ? true : g.has_edge(u, v);
      if (ok) {
        compat[a].set(b);
        compat[b].set(a);
      }
    }

  std::vector<Biclique> out;
  detail::enumerate_maximal_cliques(compat, [&](const detail::Bits& clique) {
    Biclique part;
    for (size_t p = clique.find_first(); p != detail::Bits::npos;
         p = clique.find_next(p))
      (is_x_side(p) ? part.X : part.Y).push_back(vertex_of(p));
    if (part.X.empty() || part.Y.empty()) return;
    std::sort(part.X.begin(), part.X.end());
    std::sort(part.Y.begin(), part.Y.end());
    if (!g.bipartite && part.Y < part.X) return;  // each pair reported twice
    out.push_back(std::move(part));
  });
  std::sort(out.begin(), out.end(), [](const Biclique& a, const Biclique& b) {
    return std::tie(a.X, a.Y) < std::tie(b.X, b.Y);
  });
  return out;
}

long max_biclique_edge_count(const LabeledGraph& g, int max_vertices) {
  if (g.edge_count() == 0) return 0;
  long best = 0;
  for (const Biclique& b : enumerate_maximal_bicliques(g, max_vertices))
    best = std::max(best, b.cross_edges());
  return best;
}

namespace {

struct MulticoverInstance {
  int d = 1;
  size_t num_edges = 0;
  std::vector<detail::Bits> masks;     // per candidate, over edge indices
  std::vector<std::vector<int>> covering;  // per edge, candidate indices
};

struct MulticoverSearch {
  const MulticoverInstance& inst;
  long budget;
  long nodes = 0;
  bool aborted = false;
  std::vector<int> rem;      // remaining demand per edge
  detail::Bits demanded;     // edges with rem > 0
  long total_rem = 0;
  std::vector<int> chosen;
  std::vector<int> best;
  size_t best_size;

  MulticoverSearch(const MulticoverInstance& i, long b,
                   const std::vector<int>& greedy)
      : inst(i), budget(b), demanded(i.num_edges), best(greedy),
        best_size(greedy.size()) {
    rem.assign(inst.num_edges, inst.d);
    demanded.set();
    total_rem = static_cast<long>(inst.num_edges) * inst.d;
  }

  void dfs() {
    if (aborted) return;
    if (total_rem == 0) {
      if (chosen.size() < best_size) {
        best = chosen;
        best_size = chosen.size();
      }
      return;
    }
    if (++nodes > budget) {
      aborted = true;
      return;
    }
    // bound: one pick reduces demand by at most the best candidate reach
    size_t max_reduction = 0;
    for (const auto& mask : inst.masks)
      max_reduction = std::max(max_reduction, (mask & demanded).count());
    size_t lb = chosen.size() +
                static_cast<size_t>((total_rem + static_cast<long>(max_reduction) - 1) /
                                    static_cast<long>(max_reduction));
    if (lb >= best_size) return;

    // branch on the demanded edge with fewest covering candidates
    size_t branch_edge = detail::Bits::npos;
    size_t fewest = SIZE_MAX;
    for (size_t e = demanded.find_first(); e != detail::Bits::npos;
         e = demanded.find_next(e)) {
      size_t options = inst.covering[e].size();
      if (options < fewest) {
        fewest = options;
        branch_edge = e;
      }
    }
    for (int c : inst.covering[branch_edge]) {
      const detail::Bits hits = inst.masks[c] & demanded;
      for (size_t e = hits.find_first(); e != detail::Bits::npos;
           e = hits.find_next(e)) {
        --rem[e];
        --total_rem;
        if (rem[e] == 0) demanded.reset(e);
      }
      chosen.push_back(c);
      dfs();
      chosen.pop_back();
      for (size_t e = hits.find_first(); e != detail::Bits::npos;
           e = hits.find_next(e)) {
        ++rem[e];
        ++total_rem;
        demanded.set(e);
      }
      if (aborted) return;
    }
  }
};

}  // namespace

SolveResult exact_bcd(const LabeledGraph& g, int d, long node_budget,
                      int max_vertices) {
  if (d < 1) throw domain_error("exact_bcd: d must be >= 1");
  if (g.vertex_count() > max_vertices)
    throw budget_error("exact_bcd: vertex cap exceeded");
  auto es = g.edges();
  SolveResult result;
  if (es.empty()) {
    result.lower = result.upper = 0;
    result.exact = true;
    result.witness = BicliqueCover{g, d, {}};
    return result;
  }

  // C4-free bipartite graphs: bc equals the covering number, witnessed by
  // stars around a minimum vertex cover.
  if (d == 1 && g.bipartite && is_c4_free(g)) {
    auto cover_vertices = min_vertex_cover(g);
    BicliqueCover witness{g, 1, {}};
    for (int v : cover_vertices) {
      Biclique star;
      if (v < g.n_left) {
        star.X = {v};
        star.Y = g.adj[v];
      } else {
        star.X = g.adj[v];
        star.Y = {v};
      }
      witness.parts.push_back(std::move(star));
    }
    result.lower = result.upper = static_cast<long>(cover_vertices.size());
    result.exact = true;
    result.witness = std::move(witness);
    return result;
  }

  auto candidates = enumerate_maximal_bicliques(g, max_vertices);
  // decreasing edge count, ties in canonical order
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Biclique& a, const Biclique& b) {
                     return a.cross_edges() > b.cross_edges();
                   });

  auto idx = edge_index_map(es);
  MulticoverInstance inst;
  inst.d = d;
  inst.num_edges = es.size();
  inst.covering.assign(es.size(), {});
  for (size_t c = 0; c < candidates.size(); ++c) {
    detail::Bits mask(es.size());
    for (int x : candidates[c].X)
      for (int y : candidates[c].Y) mask.set(static_cast<size_t>(idx[ordered(x, y)]));
    for (size_t e = mask.find_first(); e != detail::Bits::npos;
         e = mask.find_next(e))
      inst.covering[e].push_back(static_cast<int>(c));
    inst.masks.push_back(std::move(mask));
  }

  long B = 0;
  for (const auto& mask : inst.masks)
    B = std::max(B, static_cast<long>(mask.count()));
  long m_ind = max_induced_matching(g, max_vertices);
  long total = static_cast<long>(es.size()) * d;
  Count root_lb = std::max((total + B - 1) / B, static_cast<long>(d) * m_ind);

  // greedy seed: cover the most remaining demand first
  std::vector<int> greedy;
  {
    std::vector<int> rem(es.size(), d);
    detail::Bits demanded(es.size());
    demanded.set();
    long remaining = total;
    while (remaining > 0) {
      size_t best_c = 0, best_gain = 0;
      for (size_t c = 0; c < inst.masks.size(); ++c) {
        size_t gain = (inst.masks[c] & demanded).count();
        if (gain > best_gain) {
          best_gain = gain;
          best_c = c;
        }
      }
      greedy.push_back(static_cast<int>(best_c));
      for (size_t e = (inst.masks[best_c] & demanded).find_first();
           e != detail::Bits::npos;
           e = (inst.masks[best_c] & demanded).find_next(e)) {
        --rem[e];
        --remaining;
        if (rem[e] == 0) demanded.reset(e);
      }
    }
  }

  auto make_witness = [&](const std::vector<int>& picks) {
    BicliqueCover w{g, d, {}};
    for (int c : picks) w.parts.push_back(candidates[static_cast<size_t>(c)]);
    return w;
  };

  if (root_lb == static_cast<long>(greedy.size())) {
    result.lower = result.upper = root_lb;
    result.exact = true;
    result.witness = make_witness(greedy);
    return result;
  }

  MulticoverSearch search(inst, node_budget, greedy);
  search.dfs();
  result.nodes = search.nodes;
  result.upper = static_cast<long>(search.best_size);
  result.witness = make_witness(search.best);
  if (search.aborted) {
    result.lower = root_lb;
    result.exact = false;
  } else {
    result.lower = result.upper;
    result.exact = true;
  }
  return result;
}

BcStar bc_star_formula(int t, int r, int w) {
  if (!(0 < w && w <= r && r + w <= t))
    throw domain_error("bc_star_formula: need 0 < w <= r and r + w <= t");
  BcStar best;
  bool first = true;
  for (int m = w; m <= t - r; ++m) {
    Ratio ratio(binomial(t, m), binomial(t - r - w, m - w));
    ratio.canonicalize();
    if (first || ratio < best.value) {
      best.value = ratio;
      best.minimizing_m = m;
      first = false;
    }
  }
  return best;
}

Ratio bc_star_edge_transitive(const Count& edge_count, const Count& B) {
  if (B < 1)
    throw domain_error("bc_star_edge_transitive: B must be >= 1");
  Ratio ratio(edge_count, B);
  ratio.canonicalize();
  return ratio;
}

using json = nlohmann::ordered_json;

namespace {

json labels_to_json(const LabeledGraph& g, const std::vector<int>& side) {
  json arr = json::array();
  for (int v : side) arr.push_back(g.labels[static_cast<size_t>(v)]);
  return arr;
}

}  // namespace

std::string emit_cover(const BicliqueCover& c) {
  json doc;
  doc["type"] = "biclique-cover";
  doc["host"] = c.host.family;
  doc["d"] = c.d;
  doc["parts"] = json::array();
  for (const Biclique& part : c.parts) {
    json p;
    p["X"] = labels_to_json(c.host, part.X);
    p["Y"] = labels_to_json(c.host, part.Y);
    doc["parts"].push_back(std::move(p));
  }
  return doc.dump(2);
}

BicliqueCover parse_cover(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw parse_error(std::string("parse_cover: ") + e.what());
  }
  if (!doc.is_object() || doc.value("type", "") != "biclique-cover")
    throw parse_error("parse_cover: not a biclique-cover document");
  BicliqueCover c;
  try {
    c.host = build_graph(doc.at("host").get<std::string>());
    c.d = doc.at("d").get<int>();
    for (const auto& p : doc.at("parts")) {
      Biclique part;
      for (const auto& lbl : p.at("X")) {
        int v = c.host.find_left(lbl.get<Label>());
        if (v < 0) throw parse_error("parse_cover: unknown X label");
        part.X.push_back(v);
      }
      for (const auto& lbl : p.at("Y")) {
        int v = c.host.find_right(lbl.get<Label>());
        if (v < 0) throw parse_error("parse_cover: unknown Y label");
        part.Y.push_back(v);
      }
      c.parts.push_back(std::move(part));
    }
  } catch (const json::exception& e) {
    throw parse_error(std::string("parse_cover: ") + e.what());
  }
  return c;
}

}  // namespace cffwb
