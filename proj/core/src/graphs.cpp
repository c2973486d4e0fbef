#include "cffwb/graphs.hpp"

#include <algorithm>
#include <map>

#include "detail.hpp"

namespace cffwb {

long LabeledGraph::edge_count() const {
  long twice = 0;
  for (const auto& nbrs : adj) twice += static_cast<long>(nbrs.size());
  return twice / 2;
}

bool LabeledGraph::has_edge(int u, int v) const {
  const auto& nbrs = adj[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<int, int>> LabeledGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(edge_count()));
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : adj[u])
      if (v > u) out.emplace_back(u, v);
  return out;
}

namespace {

int find_label(const std::vector<Label>& labels, int lo, int hi,
               const Label& label) {
  auto begin = labels.begin() + lo, end = labels.begin() + hi;
  auto it = std::lower_bound(begin, end, label);
  if (it != end && *it == label) return static_cast<int>(it - labels.begin());
  return -1;
}

}  // namespace

int LabeledGraph::find_left(const Label& label) const {
  return find_label(labels, 0, bipartite ? n_left : vertex_count(), label);
}

int LabeledGraph::find_right(const Label& label) const {
  if (!bipartite) return find_label(labels, 0, vertex_count(), label);
  return find_label(labels, n_left, vertex_count(), label);
}

namespace {

bool disjoint_sorted(const Label& a, const Label& b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j])
      ++i;
    else
      ++j;
  }
  return true;
}

void add_edge(LabeledGraph& g, int u, int v) {
  g.adj[u].push_back(v);
  g.adj[v].push_back(u);
}

void finish_adjacency(LabeledGraph& g) {
  for (auto& nbrs : g.adj) std::sort(nbrs.begin(), nbrs.end());
}

}  // namespace

LabeledGraph build_bi_intersection(int t, int r, int w) {
  if (!(0 < w && w <= r && r <= t))
    throw domain_error("bi_intersection: need 0 < w <= r <= t");
  if (t > 16) throw domain_error("bi_intersection: t capped at 16");
  LabeledGraph g;
  g.family = "it:" + std::to_string(t) + "," + std::to_string(r) + "," +
             std::to_string(w);
  auto ground = detail::range_1_to(t);
  auto left = detail::combinations(ground, r);
  auto right = detail::combinations(ground, w);
  g.n_left = static_cast<int>(left.size());
  g.labels = left;
  g.labels.insert(g.labels.end(), right.begin(), right.end());
  g.adj.assign(g.labels.size(), {});
  for (int u = 0; u < g.n_left; ++u)
    for (size_t j = 0; j < right.size(); ++j)
      if (disjoint_sorted(left[u], right[j]))
        add_edge(g, u, g.n_left + static_cast<int>(j));
  finish_adjacency(g);
  return g;
}

LabeledGraph build_subset_graph(int t, int a, int b) {
  if (!(0 < a && a <= b && b <= t))
    throw domain_error("subset_graph: need 0 < a <= b <= t");
  if (t > 16) throw domain_error("subset_graph: t capped at 16");
  LabeledGraph g;
  g.family = "subset:" + std::to_string(t) + "," + std::to_string(a) + "," +
             std::to_string(b);
  auto ground = detail::range_1_to(t);
  auto left = detail::combinations(ground, a);
  auto right = detail::combinations(ground, b);
  g.n_left = static_cast<int>(left.size());
  g.labels = left;
  g.labels.insert(g.labels.end(), right.begin(), right.end());
  g.adj.assign(g.labels.size(), {});
  for (int u = 0; u < g.n_left; ++u)
    for (size_t j = 0; j < right.size(); ++j)
      if (std::includes(right[j].begin(), right[j].end(), left[u].begin(),
                        left[u].end()))
        add_edge(g, u, g.n_left + static_cast<int>(j));
  finish_adjacency(g);
  return g;
}

LabeledGraph build_kminus(int n) {
  if (n < 1) throw domain_error("kminus: n must be >= 1");
  LabeledGraph g;
  g.family = "kminus:" + std::to_string(n);
  g.n_left = n;
  for (int i = 1; i <= n; ++i) g.labels.push_back({i});
  for (int i = 1; i <= n; ++i) g.labels.push_back({i});
  g.adj.assign(static_cast<size_t>(2 * n), {});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) add_edge(g, i, n + j);
  finish_adjacency(g);
  // each cross edge was added once per (i, j); dedupe not needed (i != j pairs unique)
  return g;
}

LabeledGraph build_complete(int n) {
  if (n < 1) throw domain_error("complete: n must be >= 1");
  LabeledGraph g;
  g.bipartite = false;
  g.family = "complete:" + std::to_string(n);
  g.n_left = n;
  for (int i = 1; i <= n; ++i) g.labels.push_back({i});
  g.adj.assign(static_cast<size_t>(n), {});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) add_edge(g, i, j);
  finish_adjacency(g);
  return g;
}

LabeledGraph build_graph(const std::string& family) {
  auto colon = family.find(':');
  if (colon == std::string::npos)
    throw domain_error("build_graph: malformed family '" + family + "'");
  std::string kind = family.substr(0, colon);
  std::vector<int> args;
  size_t pos = colon + 1;
  while (pos <= family.size()) {
    size_t comma = family.find(',', pos);
    std::string tok = family.substr(pos, comma == std::string::npos
                                             ? std::string::npos
                                             : comma - pos);
    try {
      args.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw domain_error("build_graph: bad parameter in '" + family + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (kind == "it" && args.size() == 3)
    return build_bi_intersection(args[0], args[1], args[2]);
  if (kind == "subset" && args.size() == 3)
    return build_subset_graph(args[0], args[1], args[2]);
  if (kind == "kminus" && args.size() == 1) return build_kminus(args[0]);
  if (kind == "complete" && args.size() == 1) return build_complete(args[0]);
  throw parse_error("build_graph: unknown family '" + family + "'");
}

namespace {

struct Matching {
  std::vector<int> match;  // partner vertex or -1, indexed by vertex
  int size = 0;
};

bool try_augment(const LabeledGraph& g, int u, std::vector<char>& visited,
                 std::vector<int>& match) {
  for (int v : g.adj[u]) {
    if (visited[v]) continue;
    visited[v] = 1;
    if (match[v] == -1 || try_augment(g, match[v], visited, match)) {
      match[v] = u;
      match[u] = v;
      return true;
    }
  }
  return false;
}

Matching bipartite_matching(const LabeledGraph& g) {
  if (!g.bipartite)
    throw unsupported_error("matching: only bipartite graphs supported");
  Matching m;
  m.match.assign(static_cast<size_t>(g.vertex_count()), -1);
  for (int u = 0; u < g.n_left; ++u) {
    std::vector<char> visited(static_cast<size_t>(g.vertex_count()), 0);
    if (try_augment(g, u, visited, m.match)) ++m.size;
  }
  return m;
}

}  // namespace

int max_matching(const LabeledGraph& g) { return bipartite_matching(g).size; }

int vertex_cover_number(const LabeledGraph& g) { return max_matching(g); }

std::vector<int> min_vertex_cover(const LabeledGraph& g) {
  Matching m = bipartite_matching(g);
  int n = g.vertex_count();
  // alternating reachability from unmatched left vertices
  std::vector<char> in_z(static_cast<size_t>(n), 0);
  std::vector<int> stack;
  for (int u = 0; u < g.n_left; ++u)
    if (m.match[u] == -1) {
      in_z[u] = 1;
      stack.push_back(u);
    }
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : g.adj[u]) {
      if (in_z[v]) continue;
      if (m.match[u] == v) continue;  // from left, follow non-matching edges
      in_z[v] = 1;
      int back = m.match[v];
      if (back != -1 && !in_z[back]) {
        in_z[back] = 1;
        stack.push_back(back);
      }
    }
  }
  std::vector<int> cover;
  for (int u = 0; u < g.n_left; ++u)
    if (!in_z[u]) cover.push_back(u);
  for (int v = g.n_left; v < n; ++v)
    if (in_z[v]) cover.push_back(v);
  return cover;
}

int max_induced_matching(const LabeledGraph& g, int max_vertices) {
  if (g.vertex_count() > max_vertices)
    throw budget_error("max_induced_matching: vertex cap exceeded");
  auto es = g.edges();
  size_t m = es.size();
  if (m == 0) return 0;
  // compatibility graph over edges: maximum clique = maximum induced matching
  std::vector<detail::Bits> compat(m, detail::Bits(m));
  for (size_t a = 0; a < m; ++a) {
    auto [u1, v1] = es[a];
    for (size_t b = a + 1; b < m; ++b) {
      auto [u2, v2] = es[b];
      if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2) continue;
      if (g.has_edge(u1, u2) || g.has_edge(u1, v2) || g.has_edge(v1, u2) ||
          g.has_edge(v1, v2))
        continue;
      compat[a].set(b);
      compat[b].set(a);
    }
  }
  return static_cast<int>(detail::max_clique(compat).size());
}

bool is_c4_free(const LabeledGraph& g) {
  std::map<std::pair<int, int>, int> common;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& nbrs = g.adj[v];
    for (size_t i = 0; i < nbrs.size(); ++i)
      for (size_t j = i + 1; j < nbrs.size(); ++j)
        if (++common[{nbrs[i], nbrs[j]}] >= 2) return false;
  }
  return true;
}

int max_degree(const LabeledGraph& g) {
  size_t best = 0;
  for (const auto& nbrs : g.adj) best = std::max(best, nbrs.size());
  return static_cast<int>(best);
}

}  // namespace cffwb
