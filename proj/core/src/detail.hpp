#pragma once

#include <boost/dynamic_bitset.hpp>
#include <functional>
#include <vector>

namespace cffwb::detail {

using Bits = boost::dynamic_bitset<>;

/// Lexicographic k-combinations of `items` (assumed sorted).
inline std::vector<std::vector<int>> combinations(const std::vector<int>& items,
                                                  int k) {
  std::vector<std::vector<int>> out;
  int n = static_cast<int>(items.size());
  if (k < 0 || k > n) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::vector<int> current(k);
    for (int i = 0; i < k; ++i) current[i] = items[idx[i]];
    out.push_back(std::move(current));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

inline std::vector<int> range_1_to(int t) {
  std::vector<int> v(t);
  for (int i = 0; i < t; ++i) v[i] = i + 1;
  return v;
}

/// Maximum clique via branch-and-bound with a greedy coloring bound.
/// Deterministic: candidates ordered by the coloring, ties by lowest index.
inline std::vector<int> max_clique(const std::vector<Bits>& adj) {
  size_t n = adj.size();
  std::vector<int> best, current;
  std::function<void(Bits)> expand = [&](Bits P) {
    std::vector<int> order, color_of;
    Bits uncolored = P;
    int color = 0;
    while (uncolored.any()) {
      ++color;
      Bits avail = uncolored;
      while (avail.any()) {
        size_t v = avail.find_first();
        order.push_back(static_cast<int>(v));
        color_of.push_back(color);
        uncolored.reset(v);
        avail.reset(v);
        avail -= adj[v];
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (current.size() + color_of[i] <= best.size()) return;
      int v = order[i];
      current.push_back(v);
      Bits next = P & adj[v];
      if (next.any())
        expand(next);
      else if (current.size() > best.size())
        best = current;
      current.pop_back();
      P.reset(static_cast<size_t>(v));
    }
  };
  if (n > 0) {
    Bits all(n);
    all.set();
    expand(all);
  }
  return best;
}

/// All maximal cliques (Bron-Kerbosch with pivoting), canonical order.
void enumerate_maximal_cliques(const std::vector<Bits>& adj,
                               const std::function<void(const Bits&)>& emit);

}  // namespace cffwb::detail
