#include "detail.hpp"

namespace cffwb::detail {

namespace {

void bron_kerbosch(const std::vector<Bits>& adj, Bits& R, Bits P, Bits X,
                   const std::function<void(const Bits&)>& emit) {
  if (P.none() && X.none()) {
    emit(R);
    return;
  }
  // pivot: vertex of P|X maximizing |P & N(u)|, lowest index on ties
  Bits PX = P | X;
  size_t pivot = PX.find_first();
  size_t best_cover = 0;
  for (size_t u = PX.find_first(); u != Bits::npos; u = PX.find_next(u)) {
    size_t cover = (P & adj[u]).count();
    if (cover > best_cover) {
      best_cover = cover;
      pivot = u;
    }
  }
  Bits candidates = P - adj[pivot];
  for (size_t v = candidates.find_first(); v != Bits::npos;
       v = candidates.find_next(v)) {
    R.set(v);
    bron_kerbosch(adj, R, P & adj[v], X & adj[v], emit);
    R.reset(v);
    P.reset(v);
    X.set(v);
  }
}

}  // namespace

void enumerate_maximal_cliques(const std::vector<Bits>& adj,
                               const std::function<void(const Bits&)>& emit) {
  size_t n = adj.size();
  if (n == 0) return;
  Bits R(n), P(n), X(n);
  P.set();
  bron_kerbosch(adj, R, P, X, emit);
}

}  // namespace cffwb::detail
