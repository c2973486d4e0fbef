#include "cffwb/constructions.hpp"

#include <algorithm>
#include <json.hpp>

#include "detail.hpp"

namespace cffwb {

BicliqueCover cff_to_cover(const SetSystem& sys, int r, int w, int d) {
  int t = sys.block_count();
  if (r < 1 || w < 1 || d < 1)
    throw domain_error("cff_to_cover: r, w, d must be >= 1");
  if (t < r + w) throw domain_error("cff_to_cover: need t >= r + w");
  if (w > r) throw domain_error("cff_to_cover: orientation requires w <= r");
  BicliqueCover cover;
  cover.host = build_bi_intersection(t, r, w);
  cover.d = d;
  for (int j = 0; j < sys.n_points; ++j) {
    Label a_j, complement;
    for (int i = 1; i <= t; ++i)
      (sys.blocks[i - 1].test(static_cast<size_t>(j)) ? a_j : complement)
          .push_back(i);
    Biclique part;
    for (const auto& u : detail::combinations(a_j, r))
      part.X.push_back(cover.host.find_left(u));
    for (const auto& v : detail::combinations(complement, w))
      part.Y.push_back(cover.host.find_right(v));
    cover.parts.push_back(std::move(part));
  }
  return cover;
}

SetSystem cover_to_cff(const BicliqueCover& c) {
  auto check = validate_cover(c);
  if (!check.ok)
    throw domain_error("cover_to_cff: invalid cover: " + check.reason);
  int t = 0;
  for (const Label& lbl : c.host.labels)
    for (int e : lbl) t = std::max(t, e);
  SetSystem sys;
  sys.n_points = static_cast<int>(c.parts.size());
  sys.blocks.assign(static_cast<size_t>(t), PointSet(static_cast<size_t>(sys.n_points)));
  for (size_t i = 0; i < c.parts.size(); ++i)
    for (int x : c.parts[i].X)
      for (int b : c.host.labels[static_cast<size_t>(x)])
        sys.blocks[static_cast<size_t>(b - 1)].set(i);
  return sys;
}

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int p = 2; static_cast<long>(p) * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

bool paley_applicable(int n) {
  return n >= 4 && is_prime(n - 1) && (n - 1) % 4 == 3;
}

std::vector<std::vector<int>> sylvester_double(
    const std::vector<std::vector<int>>& h) {
  int m = static_cast<int>(h.size());
  std::vector<std::vector<int>> out(static_cast<size_t>(2 * m),
                                    std::vector<int>(static_cast<size_t>(2 * m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      out[i][j] = h[i][j];
      out[i][j + m] = h[i][j];
      out[i + m][j] = h[i][j];
      out[i + m][j + m] = -h[i][j];
    }
  return out;
}

std::vector<std::vector<int>> paley_matrix(int n) {
  int q = n - 1;
  std::vector<int> chi(static_cast<size_t>(q), -1);
  chi[0] = 0;
  for (int a = 1; a < q; ++a) chi[static_cast<size_t>(static_cast<long>(a) * a % q)] = 1;
  std::vector<std::vector<int>> h(static_cast<size_t>(n),
                                  std::vector<int>(static_cast<size_t>(n)));
  for (int j = 0; j < n; ++j) h[0][j] = 1;
  for (int i = 1; i < n; ++i) h[i][0] = -1;
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      h[i][j] = i == j ? 1 : chi[static_cast<size_t>(((j - i) % q + q) % q)];
  return h;
}

void normalize(std::vector<std::vector<int>>& h) {
  int n = static_cast<int>(h.size());
  for (int j = 0; j < n; ++j)
    if (h[0][j] == -1)
      for (int i = 0; i < n; ++i) h[i][j] = -h[i][j];
  for (int i = 0; i < n; ++i)
    if (h[i][0] == -1)
      for (int j = 0; j < n; ++j) h[i][j] = -h[i][j];
}

void verify_orthogonal(const std::vector<std::vector<int>>& h) {
  int n = static_cast<int>(h.size());
  for (int i = 0; i < n; ++i)
    for (int k = i; k < n; ++k) {
      long dot = 0;
      for (int j = 0; j < n; ++j) dot += static_cast<long>(h[i][j]) * h[k][j];
      if (dot != (i == k ? n : 0))
        throw error("hadamard_matrix: orthogonality check failed");
    }
}

}  // namespace

bool hadamard_constructible(int n) {
  if (n == 1 || n == 2) return true;
  if (n < 4 || n % 4 != 0) return false;
  if (paley_applicable(n)) return true;
  return n % 2 == 0 && hadamard_constructible(n / 2);
}

HadamardMatrix hadamard_matrix(int n) {
  if (!hadamard_constructible(n))
    throw unsupported_error("hadamard_matrix: no implemented construction for order " +
                            std::to_string(n));
  std::vector<std::vector<int>> h;
  if ((n & (n - 1)) == 0) {
    h = {{1}};
    for (int m = 1; m < n; m *= 2) h = sylvester_double(h);
  } else if (paley_applicable(n)) {
    h = paley_matrix(n);
  } else {
    h = sylvester_double(hadamard_matrix(n / 2).entries);
  }
  normalize(h);
  verify_orthogonal(h);
  return HadamardMatrix{n, std::move(h), true};
}

BicliqueCover hadamard_cover(const HadamardMatrix& H) {
  int n = H.order;
  if (n < 4 || n % 4 != 0)
    throw domain_error("hadamard_cover: order must be 4d with d >= 1");
  for (int j = 0; j < n; ++j)
    if (H.entries[0][j] != 1 || H.entries[j][0] != 1)
      throw domain_error("hadamard_cover: matrix must be normalized");
  int m = n - 1;
  BicliqueCover cover;
  cover.host = build_kminus(m);
  cover.d = n / 4;
  for (int j = 1; j < n; ++j) {
    Biclique part;
    for (int i = 1; i < n; ++i) {
      if (H.entries[i][j] == 1)
        part.X.push_back(i - 1);  // v_i
      else
        part.Y.push_back(m + i - 1);  // v'_i
    }
    cover.parts.push_back(std::move(part));
  }
  return cover;
}

BicliqueCover orbit_cover(int t, int r, int w) {
  if (!(0 < w && w <= r && r + w <= t))
    throw domain_error("orbit_cover: need 0 < w <= r and r + w <= t");
  if (t > 7) throw budget_error("orbit_cover: t capped at 7 (t! parts)");
  BicliqueCover cover;
  cover.host = build_bi_intersection(t, r, w);

  // seed: smallest t' maximizing C(t',r) * C(t-t',w)
  int best_tp = r;
  Count best_edges = 0;
  for (int tp = 0; tp <= t; ++tp) {
    Count e = binomial(tp, r) * binomial(t - tp, w);
    if (e > best_edges) {
      best_edges = e;
      best_tp = tp;
    }
  }
  std::vector<int> seed_set = detail::range_1_to(best_tp);
  std::vector<int> rest;
  for (int i = best_tp + 1; i <= t; ++i) rest.push_back(i);
  auto seed_x = detail::combinations(seed_set, r);
  auto seed_y = detail::combinations(rest, w);

  Count edge_total = binomial(t, r) * binomial(t - r, w);
  Count d_exact = best_edges * factorial(t) / edge_total;
  cover.d = static_cast<int>(d_exact.get_si());

  std::vector<int> perm = detail::range_1_to(t);
  do {
    Biclique part;
    for (const auto& u : seed_x) {
      Label mapped;
      for (int e : u) mapped.push_back(perm[static_cast<size_t>(e - 1)]);
      std::sort(mapped.begin(), mapped.end());
      part.X.push_back(cover.host.find_left(mapped));
    }
    for (const auto& v : seed_y) {
      Label mapped;
      for (int e : v) mapped.push_back(perm[static_cast<size_t>(e - 1)]);
      std::sort(mapped.begin(), mapped.end());
      part.Y.push_back(cover.host.find_right(mapped));
    }
    std::sort(part.X.begin(), part.X.end());
    std::sort(part.Y.begin(), part.Y.end());
    cover.parts.push_back(std::move(part));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return cover;
}

SetPairFamily chain_setpairs(int r, int w) {
  if (w < 1 || r < w) throw domain_error("chain_setpairs: need r >= w >= 1");
  SetPairFamily f;
  f.ground_size = r - w + 1;
  f.pairs.emplace_back(Label{}, Label{1});
  for (int i = 1; i <= r - w; ++i) {
    Label a = detail::range_1_to(i);
    f.pairs.emplace_back(a, Label{i + 1});
  }
  f.pairs.emplace_back(detail::range_1_to(r - w + 1), Label{});
  return f;
}

SetPairFamily uniform_setpairs(int s, int r, int w, UniformSide mode) {
  if (s < 1 || r < 1 || w < 1 || s > r + w)
    throw domain_error("uniform_setpairs: need 1 <= s <= r + w");
  SetPairFamily f;
  f.ground_size = s;
  auto m = detail::range_1_to(s);
  auto complement_of = [&](const Label& a) {
    Label b;
    for (int e : m)
      if (!std::binary_search(a.begin(), a.end(), e)) b.push_back(e);
    return b;
  };
  if (mode == UniformSide::Left) {
    for (int i = std::max(0, s - w); i <= std::min(r, s); ++i)
      for (const auto& a : detail::combinations(m, i))
        f.pairs.emplace_back(a, complement_of(a));
  } else {
    for (int j = std::max(0, s - r); j <= std::min(w, s); ++j)
      for (const auto& b : detail::combinations(m, j))
        f.pairs.emplace_back(complement_of(b), b);
  }
  return f;
}

namespace {

bool intersects(const Label& a, const Label& b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    if (a[i] < b[j])
      ++i;
    else
      ++j;
  }
  return false;
}

}  // namespace

SetPairCheck setpairs_weak(const SetPairFamily& f) {
  int g = static_cast<int>(f.pairs.size());
  for (int i = 0; i < g; ++i)
    for (int j = i + 1; j < g; ++j)
      if (!intersects(f.pairs[i].first, f.pairs[j].second) &&
          !intersects(f.pairs[j].first, f.pairs[i].second))
        return {false, std::make_pair(i + 1, j + 1)};
  return {true, std::nullopt};
}

SetPairCheck setpairs_cross(const SetPairFamily& f) {
  int g = static_cast<int>(f.pairs.size());
  for (int i = 0; i < g; ++i)
    for (int j = i + 1; j < g; ++j)
      if (!intersects(f.pairs[i].first, f.pairs[j].second) ||
          !intersects(f.pairs[j].first, f.pairs[i].second))
        return {false, std::make_pair(i + 1, j + 1)};
  return {true, std::nullopt};
}

SetPairCheck setpairs_rw_system(const SetPairFamily& f, int r, int w) {
  int g = static_cast<int>(f.pairs.size());
  for (int i = 0; i < g; ++i)
    if (static_cast<int>(f.pairs[i].first.size()) != r ||
        static_cast<int>(f.pairs[i].second.size()) != w)
      return {false, std::make_pair(i + 1, i + 1)};
  return setpairs_cross(f);
}

SetPairFamily dual_setpairs(const SetPairFamily& f) {
  SetPairFamily dual;
  dual.ground_size = static_cast<int>(f.pairs.size());
  for (int i = 1; i <= f.ground_size; ++i) {
    Label s, t;
    for (size_t j = 0; j < f.pairs.size(); ++j) {
      if (std::binary_search(f.pairs[j].first.begin(), f.pairs[j].first.end(), i))
        s.push_back(static_cast<int>(j + 1));
      if (std::binary_search(f.pairs[j].second.begin(), f.pairs[j].second.end(), i))
        t.push_back(static_cast<int>(j + 1));
    }
    dual.pairs.emplace_back(std::move(s), std::move(t));
  }
  return dual;
}

using json = nlohmann::ordered_json;

std::string emit_setpairs(const SetPairFamily& f) {
  json doc;
  doc["type"] = "set-pairs";
  doc["ground_size"] = f.ground_size;
  doc["pairs"] = json::array();
  for (const auto& [a, b] : f.pairs) {
    json p;
    p["A"] = a;
    p["B"] = b;
    doc["pairs"].push_back(std::move(p));
  }
  return doc.dump(2);
}

SetPairFamily parse_setpairs(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw parse_error(std::string("parse_setpairs: ") + e.what());
  }
  if (!doc.is_object() || doc.value("type", "") != "set-pairs")
    throw parse_error("parse_setpairs: not a set-pairs document");
  SetPairFamily f;
  try {
    f.ground_size = doc.at("ground_size").get<int>();
    for (const auto& p : doc.at("pairs")) {
      Label a = p.at("A").get<Label>();
      Label b = p.at("B").get<Label>();
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      for (int e : a)
        if (e < 1 || e > f.ground_size)
          throw parse_error("parse_setpairs: element outside ground set");
      for (int e : b)
        if (e < 1 || e > f.ground_size)
          throw parse_error("parse_setpairs: element outside ground set");
      if (intersects(a, b))
        throw parse_error("parse_setpairs: A and B of one pair intersect");
      f.pairs.emplace_back(std::move(a), std::move(b));
    }
  } catch (const json::exception& e) {
    throw parse_error(std::string("parse_setpairs: ") + e.what());
  }
  return f;
}

std::string emit_hadamard(const HadamardMatrix& H) {
  std::string out;
  for (int i = 0; i < H.order; ++i) {
    if (i) out.push_back('\n');
    for (int j = 0; j < H.order; ++j)
      out.push_back(H.entries[i][j] == 1 ? '+' : '-');
  }
  return out;
}

HadamardMatrix parse_hadamard(const std::string& text) {
  std::vector<std::string> lines;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) {
      lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  int n = static_cast<int>(lines.size());
  if (n == 0) throw parse_error("parse_hadamard: empty input");
  HadamardMatrix H;
  H.order = n;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(lines[i].size()) != n)
      throw parse_error("parse_hadamard: not square at line " +
                        std::to_string(i + 1));
    std::vector<int> row(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
      if (lines[i][j] == '+')
        row[j] = 1;
      else if (lines[i][j] == '-')
        row[j] = -1;
      else
        throw parse_error("parse_hadamard: invalid character at line " +
                          std::to_string(i + 1));
    }
    H.entries.push_back(std::move(row));
  }
  H.normalized = true;
  for (int k = 0; k < n; ++k)
    if (H.entries[0][k] != 1 || H.entries[k][0] != 1) H.normalized = false;
  return H;
}

}  // namespace cffwb
