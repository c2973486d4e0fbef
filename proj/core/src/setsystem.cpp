#include "cffwb/setsystem.hpp"

#include <algorithm>
#include <functional>

namespace cffwb {

namespace {

// Lexicographic k-combinations of `items`; visit returns false to stop.
bool for_each_combination(const std::vector<int>& items, int k,
                          const std::function<bool(const std::vector<int>&)>& visit) {
  int n = static_cast<int>(items.size());
  if (k > n) return true;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  std::vector<int> current(k);
  while (true) {
    for (int i = 0; i < k; ++i) current[i] = items[idx[i]];
    if (!visit(current)) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

CffResult is_cff(const SetSystem& sys, int r, int w, int d) {
  int t = sys.block_count();
  if (r < 1 || w < 1 || d < 1) throw domain_error("is_cff: r, w, d must be >= 1");
  if (r + w > t) throw domain_error("is_cff: r + w must be <= block count");
  if (t > 20 || r + w > 8)
    throw budget_error("is_cff: verifier capped at t <= 20, r + w <= 8");

  std::vector<int> all(t);
  for (int i = 0; i < t; ++i) all[i] = i + 1;

  CffResult result;
  result.ok = true;
  for_each_combination(all, r, [&](const std::vector<int>& L) {
    PointSet inter(static_cast<size_t>(sys.n_points));
    inter.set();
    for (int b : L) inter &= sys.blocks[b - 1];
    std::vector<int> rest;
    rest.reserve(t - r);
    for (int i = 1; i <= t; ++i)
      if (!std::binary_search(L.begin(), L.end(), i)) rest.push_back(i);
    return for_each_combination(rest, w, [&](const std::vector<int>& M) {
      PointSet residual = inter;
      for (int b : M) residual -= sys.blocks[b - 1];
      long got = static_cast<long>(residual.count());
      if (got < d) {
        result.ok = false;
        result.witness = CffWitness{L, M, d - got};
        return false;
      }
      return true;
    });
  });
  return result;
}

SetSystem parse_incidence(const std::string& text) {
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
  // tolerate a single trailing newline
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw parse_error("parse_incidence: empty input");

  size_t width = lines[0].size();
  SetSystem sys;
  sys.n_points = static_cast<int>(width);
  for (size_t li = 0; li < lines.size(); ++li) {
    const std::string& line = lines[li];
    if (line.size() != width)
      throw parse_error("parse_incidence: ragged row at line " +
                        std::to_string(li + 1));
    PointSet block(width);
    for (size_t j = 0; j < width; ++j) {
      if (line[j] == '1')
        block.set(j);
      else if (line[j] != '0')
        throw parse_error("parse_incidence: invalid character at line " +
                          std::to_string(li + 1));
    }
    sys.blocks.push_back(std::move(block));
  }
  return sys;
}

std::string emit_incidence(const SetSystem& sys) {
  std::string out;
  out.reserve(static_cast<size_t>(sys.block_count()) * (sys.n_points + 1));
  for (int i = 0; i < sys.block_count(); ++i) {
    if (i) out.push_back('\n');
    for (int j = 0; j < sys.n_points; ++j)
      out.push_back(sys.blocks[i].test(static_cast<size_t>(j)) ? '1' : '0');
  }
  return out;
}

}  // namespace cffwb
