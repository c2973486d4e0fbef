#pragma once

#include <boost/dynamic_bitset.hpp>
#include <optional>
#include <string>
#include <vector>

#include "cffwb/errors.hpp"

namespace cffwb {

using PointSet = boost::dynamic_bitset<>;  // bit j-1 <=> point j

/// Ground set of n points plus an ordered list of blocks.
struct SetSystem {
  int n_points = 0;
  std::vector<PointSet> blocks;  // each of size n_points

  int block_count() const { return static_cast<int>(blocks.size()); }
};

/// A violating (L, M) pair for the CFF test; block indices are 1-based.
struct CffWitness {
  std::vector<int> L;  // r block indices, ascending
  std::vector<int> M;  // w block indices, ascending
  long shortfall = 0;  // d - |residual|, always > 0
};

struct CffResult {
  bool ok = false;
  std::optional<CffWitness> witness;
};

/// Brute-force (r,w;d)-CFF check over all disjoint (L, M) pairs.
/// Returns the lexicographically first violation when one exists.
/// Desk-scale caps: t <= 20, r + w <= 8.
CffResult is_cff(const SetSystem& sys, int r, int w, int d);

/// Incidence-matrix text: one row per block over {0,1}, newline separated.
SetSystem parse_incidence(const std::string& text);
std::string emit_incidence(const SetSystem& sys);

}  // namespace cffwb
