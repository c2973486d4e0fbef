#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cffwb/cover.hpp"
#include "cffwb/setsystem.hpp"

namespace cffwb {

/// Ordered list of disjoint set pairs (A_i, B_i) over a ground set [h].
struct SetPairFamily {
  int ground_size = 0;
  std::vector<std::pair<Label, Label>> pairs;  // sorted element lists
};

/// +-1 matrix with pairwise orthogonal rows.
struct HadamardMatrix {
  int order = 0;
  std::vector<std::vector<int>> entries;  // entries in {+1, -1}
  bool normalized = false;                // first row and column all +1
};

/// CFF incidence matrix -> biclique cover of I_t(r,w), one part per point:
/// part j is (all r-subsets of A_j, all w-subsets of A_j complement) where
/// A_j is the set of blocks containing point j.  The returned cover carries
/// the claimed level d (valid whenever the input is an (r,w;d)-CFF).
BicliqueCover cff_to_cover(const SetSystem& sys, int r, int w, int d = 1);

/// Biclique cover of I_t(r,w) (or the K-minus / K_t analog) -> set system
/// with one point per part; point i's column is the indicator of the union
/// of labels in X_i.  Requires validate_cover to pass at the cover's level.
SetSystem cover_to_cff(const BicliqueCover& c);

/// True iff an order-n Hadamard matrix is reachable by the implemented
/// constructions (Sylvester doubling, Paley type I, doubling).
bool hadamard_constructible(int n);

/// Normalized Hadamard matrix of order n, or unsupported_error.
HadamardMatrix hadamard_matrix(int n);

/// Cover of K-minus_{4d-1,4d-1} at level d = order/4 from a normalized
/// Hadamard matrix: drop the first row and column; column j yields the
/// biclique ({v_i : h_ij = +1}, {v'_i : h_ij = -1}).
BicliqueCover hadamard_cover(const HadamardMatrix& H);

/// Symmetric-group orbit of one maximum-edge biclique of I_t(r,w): t! parts,
/// every edge covered exactly B * t! / |E| times.
BicliqueCover orbit_cover(int t, int r, int w);

/// The chain family (empty,{1}), ({1},{2}), ..., ({1..r-w+1},empty) on
/// ground set [r-w+1]; weakly cross-intersecting, size r-w+2.
SetPairFamily chain_setpairs(int r, int w);

enum class UniformSide { Left, Right };

/// All (A, M \ A) over M = [s] with |A| in the admissible range; weakly
/// cross-intersecting.
SetPairFamily uniform_setpairs(int s, int r, int w, UniformSide mode);

struct SetPairCheck {
  bool ok = false;
  std::optional<std::pair<int, int>> witness;  // first violating (i, j), 1-based
};

/// Weak cross-intersection: (A_i cap B_j) union (A_j cap B_i) nonempty.
SetPairCheck setpairs_weak(const SetPairFamily& f);
/// Cross-intersection: both A_i cap B_j and A_j cap B_i nonempty.
SetPairCheck setpairs_cross(const SetPairFamily& f);
/// (r,w)-system: cross-intersecting with |A_i| = r, |B_i| = w throughout.
SetPairCheck setpairs_rw_system(const SetPairFamily& f, int r, int w);

/// Dual family on ground set [g]: S_i = {j : i in A_j}, T_i = {j : i in B_j}.
SetPairFamily dual_setpairs(const SetPairFamily& f);

std::string emit_setpairs(const SetPairFamily& f);
SetPairFamily parse_setpairs(const std::string& text);

std::string emit_hadamard(const HadamardMatrix& H);
HadamardMatrix parse_hadamard(const std::string& text);

}  // namespace cffwb
