#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "cffwb/errors.hpp"

namespace cffwb {

/// Arbitrary-precision nonnegative count.
using Count = mpz_class;

/// Exact rational, always kept in lowest terms with positive denominator.
using Ratio = mpq_class;

/// C(n, k) with the zero convention: 0 for k < 0, n < 0, or k > n.
Count binomial(long n, long k);

/// n! for n >= 0.
Count factorial(long n);

/// Minimum c with C(c, floor(c/2)) >= t.  This is the minimum size of a
/// strongly separating system on [t].
int spencer_R(long t);

enum class Step : unsigned char { Right, Up };

/// Monotone path on an i x j grid staying strictly below the diagonal
/// y = (j/i) x at every interior point.
struct LatticePath {
  std::vector<Step> steps;  // exactly i Rights and j Ups

  std::string to_string() const;  // "RRUUU" style
};

/// All members of L(i, j) in lexicographic step order (Right < Up).
std::vector<LatticePath> enumerate_lattice_paths(int i, int j);

/// |L(i, j)| = C(i+j, i) / (i+j), valid only for coprime i, j.
Count bizley_count(int i, int j);

/// Number of vote sequences (r votes for A, w for B) with r_i > k * w_i at
/// every prefix.  Closed formula for positive integer k, exhaustive
/// enumeration otherwise (capped at r + w <= 22).
Count ballot_count(long r, long w, const Ratio& k);

}  // namespace cffwb
