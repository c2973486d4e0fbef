#include "cffwb/combinatorics.hpp"

#include <numeric>

namespace cffwb {

Count binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Count result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

Count factorial(long n) {
  if (n < 0) throw domain_error("factorial: negative argument");
  Count result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

int spencer_R(long t) {
  if (t < 1) throw domain_error("spencer_R: t must be >= 1");
  int c = 0;
  while (binomial(c, c / 2) < t) ++c;
  return c;
}

std::string LatticePath::to_string() const {
  std::string s;
  s.reserve(steps.size());
  for (Step st : steps) s.push_back(st == Step::Right ? 'R' : 'U');
  return s;
}

namespace {

void extend_paths(int i, int j, int x, int y, std::vector<Step>& steps,
                  std::vector<LatticePath>& out) {
  if (x == i && y == j) {
    out.push_back(LatticePath{steps});
    return;
  }
  // Right first keeps the output lexicographic (Right < Up).
  if (x < i) {
    int nx = x + 1;
    bool interior = !(nx == i && y == j);
    // strictness y*i < x*j, cross-multiplied; endpoints exempt
    if (!interior || static_cast<long>(y) * i < static_cast<long>(nx) * j) {
      steps.push_back(Step::Right);
      extend_paths(i, j, nx, y, steps, out);
      steps.pop_back();
    }
  }
  if (y < j) {
    int ny = y + 1;
    bool interior = !(x == i && ny == j);
    if (!interior || static_cast<long>(ny) * i < static_cast<long>(x) * j) {
      steps.push_back(Step::Up);
      extend_paths(i, j, x, ny, steps, out);
      steps.pop_back();
    }
  }
}

}  // namespace

std::vector<LatticePath> enumerate_lattice_paths(int i, int j) {
  if (i < 1 || j < 1) throw domain_error("enumerate_lattice_paths: grid must be positive");
  std::vector<LatticePath> out;
  std::vector<Step> steps;
  steps.reserve(static_cast<size_t>(i) + j);
  extend_paths(i, j, 0, 0, steps, out);
  return out;
}

Count bizley_count(int i, int j) {
  if (i < 1 || j < 1) throw domain_error("bizley_count: i, j must be >= 1");
  if (std::gcd(i, j) != 1)
    throw inapplicable_error("bizley_count: formula requires coprime i, j");
  Count numer = binomial(i + j, i);
  Count q, rem;
  mpz_tdiv_qr_ui(q.get_mpz_t(), rem.get_mpz_t(), numer.get_mpz_t(),
                 static_cast<unsigned long>(i + j));
  if (rem != 0) throw domain_error("bizley_count: C(i+j,i) not divisible by i+j");
  return q;
}

namespace {

// Prefix condition: r_i * den > num * w_i at every counted vote.
Count count_good_sequences(long r, long w, const Count& num, const Count& den,
                           long ri, long wi) {
  if (ri == r && wi == w) return 1;
  Count total = 0;
  if (ri < r) {
    if (Count((ri + 1) * den) > Count(num * wi))
      total += count_good_sequences(r, w, num, den, ri + 1, wi);
  }
  if (wi < w) {
    if (Count(ri * den) > Count(num * (wi + 1)))
      total += count_good_sequences(r, w, num, den, ri, wi + 1);
  }
  return total;
}

}  // namespace

Count ballot_count(long r, long w, const Ratio& k) {
  if (r < 0 || w < 0) throw domain_error("ballot_count: r, w must be >= 0");
  if (k <= 0) throw domain_error("ballot_count: k must be positive");
  Count num = k.get_num();
  Count den = k.get_den();
  // no good sequence when r <= k*w
  if (Count(r) * den <= num * Count(w)) return 0;
  if (den == 1 && num.fits_slong_p()) {
    long ki = num.get_si();
    // (r - kw)/(r + w) * C(r+w, r), exact for positive integer k
    Count numer = Count(r - ki * w) * binomial(r + w, r);
    Count q, rem;
    mpz_tdiv_qr_ui(q.get_mpz_t(), rem.get_mpz_t(), numer.get_mpz_t(),
                   static_cast<unsigned long>(r + w));
    if (rem != 0) throw domain_error("ballot_count: closed formula not integral");
    return q;
  }
  if (r + w > 22)
    throw budget_error("ballot_count: enumeration capped at r + w <= 22");
  return count_good_sequences(r, w, num, den, 0, 0);
}

}  // namespace cffwb
