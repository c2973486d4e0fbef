#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <numeric>

#include "cffwb/combinatorics.hpp"
#include "doctest.h"

using namespace cffwb;

namespace {

// Independent oracle: count vote sequences with r_i > k * w_i at every prefix.
Count ballot_by_enumeration(long r, long w, const Ratio& k) {
  Count total = 0;
  // iterate over all C(r+w, r) sequences via bitmask (A = 1)
  long n = r + w;
  REQUIRE(n <= 22);
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    if (static_cast<long>(__builtin_popcountl(mask)) != r) continue;
    long ri = 0, wi = 0;
    bool good = true;
    for (long p = 0; p < n; ++p) {
      (mask >> p) & 1 ? ++ri : ++wi;
      if (Ratio(ri) <= k * wi) {
        good = false;
        break;
      }
    }
    if (good) ++total;
  }
  return total;
}

}  // namespace

TEST_CASE("binomial convention") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(4, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(-1, -1) == 0);
}

TEST_CASE("binomial satisfies Pascal's rule") {
  for (long n = 1; n <= 20; ++n)
    for (long k = 1; k < n; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(4) == 24);
  CHECK(factorial(10) == 3628800);
}

TEST_CASE("spencer_R small values") {
  CHECK(spencer_R(2) == 2);
  CHECK(spencer_R(3) == 3);
  CHECK(spencer_R(4) == 4);
  CHECK(spencer_R(5) == 4);
  CHECK(spencer_R(6) == 4);
  CHECK(spencer_R(7) == 5);
}

TEST_CASE("spencer_R nondecreasing and inverts the central binomial") {
  int prev = 0;
  for (long t = 1; t <= 2000; ++t) {
    int v = spencer_R(t);
    CHECK(v >= prev);
    prev = v;
  }
  for (int c = 2; c <= 12; ++c) {
    Count central = binomial(c, c / 2);
    CHECK(spencer_R(central.get_si()) == c);
  }
}

TEST_CASE("lattice path enumeration") {
  auto one = enumerate_lattice_paths(1, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].to_string() == "RU");

  auto two_three = enumerate_lattice_paths(2, 3);
  REQUIRE(two_three.size() == 2);
  CHECK(two_three[0].to_string() == "RRUUU");
  CHECK(two_three[1].to_string() == "RURUU");

  auto one_two = enumerate_lattice_paths(1, 2);
  REQUIRE(one_two.size() == 1);
  CHECK(one_two[0].to_string() == "RUU");

  CHECK_THROWS_AS(enumerate_lattice_paths(0, 1), domain_error);
  CHECK_THROWS_AS(enumerate_lattice_paths(2, -1), domain_error);
}

TEST_CASE("lattice paths are lexicographically ordered") {
  auto paths = enumerate_lattice_paths(3, 5);
  for (size_t i = 1; i < paths.size(); ++i)
    CHECK(paths[i - 1].to_string() < paths[i].to_string());
}

TEST_CASE("bizley_count") {
  CHECK(bizley_count(2, 3) == 2);
  CHECK(bizley_count(1, 1) == 1);
  CHECK(bizley_count(3, 4) == 5);
  CHECK_THROWS_AS(bizley_count(2, 2), inapplicable_error);
  CHECK_THROWS_AS(bizley_count(4, 6), inapplicable_error);
}

TEST_CASE("bizley formula matches enumeration for coprime pairs") {
  for (int i = 1; i <= 9; ++i)
    for (int j = 1; i + j <= 10; ++j) {
      if (std::gcd(i, j) != 1) continue;
      CHECK(bizley_count(i, j) ==
            Count(static_cast<long>(enumerate_lattice_paths(i, j).size())));
    }
}

TEST_CASE("ballot_count") {
  CHECK(ballot_count(2, 1, Ratio(1)) == 1);
  CHECK(ballot_count(3, 1, Ratio(2)) == 1);
  CHECK(ballot_count(2, 2, Ratio(3, 2)) == 0);
}

TEST_CASE("integer-k ballot formula matches enumeration") {
  for (long r = 1; r <= 9; ++r)
    for (long w = 0; r + w <= 10; ++w)
      for (long k = 1; k <= 3; ++k) {
        if (r <= k * w) continue;
        CHECK(ballot_count(r, w, Ratio(k)) ==
              ballot_by_enumeration(r, w, Ratio(k)));
      }
}

TEST_CASE("ballot numbers count lattice paths: B(r, w-1; r/w) = |L(r,w)|") {
  for (long r = 1; r <= 9; ++r)
    for (long w = 1; r + w <= 10; ++w)
      CHECK(ballot_count(r, w - 1, Ratio(r, w)) ==
            Count(static_cast<long>(enumerate_lattice_paths(
                static_cast<int>(r), static_cast<int>(w)).size())));
}
