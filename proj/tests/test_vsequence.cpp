#include "doctest.h"

#include <vector>

#include "corrterms/errors.hpp"
#include "corrterms/vsequence.hpp"

using namespace corrterms;

TEST_CASE("construction trims trailing zeros and validates the step law") {
  CHECK(VSequence({2, 2, 1, 1, 0, 0}).values() == std::vector<long long>{2, 2, 1, 1});
  CHECK(VSequence({0, 0}).empty());
  CHECK(VSequence().empty());
  CHECK_THROWS_AS(VSequence({1, 3}), invalid_input);   // increasing
  CHECK_THROWS_AS(VSequence({3, 1}), invalid_input);   // drops by two
  CHECK_THROWS_AS(VSequence({0, -1}), invalid_input);  // negative value
}

TEST_CASE("accessors: at, extended, last_nonzero_index") {
  VSequence v({2, 2, 1, 1});
  CHECK(v.size() == 4);
  CHECK(v.at(0) == 2);
  CHECK(v.at(3) == 1);
  CHECK(v.at(4) == 0);
  CHECK(v.at(100) == 0);
  CHECK_THROWS_AS(v.at(-1), invalid_input);
  CHECK(v.last_nonzero_index() == 3);
  CHECK(VSequence().last_nonzero_index() == -1);
  // extended realizes V_{-m} = V_m + m.
  for (long long m = 0; m <= 6; ++m) CHECK(v.extended(-m) == v.at(m) + m);
  CHECK(v.extended(2) == 1);
}

TEST_CASE("closed-form V-lists of the (2, 2m+1) torus knots") {
  CHECK(v_torus2(0).empty());
  CHECK(v_torus2(2).values() == std::vector<long long>{1, 1});
  CHECK(v_torus2(4).values() == std::vector<long long>{2, 2, 1, 1});
  CHECK(v_torus2(6).values() == std::vector<long long>{3, 3, 2, 2, 1, 1});
  CHECK(v_torus2(8).values() == std::vector<long long>{4, 4, 3, 3, 2, 2, 1, 1});
  // Even m matches the semigroup count; the odd-m closed form is flagged as
  // disputed (it disagrees with the semigroup/homology value at m = 1).
  for (long long m = 2; m <= 8; m += 2) {
    CHECK(v_torus2(m) == semigroup_v_torus(2, 2 * m + 1));
    CHECK_FALSE(v_torus2_is_disputed(m));
  }
  CHECK(v_torus2_is_disputed(3));
  CHECK(v_torus2(3).values() == std::vector<long long>{1});
}

TEST_CASE("semigroup V-sequences of torus knots") {
  CHECK(semigroup_v_torus(2, 3).values() == std::vector<long long>{1});
  CHECK(semigroup_v_torus(2, 5).values() == std::vector<long long>{1, 1});
  CHECK(semigroup_v_torus(2, 9).values() == std::vector<long long>{2, 2, 1, 1});
  CHECK(semigroup_v_torus(2, 9).at(1) == 2);   // V_1(T_{2,9}) = 2
  CHECK(semigroup_v_torus(2, 13).at(0) == 3);  // V_0(T_{2,13}) = 3
  CHECK(semigroup_v_torus(3, 4).values() == std::vector<long long>{1, 1, 1});
  CHECK(semigroup_v_torus(5, 6).at(0) == 3);  // Tr(2)
  CHECK(semigroup_v_torus(7, 8).at(0) == 6);  // Tr(3)
}

TEST_CASE("staircase closed form matches the semigroup oracle") {
  CHECK(v_torus_staircase(3).values() == std::vector<long long>{1, 1, 1});
  CHECK(v_torus_staircase(5).values() ==
        std::vector<long long>{3, 3, 3, 3, 2, 1, 1, 1, 1, 1});
  for (long long n : {3LL, 5LL, 7LL, 9LL}) {
    CHECK(v_torus_staircase(n) == semigroup_v_torus(n, n + 1));
    // Pivots: V_{an} = Tr(d - a) for 0 <= a < d, d = (n-1)/2.
    const long long d = (n - 1) / 2;
    for (long long a = 0; a < d; ++a) {
      const long long tr = (d - a) * (d - a + 1) / 2;
      CHECK(v_torus_staircase(n).at(a * n) == tr);
    }
    CHECK(v_torus_staircase(n).at(d * n) == 0);
  }
  CHECK_THROWS_AS(v_torus_staircase(4), invalid_input);
}

TEST_CASE("min-convolution models connected sums") {
  const VSequence trefoil = semigroup_v_torus(2, 3);
  CHECK(min_convolve(trefoil, trefoil) == semigroup_v_torus(2, 5));
  const VSequence twice = min_convolve(trefoil, trefoil);
  CHECK(min_convolve(twice, twice) == semigroup_v_torus(2, 9));
  // Identity element: the empty (unknot) sequence.
  CHECK(min_convolve(trefoil, VSequence()) == trefoil);
  CHECK(min_convolve(VSequence(), VSequence()).empty());
  // Commutativity on an asymmetric pair.
  const VSequence a = semigroup_v_torus(2, 9);
  const VSequence b = semigroup_v_torus(3, 4);
  CHECK(min_convolve(a, b) == min_convolve(b, a));
}

TEST_CASE("v_sum closed form: frozen values and constraint") {
  CHECK(v_sum(3, 1).values() == std::vector<long long>{2, 2, 1, 1, 1});
  CHECK(v_sum(5, 1).values() ==
        std::vector<long long>{4, 4, 3, 3, 3, 2, 2, 1, 1, 1, 1, 1});
  CHECK(v_sum(5, 2).values() ==
        std::vector<long long>{5, 5, 4, 4, 3, 3, 3, 2, 2, 1, 1, 1, 1, 1});
  // V_0 = V_0(T_{5,6}) + 1 = 4 at (5,1); the top-genus value vanishes
  // (genus = 2k + n(n-1)/2 = 12), with the last unit at l = 11.
  CHECK(v_sum(5, 1).at(0) == 4);
  CHECK(v_sum(5, 1).at(11) == 1);
  CHECK(v_sum(5, 1).at(12) == 0);
  // k = 0 degenerates to the plain staircase.
  CHECK(v_sum(5, 0) == v_torus_staircase(5));
  // 4k <= 2n + 1 is required.
  CHECK_THROWS_AS(v_sum(3, 2), invalid_input);
  CHECK_NOTHROW(v_sum(7, 3));  // 12 <= 15
  CHECK_THROWS_AS(v_sum(7, 4), invalid_input);
}

TEST_CASE("truncated lists") {
  // L_1: unit plateau on {-1, 0, 1}.
  for (long long x = -1; x <= 1; ++x) CHECK(truncated_list(1, x) == 1);
  CHECK(truncated_list(1, 2) == 0);
  CHECK(truncated_list(1, -2) == 0);
  // L_2: 2 on the tripled peak, 1 on |x| in {2, 3}, 0 beyond.
  CHECK(truncated_list(2, 0) == 2);
  CHECK(truncated_list(2, 1) == 2);
  CHECK(truncated_list(2, -1) == 2);
  CHECK(truncated_list(2, 2) == 1);
  CHECK(truncated_list(2, 3) == 1);
  CHECK(truncated_list(2, 4) == 0);
  CHECK(truncated_list(2, -3) == 1);
  CHECK(truncated_list(2, -4) == 0);
  // Symmetry.
  for (long long k = 1; k <= 4; ++k)
    for (long long x = 0; x <= 2 * k + 2; ++x)
      CHECK(truncated_list(k, x) == truncated_list(k, -x));
  // Truncation zeroes everything strictly left of -t.
  CHECK(truncated_list_t(2, 1, -2) == 0);
  CHECK(truncated_list_t(2, 1, -1) == 2);
  CHECK(truncated_list_t(2, 3, -3) == 1);
  CHECK(truncated_list_t(2, 3, -4) == 0);
  CHECK(truncated_list_t(2, 0, 0) == 2);
  CHECK(truncated_list_t(2, 0, -1) == 0);
}

TEST_CASE("monotonicity invariant holds on every builder output") {
  auto check_steps = [](const VSequence& v) {
    for (long long l = 0; l < v.size(); ++l) {
      CHECK(v.at(l) >= v.at(l + 1));
      CHECK(v.at(l + 1) >= v.at(l) - 1);
      CHECK(v.at(l) >= 0);
    }
  };
  for (long long m = 0; m <= 8; m += 2) check_steps(v_torus2(m));
  for (long long n : {3LL, 5LL, 7LL}) check_steps(v_torus_staircase(n));
  check_steps(v_sum(5, 2));
  check_steps(min_convolve(semigroup_v_torus(2, 9), semigroup_v_torus(5, 6)));
}
