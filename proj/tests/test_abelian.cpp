#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "corrterms/abelian.hpp"
#include "corrterms/errors.hpp"

using namespace corrterms;

TEST_CASE("primality helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(9));
  CHECK(is_prime_power(8));
  CHECK(is_prime_power(9));
  CHECK_FALSE(is_prime_power(12));
  CHECK_FALSE(is_prime_power(1));
}

TEST_CASE("group arithmetic reduces coordinates per factor") {
  FiniteAbelianGroup g({5, 5});
  CHECK(g.order() == 25);
  CHECK(g.rank() == 2);
  CHECK(g.describe() == "Z_5 + Z_5");
  CHECK(g.add({3, 4}, {4, 4}) == GroupElement{2, 3});
  CHECK(g.neg({1, 0}) == GroupElement{4, 0});
  CHECK(g.scalar_mul(7, {1, 2}) == GroupElement{2, 4});
  CHECK(g.is_zero(g.zero()));
  CHECK(g.element_order({0, 0}) == 1);
  CHECK(g.element_order({1, 0}) == 5);
  CHECK(g.element_order({2, 3}) == 5);
  CHECK(g.basis(1) == GroupElement{0, 1});

  FiniteAbelianGroup z4({4});
  CHECK(z4.element_order({1}) == 4);
  CHECK(z4.element_order({2}) == 2);

  CHECK(FiniteAbelianGroup::trivial().order() == 1);
  CHECK(FiniteAbelianGroup::elementary(3, 4).cyclic_orders() ==
        std::vector<long long>{3, 3, 3, 3});
}

TEST_CASE("all_elements enumerates the full group once") {
  FiniteAbelianGroup g({2, 3});
  const auto all = g.all_elements();
  CHECK(all.size() == 6);
  std::set<GroupElement> distinct(all.begin(), all.end());
  CHECK(distinct.size() == 6);
}

TEST_CASE("direct sums concatenate coordinates") {
  FiniteAbelianGroup a({5, 5});
  FiniteAbelianGroup b({3});
  FiniteAbelianGroup s = direct_sum(a, b);
  CHECK(s.cyclic_orders() == std::vector<long long>{5, 5, 3});
  CHECK(join_elements(GroupElement{1, 2}, GroupElement{2}) == GroupElement{1, 2, 2});
}

TEST_CASE("subgroups store sorted closures") {
  FiniteAbelianGroup g({5, 5});
  Subgroup line = Subgroup::generated(g, {GroupElement{1, 2}});
  CHECK(line.order() == 5);
  CHECK(line.contains({2, 4}));
  CHECK(line.contains({0, 0}));
  CHECK_FALSE(line.contains({1, 1}));
  CHECK(std::is_sorted(line.elements().begin(), line.elements().end()));

  CHECK(Subgroup::trivial(g).order() == 1);

  // from_elements accepts exactly the closed sets.
  CHECK(Subgroup::from_elements(g, line.elements()).order() == 5);
  CHECK_THROWS_AS(Subgroup::from_elements(g, {GroupElement{0, 0}, GroupElement{1, 2}}),
                  invariant_error);
}

TEST_CASE("isomorphism compares element-order multisets") {
  FiniteAbelianGroup g({5, 5});
  CHECK(is_isomorphic(Subgroup::generated(g, {GroupElement{1, 0}}),
                      Subgroup::generated(g, {GroupElement{0, 1}})));
  FiniteAbelianGroup mixed({4, 2, 2});
  // Z_4 (orders 1,2,4,4) vs Z_2 + Z_2 (orders 1,2,2,2): same size, different type.
  Subgroup cyclic4 = Subgroup::generated(mixed, {GroupElement{1, 0, 0}});
  Subgroup klein = Subgroup::generated(mixed, {GroupElement{0, 1, 0}, GroupElement{0, 0, 1}});
  CHECK(cyclic4.order() == 4);
  CHECK(klein.order() == 4);
  CHECK_FALSE(is_isomorphic(cyclic4, klein));
}

TEST_CASE("intersection and sum of subgroups") {
  FiniteAbelianGroup g({5, 5});
  Subgroup diag = Subgroup::generated(g, {GroupElement{1, 1}});
  Subgroup anti = Subgroup::generated(g, {GroupElement{1, 4}});
  CHECK(intersection(diag, anti).order() == 1);
  CHECK(subgroup_sum_of(diag, anti).order() == 25);
  CHECK(intersection(diag, diag) == diag);
}

TEST_CASE("order-p subgroup enumeration covers the p-torsion exactly once") {
  FiniteAbelianGroup g5(std::vector<long long>{5, 5});
  auto lines5 = subgroups_of_order_p(g5, 5);
  CHECK(lines5.size() == 6);
  std::set<GroupElement> covered;
  for (const Subgroup& h : lines5) {
    CHECK(h.order() == 5);
    for (const auto& e : h.elements()) covered.insert(e);
  }
  CHECK(covered.size() == 25);  // 6 lines * 4 nonzero elements + identity
  // Pairwise distinct with trivial pairwise intersections.
  for (size_t i = 0; i < lines5.size(); ++i)
    for (size_t j = i + 1; j < lines5.size(); ++j) {
      CHECK_FALSE(lines5[i] == lines5[j]);
      CHECK(intersection(lines5[i], lines5[j]).order() == 1);
    }

  CHECK(subgroups_of_order_p(FiniteAbelianGroup({5}), 5).size() == 1);
  CHECK(subgroups_of_order_p(FiniteAbelianGroup({4, 3}), 3).size() == 1);
  CHECK(subgroups_of_order_p(FiniteAbelianGroup::elementary(3, 4), 3).size() == 40);

  // Mixed torsion: the 3-torsion of Z_9 + Z_3 is Z_3 + Z_3.
  auto mixed = subgroups_of_order_p(FiniteAbelianGroup({9, 3}), 3);
  CHECK(mixed.size() == 4);
  std::set<GroupElement> torsion;
  for (const Subgroup& h : mixed)
    for (const auto& e : h.elements()) torsion.insert(e);
  CHECK(torsion.size() == 9);

  CHECK_THROWS_AS(subgroups_of_order_p(g5, 6), invalid_input);
}

TEST_CASE("rp_count reads the primary decomposition") {
  CHECK(rp_count(FiniteAbelianGroup({5, 5}), 5) == 2);
  CHECK(rp_count(FiniteAbelianGroup({9, 3, 4}), 3) == 2);
  CHECK(rp_count(FiniteAbelianGroup({7}), 5) == 0);
  CHECK(rp_count(FiniteAbelianGroup::elementary(13, 6), 13) == 6);
}

TEST_CASE("FpSpan tracks independent lines") {
  FiniteAbelianGroup g({5, 5});
  FpSpan span(g, 5);
  CHECK(span.ambient_rank() == 2);
  CHECK(span.rank() == 0);
  CHECK(span.add({1, 1}));
  CHECK_FALSE(span.add({2, 2}));  // same line
  CHECK(span.add({1, 4}));
  CHECK(span.rank() == 2);
  CHECK_FALSE(span.add({3, 0}));  // already spanned

  // p-torsion coordinates inside a larger factor: 3*(Z_9) is the 3-torsion line.
  FiniteAbelianGroup m({9, 3});
  FpSpan sm(m, 3);
  CHECK(sm.ambient_rank() == 2);
  CHECK(sm.add({3, 0}));
  CHECK(sm.add({0, 1}));
  CHECK(sm.rank() == 2);
}
