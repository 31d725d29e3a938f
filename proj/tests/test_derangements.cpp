#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "npd/derangements.hpp"

using namespace npd;

TEST_CASE("derangement reports for small actions") {
  auto a5 = derangements(GroupAction::natural(5, Group::An));
  CHECK(a5.count == 24);
  CHECK(a5.proportion == Rat(2, 5));
  CHECK(a5.class_closed);

  auto a4 = derangements(GroupAction::natural(4, Group::An));
  CHECK(a4.count == 3);
  CHECK(a4.proportion == Rat(1, 4));

  auto s4 = derangements(GroupAction::natural(4, Group::Sn));
  CHECK(s4.count == 9);
  CHECK(s4.count == sn_derangement_count(4));

  // 2-subset action of A_6: still transitive and class-closed.
  auto a6p = derangements(GroupAction::k_subsets(6, Group::An, 2));
  CHECK(a6p.class_closed);
  CHECK(a6p.proportion > 0);
  CHECK(a6p.proportion < 1);
}

TEST_CASE("exact A_n derangement counts and the Bonferroni sandwich") {
  CHECK(an_derangement_count(4) == 3);
  CHECK(an_derangement_count(5) == 24);
  for (int n = 4; n <= 8; ++n) {
    auto rep = derangements(GroupAction::natural(n, Group::An));
    CHECK(rep.count == an_derangement_count(n));
  }
  for (int n = 5; n <= 12; ++n) CHECK(strong_alt_betweenness(n));
  // n = 9 proportion is within 0.01 of 1/e.
  double prop = static_cast<double>(
      Rat(an_derangement_count(9), group_order(9, Group::An)));
  CHECK(std::abs(prop - std::exp(-1.0)) < 0.01);
}

TEST_CASE("three-cycle representation ratio increases toward e") {
  // Frozen against a full |D| x |D| pair scan: 543 representations of (0 1 2)
  // in A_7 with |D| = 930.
  Rat r7 = three_cycle_representation_ratio(7);
  CHECK(r7 == Rat(BigInt(543) * 2520, BigInt(930) * 930));
  // The limit is e, approached from below with an O(1/n) defect; at this
  // scale only the monotone trend is checkable.
  Rat r8 = three_cycle_representation_ratio(8);
  CHECK(r7 < r8);
  CHECK(static_cast<double>(r8) < std::exp(1.0));
}

TEST_CASE("ell sets and the stabilizer criterion") {
  CHECK(ell_set(12) == std::vector<int>({9, 11}));
  CHECK(ell_set(16) == std::vector<int>({13, 15}));
  CHECK(ell_set(17) == std::vector<int>({13, 15, 17}));

  auto a7 = derangement_ell_criterion(GroupAction::natural(7, Group::An));
  REQUIRE(a7.has_value());
  CHECK(*a7 == 7);
  auto a8 = derangement_ell_criterion(GroupAction::natural(8, Group::An));
  CHECK_FALSE(a8.has_value());
  auto a7p = derangement_ell_criterion(GroupAction::k_subsets(7, Group::An, 2));
  REQUIRE(a7p.has_value());
  CHECK(*a7p == 7);
}

TEST_CASE("two ell-cycle factorization") {
  // Identity and an explicit 5-cycle.
  Permutation g5 = Permutation::from_cycles(5, {{0, 1, 2, 3, 4}});
  auto [x1, x2] = two_ell_cycle_factorization(g5, 5, 1);
  CHECK(compose(x1, x2) == g5);
  CHECK(cycle_type(x1) == Partition({5}));
  CHECK(cycle_type(x2) == Partition({5}));

  // Exhaustive over A_6 with ell = 5.
  for_each_element(6, Group::An, [](const Permutation& g) {
    auto [y1, y2] = two_ell_cycle_factorization(g, 5, 7);
    CHECK(compose(y1, y2) == g);
    CHECK(cycle_type(y1).part(0) == 5);
    CHECK(cycle_type(y2).part(0) == 5);
  });
  // ell = 3 is below floor(3*6/4) = 4 for m = 6.
  Permutation g6 = Permutation::from_cycles(6, {{0, 1, 2}});
  CHECK_THROWS_AS(two_ell_cycle_factorization(g6, 3, 1), std::invalid_argument);
}

TEST_CASE("two-derangement decomposition: exhaustive small n") {
  for (int n = 5; n <= 7; ++n) {
    for_each_element(n, Group::An, [&](const Permutation& g) {
      auto [d1, d2] = two_derangement_decompose(g, 42);
      CHECK(compose(d1, d2) == g);
      CHECK(num_fixed_points(d1) == 0);
      CHECK(num_fixed_points(d2) == 0);
      CHECK(is_even(d1));
      CHECK(is_even(d2));
    });
  }
}

TEST_CASE("two-derangement decomposition: case tree at n = 12, 14") {
  // Representative cycle types hitting each branch of the even-n tree.
  auto check_type = [](int n, std::vector<int> type) {
    Permutation g = class_representative(n, Partition(type));
    auto [d1, d2] = two_derangement_decompose(g, 13);
    CHECK(compose(d1, d2) == g);
    CHECK(num_fixed_points(d1) == 0);
    CHECK(num_fixed_points(d2) == 0);
  };
  check_type(12, {3, 1, 1, 1, 1, 1, 1, 1, 1, 1});    // many fixed points (b1)
  check_type(12, {5, 4, 2, 1});                       // odd cycle split (b2)
  check_type(12, {7, 5});                           // all odd cycles
  check_type(12, {11, 1});                            // explicit formula 1
  check_type(12, {10, 2});                            // explicit formula 2
  check_type(12, {8, 4});                             // g^2 * g^-1
  check_type(12, {4, 4, 2, 2});                       // even-cycle pairing (b3)
  check_type(14, {6, 4, 2, 2});
  check_type(14, {13, 1});
  check_type(14, {12, 2});
  check_type(14, {3, 3, 2, 2, 2, 2});
  // Random sample over A_12: the tree must never fall back.
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<int> img(12);
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    Permutation g(img);
    if (!is_even(g)) continue;
    auto [d1, d2] = two_derangement_decompose(g, trial);
    CHECK(compose(d1, d2) == g);
    CHECK(num_fixed_points(d1) == 0);
    CHECK(num_fixed_points(d2) == 0);
  }
}

TEST_CASE("D squared covers the group") {
  CHECK(verify_d_squared(GroupAction::natural(5, Group::An)).all_covered);
  CHECK(verify_d_squared(GroupAction::natural(7, Group::An)).all_covered);
  CHECK(verify_d_squared(GroupAction::k_subsets(6, Group::An, 2)).all_covered);
}
