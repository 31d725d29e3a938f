#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "npd/class_products.hpp"

using namespace npd;

namespace {

int find_class(const std::vector<ConjugacyClassSn>& classes,
               const Partition& type, int skip = 0) {
  for (int i = 0; i < static_cast<int>(classes.size()); ++i)
    if (classes[i].type == type && skip-- == 0) return i;
  throw std::logic_error("class not found");
}

std::vector<Permutation> class_elements(int n, Group g, int cls) {
  std::vector<ConjugacyClassSn> classes = conjugacy_classes(n, g);
  std::vector<Permutation> out;
  for_each_element(n, g, [&](const Permutation& s) {
    if (class_index_of(classes, s, g) == cls) out.push_back(s);
  });
  return out;
}

std::vector<Permutation> all_elements(int n, Group g) {
  std::vector<Permutation> out;
  for_each_element(n, g, [&](const Permutation& s) { out.push_back(s); });
  return out;
}

}  // namespace

TEST_CASE("frobenius_count: S_3 hand examples") {
  CharacterTable t = sn_character_table(3);
  int e = t.identity_class;
  int transp = find_class(t.classes, Partition({2, 1}));
  int three = find_class(t.classes, Partition({3}));

  CHECK(frobenius_count(t, {{transp, transp}, e}) == 3);
  CHECK(frobenius_count(t, {{transp, transp}, three}) == 3);

  // k = 1: membership indicator.
  CHECK(frobenius_count(t, {{transp}, transp}) == 1);
  CHECK(frobenius_count(t, {{transp}, e}) == 0);

  CHECK_THROWS_AS(frobenius_count(t, {{99, 0}, 0}), InvalidClass);
  CHECK_THROWS_AS(frobenius_count(t, {{}, 0}), std::invalid_argument);
}

TEST_CASE("bruteforce_count: hand examples") {
  // A_4 double transpositions: the three involutions square to e.
  std::vector<Permutation> dt = class_elements(4, Group::An,
      find_class(conjugacy_classes(4, Group::An), Partition({2, 2})));
  REQUIRE(dt.size() == 3);
  CHECK(bruteforce_count({dt, dt}, Permutation::identity(4)) == 3);

  // All 24 five-cycles of A_5 pair with their inverses.
  std::vector<Permutation> fives;
  for (const Permutation& s : all_elements(5, Group::An))
    if (cycle_type(s) == Partition({5})) fives.push_back(s);
  REQUIRE(fives.size() == 24);
  CHECK(bruteforce_count({fives, fives}, Permutation::identity(5)) == 24);

  // k = 3 convolution path agrees with a direct triple count on S_3.
  std::vector<Permutation> s3 = all_elements(3, Group::Sn);
  CHECK(bruteforce_count({s3, s3, s3}, Permutation::identity(3)) == 36);
}

TEST_CASE("frobenius_count equals brute force on all class triples, n <= 6") {
  struct Case { int n; Group g; };
  for (Case gc : {Case{3, Group::Sn}, Case{4, Group::Sn}, Case{5, Group::Sn},
                  Case{4, Group::An}, Case{5, Group::An}, Case{6, Group::An}}) {
    CharacterTable t = gc.g == Group::Sn ? sn_character_table(gc.n)
                                         : an_character_table(gc.n);
    std::vector<ConjugacyClassSn> classes = conjugacy_classes(gc.n, gc.g);
    const int k = static_cast<int>(classes.size());

    std::vector<std::vector<Permutation>> members(k);
    for_each_element(gc.n, gc.g, [&](const Permutation& s) {
      members[class_index_of(classes, s, gc.g)].push_back(s);
    });

    for (int c1 = 0; c1 < k; ++c1)
      for (int c2 = 0; c2 < k; ++c2) {
        // Tally products over the whole pair set once per (c1, c2); the
        // per-element Frobenius count is the class tally over the class size.
        std::vector<BigInt> tally(k, 0);
        for (const Permutation& s : members[c1])
          for (const Permutation& u : members[c2])
            tally[class_index_of(classes, compose(s, u), gc.g)] += 1;
        for (int c = 0; c < k; ++c) {
          BigInt fc = frobenius_count(t, {{c1, c2}, c});
          CHECK(fc * classes[c].class_size == tally[c]);
        }
      }
  }
}

TEST_CASE("frobenius_count: symmetric under permuting factors at target e") {
  for (int n = 3; n <= 5; ++n) {
    CharacterTable t = sn_character_table(n);
    const int k = t.num_classes();
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> cs = {static_cast<int>(rng() % k),
                             static_cast<int>(rng() % k),
                             static_cast<int>(rng() % k)};
      BigInt base = frobenius_count(t, {cs, t.identity_class});
      std::sort(cs.begin(), cs.end());
      do {
        CHECK(frobenius_count(t, {cs, t.identity_class}) == base);
      } while (std::next_permutation(cs.begin(), cs.end()));
    }
  }
}

TEST_CASE("class_product_cover") {
  // The two half classes of 5-cycles in A_5: a same-half square misses the
  // (2,2,1) class entirely (brute-force verified), while the mixed product
  // covers every non-identity class.
  CharacterTable a5 = an_character_table(5);
  int f1 = find_class(a5.classes, Partition({5}), 0);
  int f2 = find_class(a5.classes, Partition({5}), 1);
  CoverReport same = class_product_cover(a5, f1, f1);
  CHECK_FALSE(same.cover_nontrivial);
  CHECK(same.counts[find_class(a5.classes, Partition({2, 2, 1}))] == 0);
  CHECK(class_product_cover(a5, f1, f2).cover_nontrivial);
  CHECK(class_product_cover(a5,
                            find_class(a5.classes, Partition({3, 1, 1})),
                            find_class(a5.classes, Partition({3, 1, 1})))
            .cover_nontrivial);

  CharacterTable s3 = sn_character_table(3);
  CoverReport triv = class_product_cover(s3, s3.identity_class, s3.identity_class);
  CHECK(triv.covered == std::set<int>{s3.identity_class});
  CHECK_FALSE(triv.cover_nontrivial);

  // A_4 double-transposition square: compare against direct enumeration.
  CharacterTable a4 = an_character_table(4);
  int dt = find_class(a4.classes, Partition({2, 2}));
  CoverReport r = class_product_cover(a4, dt, dt);
  std::vector<ConjugacyClassSn> classes = conjugacy_classes(4, Group::An);
  std::vector<Permutation> dts = class_elements(4, Group::An, dt);
  std::set<int> brute;
  for (const Permutation& s : dts)
    for (const Permutation& u : dts)
      brute.insert(class_index_of(classes, compose(s, u), Group::An));
  CHECK(r.covered == brute);
}

TEST_CASE("min_nontrivial_degree") {
  CHECK(min_nontrivial_degree(sn_character_table(3)) == 1);
  CHECK(min_nontrivial_degree(sn_character_table(5)) == 1);
  CHECK(min_nontrivial_degree(an_character_table(5)) == 3);
  CHECK(min_nontrivial_degree(an_character_table(6)) == 5);
}

TEST_CASE("gowers_check") {
  std::vector<Permutation> a5 = all_elements(5, Group::An);
  GowersReport full = gowers_check(5, Group::An, a5, a5, a5);
  CHECK(full.hypothesis);
  CHECK(full.product_all);

  std::vector<Permutation> e = {Permutation::identity(5)};
  GowersReport triv = gowers_check(5, Group::An, e, e, e);
  CHECK_FALSE(triv.hypothesis);
  CHECK_FALSE(triv.product_all);

  // Random 45-subsets: 45^3 * 3 >= 60^3, so the product must always cover.
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 5; ++trial) {
    auto pick = [&]() {
      std::vector<Permutation> v = a5;
      std::shuffle(v.begin(), v.end(), rng);
      v.resize(45);
      return v;
    };
    GowersReport r = gowers_check(5, Group::An, pick(), pick(), pick());
    CHECK(r.hypothesis);
    CHECK(r.product_all);
  }
}

TEST_CASE("bnp_bound_check") {
  // C_i = G: N_g = |G|^{t-1} = E for every g.
  std::vector<Permutation> s4 = all_elements(4, Group::Sn);
  BnpReport whole = bnp_bound_check(4, Group::Sn, {s4, s4, s4}, Rat(1, 2));
  CHECK(whole.hypothesis_met);
  CHECK(whole.bound_holds);
  CHECK(whole.mass_conserved);
  CHECK(whole.max_count == whole.min_count);
  CHECK(Rat(whole.max_count) == whole.expected);

  // S_4 with all non-identity elements, alpha saturating the hypothesis.
  std::vector<Permutation> s4x;
  for (const Permutation& s : s4)
    if (!(s == Permutation::identity(4))) s4x.push_back(s);
  Rat alpha = Rat(23 * 23 * 23) / Rat(24 * 24 * 24);
  BnpReport r = bnp_bound_check(4, Group::Sn, {s4x, s4x, s4x}, alpha);
  CHECK(r.hypothesis_met);
  CHECK(r.bound_holds);
  CHECK(r.mass_conserved);

  // A_5, three largest classes, alpha from the hypothesis with m(A_5) = 3.
  std::vector<ConjugacyClassSn> classes = conjugacy_classes(5, Group::An);
  std::vector<Permutation> c20 = class_elements(5, Group::An,
      find_class(classes, Partition({3, 1, 1})));
  std::vector<Permutation> c15 = class_elements(5, Group::An,
      find_class(classes, Partition({2, 2, 1})));
  std::vector<Permutation> c12 = class_elements(5, Group::An,
      find_class(classes, Partition({5})));
  REQUIRE(c20.size() == 20);
  REQUIRE(c15.size() == 15);
  REQUIRE(c12.size() == 12);
  Rat alpha5 = Rat(20 * 15 * 12 * 3) / (Rat(60) * 60 * 60);
  BnpReport r5 = bnp_bound_check(5, Group::An, {c20, c15, c12}, alpha5);
  CHECK(r5.hypothesis_met);
  CHECK(r5.bound_holds);
  CHECK(r5.mass_conserved);

  CHECK_THROWS_AS(bnp_bound_check(4, Group::Sn, {s4, s4}, Rat(1)),
                  std::invalid_argument);
}

TEST_CASE("witten_zeta") {
  CharacterTable s3 = sn_character_table(3);
  CHECK(witten_zeta(s3, 0) == Rat(3));
  CHECK(witten_zeta(s3, 1) == Rat(5, 2));
  CHECK(witten_zeta(s3, -2) == Rat(1 + 1 + 4));

  CharacterTable a5 = an_character_table(5);
  CHECK(witten_zeta(a5, 2) ==
        Rat(1) + Rat(1, 9) + Rat(1, 9) + Rat(1, 16) + Rat(1, 25));
  CHECK(witten_zeta_real(a5, 2.0) ==
        doctest::Approx(static_cast<double>(witten_zeta(a5, 2))));
}

TEST_CASE("triple_class_uniform_bound") {
  CharacterTable s3 = sn_character_table(3);
  int e3 = s3.identity_class;
  UniformBoundReport triv = triple_class_uniform_bound(s3, e3, e3, e3, e3);
  CHECK(triv.lhs == doctest::Approx(1.0 - 1.0 / 6.0));
  CHECK(triv.pass);

  CharacterTable a5 = an_character_table(5);
  int f1 = find_class(a5.classes, Partition({5}), 0);
  int f2 = find_class(a5.classes, Partition({5}), 1);
  int three = find_class(a5.classes, Partition({3, 1, 1}));
  CHECK(triple_class_uniform_bound(a5, f1, f2, f1, three).pass);

  CharacterTable s5 = sn_character_table(5);
  int tr = find_class(s5.classes, Partition({2, 1, 1, 1}));
  CHECK(triple_class_uniform_bound(s5, tr, tr, tr, s5.identity_class).pass);
}

TEST_CASE("free_reduce") {
  Word w = {{0, 1}, {1, 1}, {1, -1}, {0, -1}, {0, 1}};
  Word r = free_reduce(w);
  REQUIRE(r.size() == 1);
  CHECK(r[0].letter == 0);
  CHECK(r[0].exponent == 1);
  CHECK(free_reduce({{0, 1}, {0, -1}}).empty());
  CHECK_THROWS_AS(free_reduce({{0, 2}}), std::invalid_argument);
}

TEST_CASE("word_image") {
  // Single letter: the whole group.
  NormalSubset whole = word_image({{0, 1}}, 4, Group::Sn);
  CHECK(whole.size == 24);

  // Squares in S_3: identity and the two 3-cycles.
  NormalSubset sq = word_image({{0, 1}, {0, 1}}, 3, Group::Sn);
  CHECK(sq.size == 3);
  std::vector<ConjugacyClassSn> s3c = conjugacy_classes(3, Group::Sn);
  std::set<int> expect = {find_class(s3c, Partition({1, 1, 1})),
                          find_class(s3c, Partition({3}))};
  CHECK(sq.member_classes == expect);

  // Commutators cover all of A_5.
  NormalSubset comm =
      word_image({{0, 1}, {1, 1}, {0, -1}, {1, -1}}, 5, Group::An);
  CHECK(comm.size == 60);

  // Empty word: just the identity.
  CHECK(word_image({{0, 1}, {0, -1}}, 4, Group::An).size == 1);

  // Conjugation-closure is checked internally; also verify membership
  // directly for squares in S_4.
  NormalSubset sq4 = word_image({{0, 1}, {0, 1}}, 4, Group::Sn);
  std::vector<ConjugacyClassSn> s4c = conjugacy_classes(4, Group::Sn);
  std::set<std::uint64_t> elems;
  for (int c : sq4.member_classes)
    for (const Permutation& s : class_elements(4, Group::Sn, c))
      elems.insert(s.encode());
  for (const Permutation& x : all_elements(4, Group::Sn))
    CHECK(elems.count(compose(x, x).encode()) == 1);
}

TEST_CASE("product_distribution_distance") {
  // S = T = G: exactly uniform.
  std::set<int> all4;
  for (int i = 0; i < static_cast<int>(conjugacy_classes(4, Group::An).size());
       ++i)
    all4.insert(i);
  NormalSubset g4 = make_normal_subset(4, Group::An, all4);
  DistributionDistance d = product_distribution_distance(g4, g4);
  CHECK(d.l1_exact == 0);
  CHECK(d.linf_ratio == 0.0);

  // A_n derangements: the distance to uniform shrinks with n.
  auto derangement_subset = [](int n) {
    std::vector<ConjugacyClassSn> classes = conjugacy_classes(n, Group::An);
    std::set<int> member;
    for (int i = 0; i < static_cast<int>(classes.size()); ++i)
      if (num_fixed_points(classes[i].rep) == 0) member.insert(i);
    return make_normal_subset(n, Group::An, member);
  };
  NormalSubset d7 = derangement_subset(7);
  NormalSubset d8 = derangement_subset(8);
  DistributionDistance m7 = product_distribution_distance(d7, d7);
  DistributionDistance m8 = product_distribution_distance(d8, d8);
  CHECK(m7.l1_exact > m8.l1_exact);
  CHECK(m8.l1_exact > 0);
  // The sup ratio is attained at e where Pr(e)|G| = |G|/|D| -> e; the
  // approach alternates around e - 1, so check proximity rather than trend.
  CHECK(std::abs(m7.linf_ratio - 1.7182818) < 0.01);
  CHECK(std::abs(m8.linf_ratio - 1.7182818) < 0.01);
}
