#include <doctest.h>

#include <set>
#include <vector>

#include "npd/linear_strata.hpp"
#include "npd/partition.hpp"
#include "npd/symbols.hpp"

using namespace npd;

namespace {

std::vector<int> iota_set(int from, int to) {  // {from, ..., to}
  std::vector<int> v;
  for (int i = from; i <= to; ++i) v.push_back(i);
  return v;
}

long long num_partitions(int n) {
  return static_cast<long long>(partitions_of(n).size());
}

}  // namespace

TEST_CASE("shift and inefficiency") {
  CHECK(shift({}) == std::vector<int>{0});
  CHECK(shift({1, 3}) == std::vector<int>{0, 2, 4});
  CHECK(inefficiency({1, 3}) == 3);
  CHECK(inefficiency({0, 2, 4}) == 3);
  CHECK(inefficiency({0, 1, 2, 3}) == 0);
  CHECK(inefficiency({1}) == 1);
  for (int n = 1; n <= 8; ++n) CHECK(inefficiency({0, n}) == n - 1);
  // Shift preserves inefficiency on arbitrary sets.
  for (const std::vector<int>& s :
       {std::vector<int>{2}, {0, 3}, {1, 4, 5}, {0, 1, 7}})
    CHECK(inefficiency(shift(s)) == inefficiency(s));
  CHECK_THROWS_AS(inefficiency({3, 1}), std::invalid_argument);
}

TEST_CASE("rank: both closed forms") {
  CHECK(rank({{0}, {}}) == 0);
  CHECK(rank({{1}, {}}) == 1);
  for (int n = 1; n <= 9; ++n) CHECK(rank({{0, n}, {1}}) == n);
  CHECK(rank({{6}, {}}) == 6);
}

TEST_CASE("equivalence and minimal representatives") {
  SymbolXY s{{1, 3}, {0}};
  CHECK(equivalent(s, SymbolXY{{0}, {1, 3}}));          // swap
  CHECK(equivalent(s, SymbolXY{{0, 2, 4}, {0, 1}}));    // one shift
  CHECK_FALSE(equivalent(s, SymbolXY{{1, 3}, {1}}));

  // Rank and |defect| are equivalence invariants (shift both sides twice).
  for (const EnumeratedSymbol& e :
       enumerate_symbols(6, [](int) { return true; })) {
    SymbolXY shifted{shift(shift(e.symbol.x)), shift(shift(e.symbol.y))};
    CHECK(equivalent(e.symbol, shifted));
    CHECK(rank(shifted) == rank(e.symbol));
    CHECK(std::abs(shifted.defect()) == std::abs(e.symbol.defect()));
    CHECK(minimal_representative(shifted) == e.symbol);
  }
}

TEST_CASE("hooks and cohooks: definition scans") {
  // Packed side has no hooks.
  for (int d = 1; d <= 5; ++d) CHECK(hooks({iota_set(0, 3), {}}, d).empty());

  std::vector<HookRecord> h = hooks({{0, 2}, {}}, 1);
  REQUIRE(h.size() == 1);
  CHECK(h[0].b == 1);
  CHECK(h[0].c == 2);
  CHECK(h[0].side == Side::X);

  // ({0,n},{1}): no n-hook (0 is in X), exactly one n-cohook (0, n).
  for (int n = 2; n <= 8; ++n) {
    SymbolXY s{{0, n}, {1}};
    CHECK(hooks(s, n).empty());
    std::vector<HookRecord> co = cohooks(s, n);
    REQUIRE(co.size() == 1);
    CHECK(co[0].b == 0);
    CHECK(co[0].c == n);
  }
  CHECK(cohooks({{0}, {0}}, 3).empty());
}

TEST_CASE("hook removal") {
  SymbolXY s{{0, 2}, {}};
  std::vector<HookRecord> h = hooks(s, 1);
  SymbolXY r = remove_hook(s, h[0]);
  CHECK(r == SymbolXY{{0, 1}, {}});
  CHECK(inefficiency(r.x) == inefficiency(s.x) - 1);

  CHECK_THROWS_AS(remove_hook(s, HookRecord{Side::X, 0, 3, 3, HookKind::Hook}),
                  NotAHook);

  // Exhaustive over rank <= 6: every removal drops rank by exactly d, and a
  // symbol with a d-hook has rank >= d.
  for (int r6 = 0; r6 <= 6; ++r6)
    for (const EnumeratedSymbol& e :
         enumerate_symbols(r6, [](int) { return true; }))
      for (int d = 1; d <= r6 + 1; ++d)
        for (const HookRecord& hk : hooks(e.symbol, d)) {
          CHECK(r6 >= d);
          CHECK(rank(remove_hook(e.symbol, hk)) == r6 - d);
        }
}

TEST_CASE("cohook removal") {
  for (int n = 2; n <= 6; ++n) {
    SymbolXY s{{0, n}, {1}};
    SymbolXY r = remove_cohook(s, cohooks(s, n)[0]);
    CHECK(r == SymbolXY{{0}, {0, 1}});
    CHECK(rank(r) == 0);
  }
  CHECK_THROWS_AS(
      remove_cohook({{0}, {0}}, HookRecord{Side::X, 0, 2, 2, HookKind::Cohook}),
      NotACohook);

  // Exhaustive over rank <= 6: rank drops by d, defect changes by +-2; and
  // rank-0 symbols admit no cohooks at all.
  for (int r6 = 0; r6 <= 6; ++r6)
    for (const EnumeratedSymbol& e :
         enumerate_symbols(r6, [](int) { return true; }))
      for (int d = 1; d <= r6 + 1; ++d)
        for (const HookRecord& ch : cohooks(e.symbol, d)) {
          if (r6 == 0) FAIL("rank-0 symbol has a cohook");
          SymbolXY r = remove_cohook(e.symbol, ch);
          CHECK(rank(r) == r6 - d);
          CHECK(std::abs(r.defect() - e.symbol.defect()) == 2);
        }
}

TEST_CASE("enumeration counts against the bipartition oracle") {
  auto odd = [](int d) { return d % 2 == 1; };
  CHECK(enumerate_symbols(1, odd).size() == 2);
  CHECK(enumerate_symbols(2, odd).size() == 6);

  // Defect-1 classes of rank r biject with bipartitions of r.
  for (int r = 0; r <= 12; ++r) {
    long long bipartitions = 0;
    for (int k = 0; k <= r; ++k)
      bipartitions += num_partitions(k) * num_partitions(r - k);
    auto defect1 = enumerate_symbols(r, [](int d) { return d == 1; });
    CHECK(static_cast<long long>(defect1.size()) == bipartitions);
  }

  // Every enumerated symbol is minimal, swap-normalized, of the right rank.
  for (int r = 0; r <= 8; ++r)
    for (const EnumeratedSymbol& e :
         enumerate_symbols(r, [](int) { return true; })) {
      CHECK(rank(e.symbol) == r);
      CHECK(e.symbol.defect() >= 0);
      CHECK(minimal_representative(e.symbol) == e.symbol);
      CHECK(e.degenerate == (e.symbol.x == e.symbol.y));
    }

  // Degenerate symbols appear once: rank 2, defect 0 contains ({1},{1}).
  int degenerate_count = 0;
  for (const EnumeratedSymbol& e :
       enumerate_symbols(2, [](int d) { return d == 0; }))
    if (e.degenerate) ++degenerate_count;
  CHECK(degenerate_count == 1);

  CHECK_THROWS_AS(enumerate_symbols(17, [](int) { return true; }),
                  SizeGuardExceeded);
}

TEST_CASE("no disjoint hook pair overfills the rank") {
  // If two hooks of the same side share no endpoint they can be removed in
  // sequence, so d + d' - 1 <= r.
  for (int r = 0; r <= 8; ++r)
    for (const EnumeratedSymbol& e :
         enumerate_symbols(r, [](int) { return true; }))
      for (int d = 1; d <= r; ++d)
        for (int d2 = 1; d2 <= r; ++d2)
          for (const HookRecord& h1 : hooks(e.symbol, d))
            for (const HookRecord& h2 : hooks(e.symbol, d2)) {
              if (h1.side != h2.side || h1.c == h2.c || h1.b == h2.b ||
                  h1.b == h2.c || h1.c == h2.b)
                continue;
              CHECK(d + d2 - 1 <= r);
            }
}

TEST_CASE("count_constrained stabilizes in rank") {
  // The count of rank-r classes with both an (r-k)- and an (r-k')-hook or
  // cohook becomes independent of r once r is large.
  auto all = [](int) { return true; };
  for (auto [k, k2] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}})
    for (HookKind kind1 : {HookKind::Hook, HookKind::Cohook})
      for (HookKind kind2 : {HookKind::Hook, HookKind::Cohook}) {
        long long base = count_constrained(
            12, {{kind1, 12 - k}, {kind2, 12 - k2}}, all);
        for (int r = 13; r <= 16; ++r)
          CHECK(count_constrained(r, {{kind1, r - k}, {kind2, r - k2}}, all) ==
                base);
      }
}

TEST_CASE("classify_surviving_symbols: the four-character lists") {
  // Even rank n, defect odd, an n-cohook and an (n-1)-hook required.
  for (int n : {6, 8, 10}) {
    auto got = classify_surviving_symbols(
        n, DefectClass::Odd,
        {{HookKind::Cohook, n}, {HookKind::Hook, n - 1}});
    std::set<SymbolXY> symbols;
    for (const EnumeratedSymbol& e : got) symbols.insert(e.symbol);
    std::set<SymbolXY> expect = {
        SymbolXY{{n}, {}},
        SymbolXY{{0, n}, {1}},
        SymbolXY{[&] {
                   std::vector<int> v = iota_set(0, n - 2);
                   v.push_back(n);
                   return v;
                 }(),
                 iota_set(1, n - 1)},
        SymbolXY{iota_set(0, n), iota_set(1, n)}};
    CHECK(symbols == expect);
  }

  // Odd rank n, defect odd, an n-hook and an (n-1)-cohook required.
  for (int n : {7, 9, 11}) {
    auto got = classify_surviving_symbols(
        n, DefectClass::Odd,
        {{HookKind::Hook, n}, {HookKind::Cohook, n - 1}});
    std::set<SymbolXY> symbols;
    for (const EnumeratedSymbol& e : got) symbols.insert(e.symbol);
    std::set<SymbolXY> expect = {
        SymbolXY{{n}, {}},
        SymbolXY{{1, n}, {0}},
        SymbolXY{iota_set(0, n - 1),
                 [&] {
                   std::vector<int> v = iota_set(1, n - 2);
                   v.push_back(n);
                   return v;
                 }()},
        SymbolXY{iota_set(0, n), iota_set(1, n)}};
    CHECK(symbols == expect);
  }

  // No constraints: everything of odd defect at rank 4.
  CHECK(classify_surviving_symbols(4, DefectClass::Odd, {}).size() ==
        enumerate_symbols(4, [](int d) { return d % 2 == 1; }).size());
}

TEST_CASE("all_hook_cohook_lengths") {
  HookLengthProfile trivial = all_hook_cohook_lengths({{0}, {}});
  CHECK(trivial.hook_lengths.empty());
  CHECK(trivial.cohook_lengths.empty());

  for (int n = 2; n <= 6; ++n) {
    HookLengthProfile p = all_hook_cohook_lengths({{0, n}, {1}});
    CHECK(p.cohook_lengths.count(n) == 1);
  }

  // Equivalent symbols have identical profiles (shift invariance, rank <= 5).
  for (int r = 0; r <= 5; ++r)
    for (const EnumeratedSymbol& e :
         enumerate_symbols(r, [](int) { return true; })) {
      SymbolXY shifted{shift(e.symbol.x), shift(e.symbol.y)};
      HookLengthProfile a = all_hook_cohook_lengths(e.symbol);
      HookLengthProfile b = all_hook_cohook_lengths(shifted);
      CHECK(a.hook_lengths == b.hook_lengths);
      CHECK(a.cohook_lengths == b.cohook_lengths);
    }
}

TEST_CASE("denominator_divisible") {
  // Empty products: never divisible.
  for (long long ell : {3LL, 5LL, 7LL, 13LL})
    CHECK_FALSE(denominator_divisible({{0}, {}}, 2, ell));

  // The n-cohook of ({0,n},{1}) catches the Zsygmondy prime of q^{2n} - 1.
  for (int n : {2, 4, 5}) {  // n = 3 hits the (2,6) Zsygmondy exception
    auto ell = zsygmondy_prime(2, 2 * n);
    REQUIRE(ell.has_value());
    CHECK(denominator_divisible({{0, n}, {1}}, 2, *ell));
  }

  // A prime whose order exceeds twice every length divides nothing.
  for (int r = 0; r <= 3; ++r)
    for (const EnumeratedSymbol& e :
         enumerate_symbols(r, [](int) { return true; }))
      CHECK_FALSE(denominator_divisible(e.symbol, 2, 65537));

  CHECK_THROWS_AS(denominator_divisible({{1}, {}}, 2, 2),
                  std::invalid_argument);
}
