#include "npd/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "npd/characters.hpp"
#include "npd/class_products.hpp"
#include "npd/cycle_stats.hpp"
#include "npd/derangements.hpp"
#include "npd/linear_strata.hpp"
#include "npd/partition.hpp"
#include "npd/perm.hpp"
#include "npd/symbols.hpp"

namespace npd {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(15) << v;
  return os.str();
}

std::string fmt(const Rat& v) { return v.str(); }
std::string fmt(const BigInt& v) { return v.str(); }

class Recorder {
 public:
  explicit Recorder(const SuiteConfig& cfg) : cfg_(cfg) {}

  // fn fills expected/actual/pass; SizeGuardExceeded turns into a skip.
  void check(const std::string& name,
             std::map<std::string, std::string> params,
             const std::function<void(CheckResult&)>& fn) {
    CheckResult r;
    r.check_name = name;
    r.params = std::move(params);
    std::string key = name;
    for (const auto& [k, v] : r.params) key += "|" + k + "=" + v;
    r.seed = fnv1a(key, cfg_.seed);
    auto start = std::chrono::steady_clock::now();
    try {
      fn(r);
    } catch (const SizeGuardExceeded& e) {
      r.skipped = true;
      r.pass = true;
      r.expected = "(completed)";
      r.actual = std::string("skipped: ") + e.what();
    }
    if (cfg_.measure_time)
      r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    results.push_back(std::move(r));
  }

  void boolean(const std::string& name,
               std::map<std::string, std::string> params, bool ok) {
    check(name, std::move(params), [ok](CheckResult& r) {
      r.expected = "true";
      r.actual = ok ? "true" : "false";
      r.pass = ok;
    });
  }

  std::vector<CheckResult> results;
  const SuiteConfig& cfg() const { return cfg_; }

 private:
  const SuiteConfig& cfg_;
};

int cap(const SuiteConfig& cfg, int fallback) {
  return cfg.max_n ? *cfg.max_n : fallback;
}

std::string group_tag(Group g) { return g == Group::Sn ? "S" : "A"; }

NormalSubset derangement_subset(int n) {
  std::vector<ConjugacyClassSn> classes = conjugacy_classes(n, Group::An);
  std::set<int> member;
  for (int i = 0; i < static_cast<int>(classes.size()); ++i)
    if (num_fixed_points(classes[i].rep) == 0) member.insert(i);
  return make_normal_subset(n, Group::An, member);
}

// ---- suites -------------------------------------------------------------

void suite_sym_char_orthogonality(Recorder& rec) {
  const int top = cap(rec.cfg(), 8);
  for (int n = 1; n <= top; ++n)
    rec.check("sym-char-orthogonality/sn", {{"n", std::to_string(n)}},
              [n](CheckResult& r) {
                CharacterTable t = sn_character_table(n);
                check_row_orthogonality(t);
                check_column_orthogonality(t);
                Rat sum = 0;
                for (int c = 0; c < t.num_characters(); ++c)
                  sum += t.degree(c) * t.degree(c);
                r.expected = fmt(BigInt(factorial(n)));
                r.actual = fmt(sum);
                r.pass = sum == Rat(factorial(n));
              });
  for (int n = 3; n <= std::min(top, 8); ++n)
    rec.check("sym-char-orthogonality/an", {{"n", std::to_string(n)}},
              [n](CheckResult& r) {
                CharacterTable t = an_character_table(n);
                check_row_orthogonality(t);
                check_column_orthogonality(t);
                Rat sum = 0;
                for (int c = 0; c < t.num_characters(); ++c)
                  sum += t.degree(c) * t.degree(c);
                r.expected = fmt(BigInt(factorial(n) / 2));
                r.actual = fmt(sum);
                r.pass = sum == Rat(factorial(n) / 2);
              });
}

void suite_frobenius_bruteforce(Recorder& rec) {
  struct Case { int n; Group g; };
  const int top = cap(rec.cfg(), 6);
  for (Case c : {Case{3, Group::Sn}, Case{4, Group::Sn}, Case{5, Group::Sn},
                 Case{4, Group::An}, Case{5, Group::An}, Case{6, Group::An}}) {
    if (c.n > top) continue;
    rec.check("frobenius-bruteforce/cross-check",
              {{"group", group_tag(c.g) + std::to_string(c.n)}},
              [c](CheckResult& r) {
                CharacterTable t = c.g == Group::Sn ? sn_character_table(c.n)
                                                    : an_character_table(c.n);
                std::vector<ConjugacyClassSn> classes =
                    conjugacy_classes(c.n, c.g);
                const int k = static_cast<int>(classes.size());
                std::vector<std::vector<Permutation>> members(k);
                for_each_element(c.n, c.g, [&](const Permutation& s) {
                  members[class_index_of(classes, s, c.g)].push_back(s);
                });
                long long mismatches = 0;
                for (int c1 = 0; c1 < k; ++c1)
                  for (int c2 = 0; c2 < k; ++c2) {
                    std::vector<BigInt> tally(k, 0);
                    for (const Permutation& a : members[c1])
                      for (const Permutation& b : members[c2])
                        tally[class_index_of(classes, compose(a, b), c.g)] += 1;
                    for (int cc = 0; cc < k; ++cc)
                      if (frobenius_count(t, {{c1, c2}, cc}) *
                              classes[cc].class_size !=
                          tally[cc])
                        ++mismatches;
                  }
                r.expected = "0 mismatches";
                r.actual = std::to_string(mismatches) + " mismatches";
                r.pass = mismatches == 0;
              });
  }
}

void suite_class_cover(Recorder& rec) {
  rec.check("class-cover/a5-five-cycles", {}, [](CheckResult& r) {
    CharacterTable a5 = an_character_table(5);
    int f1 = -1, f2 = -1;
    for (int i = 0; i < a5.num_classes(); ++i)
      if (a5.classes[i].type == Partition({5})) (f1 < 0 ? f1 : f2) = i;
    bool same_half = class_product_cover(a5, f1, f1).cover_nontrivial;
    bool mixed = class_product_cover(a5, f1, f2).cover_nontrivial;
    r.expected = "same-half=false mixed=true";
    r.actual = std::string("same-half=") + (same_half ? "true" : "false") +
               " mixed=" + (mixed ? "true" : "false");
    r.pass = !same_half && mixed;
  });
  rec.check("class-cover/s3-identity", {}, [](CheckResult& r) {
    CharacterTable s3 = sn_character_table(3);
    CoverReport c = class_product_cover(s3, s3.identity_class, s3.identity_class);
    r.expected = "{e} only";
    bool ok = c.covered == std::set<int>{s3.identity_class};
    r.actual = ok ? "{e} only" : "other";
    r.pass = ok;
  });
}

void suite_bnp_inequality(Recorder& rec) {
  auto all_of = [](int n, Group g) {
    std::vector<Permutation> v;
    for_each_element(n, g, [&](const Permutation& s) { v.push_back(s); });
    return v;
  };
  auto report = [&](const BnpReport& b, CheckResult& r) {
    r.expected = "hypothesis+bound+mass";
    bool ok = b.hypothesis_met && b.bound_holds && b.mass_conserved;
    r.actual = std::string("hypothesis=") + (b.hypothesis_met ? "1" : "0") +
               " bound=" + (b.bound_holds ? "1" : "0") +
               " mass=" + (b.mass_conserved ? "1" : "0");
    r.pass = ok;
  };
  rec.check("bnp-inequality/s4-whole-group", {}, [&](CheckResult& r) {
    std::vector<Permutation> s4 = all_of(4, Group::Sn);
    report(bnp_bound_check(4, Group::Sn, {s4, s4, s4}, Rat(1, 2)), r);
  });
  rec.check("bnp-inequality/s4-minus-identity", {}, [&](CheckResult& r) {
    std::vector<Permutation> v;
    for (const Permutation& s : all_of(4, Group::Sn))
      if (!(s == Permutation::identity(4))) v.push_back(s);
    Rat alpha = Rat(23 * 23 * 23) / Rat(24 * 24 * 24);
    report(bnp_bound_check(4, Group::Sn, {v, v, v}, alpha), r);
  });
  rec.check("bnp-inequality/a5-three-largest", {}, [&](CheckResult& r) {
    std::vector<ConjugacyClassSn> classes = conjugacy_classes(5, Group::An);
    std::vector<std::vector<Permutation>> sets(classes.size());
    for_each_element(5, Group::An, [&](const Permutation& s) {
      sets[class_index_of(classes, s, Group::An)].push_back(s);
    });
    std::vector<std::vector<Permutation>> chosen;
    for (const Partition& p :
         {Partition({3, 1, 1}), Partition({2, 2, 1}), Partition({5})})
      for (std::size_t i = 0; i < classes.size(); ++i)
        if (classes[i].type == p) { chosen.push_back(sets[i]); break; }
    Rat alpha = Rat(20 * 15 * 12 * 3) / (Rat(60) * 60 * 60);
    report(bnp_bound_check(5, Group::An, chosen, alpha), r);
  });
  // Uniform triple bound on the same groups.
  rec.check("bnp-inequality/uniform-triple-bound", {}, [](CheckResult& r) {
    long long failures = 0;
    for (Group g : {Group::Sn, Group::An}) {
      for (int n = 4; n <= 5; ++n) {
        if (g == Group::An && n == 4) continue;
        CharacterTable t =
            g == Group::Sn ? sn_character_table(n) : an_character_table(n);
        for (int c1 = 0; c1 < t.num_classes(); ++c1)
          for (int c2 = 0; c2 < t.num_classes(); ++c2)
            for (int c3 = 0; c3 < t.num_classes(); ++c3)
              for (int gc = 0; gc < t.num_classes(); ++gc)
                if (!triple_class_uniform_bound(t, c1, c2, c3, gc).pass)
                  ++failures;
      }
    }
    r.expected = "0 failures";
    r.actual = std::to_string(failures) + " failures";
    r.pass = failures == 0;
  });
}

void suite_gowers(Recorder& rec) {
  rec.check("gowers/a5-random-45-subsets", {{"trials", "100"}},
            [&](CheckResult& r) {
              std::vector<Permutation> a5;
              for_each_element(5, Group::An,
                               [&](const Permutation& s) { a5.push_back(s); });
              std::mt19937_64 rng(r.seed);
              int covered = 0;
              const int trials = 100;
              for (int trial = 0; trial < trials; ++trial) {
                auto pick = [&]() {
                  std::vector<Permutation> v = a5;
                  std::shuffle(v.begin(), v.end(), rng);
                  v.resize(45);
                  return v;
                };
                GowersReport g = gowers_check(5, Group::An, pick(), pick(), pick());
                if (g.hypothesis && g.product_all) ++covered;
              }
              r.expected = std::to_string(trials);
              r.actual = std::to_string(covered);
              r.pass = covered == trials;
            });
}

void suite_witten_zeta(Recorder& rec) {
  rec.check("witten-zeta/exact-values", {}, [](CheckResult& r) {
    CharacterTable s3 = sn_character_table(3);
    CharacterTable a5 = an_character_table(5);
    bool ok = witten_zeta(s3, 0) == Rat(3) && witten_zeta(s3, 1) == Rat(5, 2) &&
              witten_zeta(a5, 2) ==
                  Rat(1) + Rat(1, 9) + Rat(1, 9) + Rat(1, 16) + Rat(1, 25);
    r.expected = "zeta(S3,1)=5/2; zeta(A5,2)=1+2/9+1/16+1/25";
    r.actual = witten_zeta(s3, 1).str() + "; " + witten_zeta(a5, 2).str();
    r.pass = ok;
  });
}

void suite_word_images(Recorder& rec) {
  rec.check("word-images/identity-word", {}, [](CheckResult& r) {
    r.expected = "24";
    r.actual = fmt(word_image({{0, 1}}, 4, Group::Sn).size);
    r.pass = r.actual == r.expected;
  });
  rec.check("word-images/squares-s3", {}, [](CheckResult& r) {
    r.expected = "3";
    r.actual = fmt(word_image({{0, 1}, {0, 1}}, 3, Group::Sn).size);
    r.pass = r.actual == r.expected;
  });
  rec.check("word-images/commutators-a5", {}, [](CheckResult& r) {
    r.expected = "60";
    r.actual =
        fmt(word_image({{0, 1}, {1, 1}, {0, -1}, {1, -1}}, 5, Group::An).size);
    r.pass = r.actual == r.expected;
  });
}

void suite_cycle_mod_counts(Recorder& rec) {
  const int top = cap(rec.cfg(), 7);
  for (Group g : {Group::Sn, Group::An})
    for (int n = 4; n <= top; ++n)
      rec.check("cycle-mod-counts/brute",
                {{"group", group_tag(g) + std::to_string(n)}},
                [n, g](CheckResult& r) {
                  long long mismatches = 0;
                  for (int m = 1; m <= 9; ++m) {
                    std::vector<BigInt> brute(m, 0);
                    for_each_element(n, g, [&](const Permutation& s) {
                      brute[num_cycles(s) % m] += 1;
                    });
                    for (int a = 0; a < m; ++a)
                      if (count_p_mod(n, m, a, g) != brute[a]) ++mismatches;
                  }
                  r.expected = "0 mismatches";
                  r.actual = std::to_string(mismatches) + " mismatches";
                  r.pass = mismatches == 0;
                });
}

void suite_rising_factorial(Recorder& rec) {
  const int top = cap(rec.cfg(), 12);
  for (int n = 2; n <= top; ++n)
    for (int m : {1, 3, 5, 7})
      rec.check("rising-factorial/identity",
                {{"n", std::to_string(n)}, {"m", std::to_string(m)}},
                [n, m](CheckResult& r) {
                  RisingFactorialReport rep = rising_factorial_identity_check(n, m);
                  r.expected = "lhs = rhs in Z[x]/Phi_m";
                  r.actual = rep.pass ? "equal" : "unequal";
                  r.pass = rep.pass;
                });
}

void suite_alt_threecycle_gap(Recorder& rec) {
  struct Case { int n, m, k, l; };
  for (Case c : {Case{7, 7, 2, 4}, Case{8, 9, 2, 4}})
    rec.check("alt-threecycle-gap/windows",
              {{"n", std::to_string(c.n)}, {"m", std::to_string(c.m)},
               {"k", std::to_string(c.k)}, {"l", std::to_string(c.l)}},
              [c](CheckResult& r) {
                ThreeCycleGapReport g =
                    three_cycle_gap_check(build_alt_sets(c.n, c.m, c.k, c.l));
                r.expected = "no 3-cycle in S*T, lemma holds";
                r.actual = std::string("no_three_cycle=") +
                           (g.no_three_cycle ? "1" : "0") +
                           " lemma=" + (g.lemma_ok ? "1" : "0");
                r.pass = g.no_three_cycle && g.lemma_ok;
              });
  rec.boolean("alt-threecycle-gap/p-difference-a6", {{"n", "6"}},
              p_difference_lemma_exhaustive(6));
}

void suite_split_type_bound(Recorder& rec) {
  rec.check("split-type-bound/small-exact", {}, [](CheckResult& r) {
    bool ok = count_split_type(1) == 1 && count_split_type(3) == 2 &&
              count_split_type(4) == 8;
    r.expected = "1,2,8 at n=1,3,4";
    r.actual = count_split_type(1).str() + "," + count_split_type(3).str() +
               "," + count_split_type(4).str();
    r.pass = ok;
  });
  rec.check("split-type-bound/log-bound", {}, [](CheckResult& r) {
    bool ok = true;
    for (int n = 10; n <= 100; n += 9) {
      Rat frac(count_split_type(n), factorial(n));
      if (static_cast<double>(frac) >= 2.0 / std::log(n / 2.0)) ok = false;
    }
    r.expected = "fraction < 2/log(n/2), n = 10..100";
    r.actual = ok ? "holds" : "violated";
    r.pass = ok;
  });
}

void suite_derangement_asymptotics(Recorder& rec) {
  rec.check("derangement-asymptotics/a9-proportion", {{"n", "9"}},
            [](CheckResult& r) {
              Rat prop(an_derangement_count(9), factorial(9) / 2);
              double diff = std::abs(static_cast<double>(prop) - std::exp(-1.0));
              r.expected = "|prop - 1/e| < 0.01";
              r.actual = fmt(diff);
              r.pass = diff < 0.01;
            });
  for (int n = 5; n <= 12; ++n)
    rec.boolean("derangement-asymptotics/betweenness",
                {{"n", std::to_string(n)}}, strong_alt_betweenness(n));
  rec.check("derangement-asymptotics/three-cycle-ratio", {{"n", "9"}},
            [](CheckResult& r) {
              double ratio = static_cast<double>(three_cycle_representation_ratio(9));
              double diff = std::abs(ratio - std::exp(1.0));
              r.expected = "|ratio - e| < 0.15";
              r.actual = fmt(diff);
              // Known finite-size defect: the ratio approaches e from below
              // with a (1 - 1/(n-1))^3-type correction, still ~0.9 away at
              // n = 9; reported faithfully.
              r.pass = diff < 0.15;
            });
}

void suite_an_two_derangements(Recorder& rec) {
  const int top = cap(rec.cfg(), 7);
  for (int n = 5; n <= top; ++n)
    rec.check("an-two-derangements/exhaustive", {{"n", std::to_string(n)}},
              [n](CheckResult& r) {
                long long failures = 0;
                for_each_element(n, Group::An, [&](const Permutation& g) {
                  auto [d1, d2] = two_derangement_decompose(g, r.seed);
                  if (!(compose(d1, d2) == g) || num_fixed_points(d1) != 0 ||
                      num_fixed_points(d2) != 0 || !is_even(d1) || !is_even(d2))
                    ++failures;
                });
                r.expected = "0 failures";
                r.actual = std::to_string(failures) + " failures";
                r.pass = failures == 0;
              });
}

void suite_d_squared(Recorder& rec) {
  auto run = [&](const std::string& tag, const GroupAction& action) {
    rec.check("d-squared/cover", {{"action", tag}},
              [&action](CheckResult& r) {
                DSquaredReport d = verify_d_squared(action);
                r.expected = "D^2 = G";
                r.actual = d.all_covered
                               ? "covered"
                               : std::to_string(d.gaps.size()) + " gaps";
                r.pass = d.all_covered;
              });
  };
  run("A5-natural", GroupAction::natural(5, Group::An));
  run("A7-natural", GroupAction::natural(7, Group::An));
  run("A6-2subsets", GroupAction::k_subsets(6, Group::An, 2));
}

void suite_ell_criterion(Recorder& rec) {
  auto run = [&](const std::string& tag, const GroupAction& action,
                 std::optional<int> expect) {
    rec.check("ell-criterion/largest-absent-ell", {{"action", tag}},
              [&action, expect](CheckResult& r) {
                std::optional<int> got = derangement_ell_criterion(action);
                r.expected = expect ? std::to_string(*expect) : "none";
                r.actual = got ? std::to_string(*got) : "none";
                r.pass = got == expect;
              });
  };
  run("A7-natural", GroupAction::natural(7, Group::An), 7);
  run("A8-natural", GroupAction::natural(8, Group::An), std::nullopt);
  run("A7-2subsets", GroupAction::k_subsets(7, Group::An, 2), 7);
}

void suite_sl_strata(Recorder& rec) {
  struct Case { int n, q; };
  std::vector<Case> cases;
  if (rec.cfg().n && !rec.cfg().qs.empty()) {
    for (int q : rec.cfg().qs) cases.push_back({*rec.cfg().n, q});
  } else {
    cases = {{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}};
  }
  for (Case c : cases)
    rec.check("sl-strata/census",
              {{"n", std::to_string(c.n)}, {"q", std::to_string(c.q)}},
              [c](CheckResult& r) {
                StratumCensus s = stratum_census(c.n, c.q);
                bool ok = s.upper_bounds_ok && s.lower_bounds_ok &&
                          s.top_stratum_variant_ok &&
                          s.counts.at(c.n) == 1;
                r.expected = "order " + sl_order(c.n, c.q).str() + ", bounds hold";
                r.actual = "order " + s.order.str() + std::string(", bounds ") +
                           (ok ? "hold" : "fail");
                r.pass = ok && s.order == sl_order(c.n, c.q);
              });
}

void suite_fixedq_transvection(Recorder& rec) {
  const int n = rec.cfg().n.value_or(4);
  const int q = rec.cfg().qs.empty() ? 2 : rec.cfg().qs[0];
  const int s = rec.cfg().s.value_or(0);
  const int t = rec.cfg().t.value_or(2);
  rec.check("fixedq-transvection/product",
            {{"n", std::to_string(n)}, {"q", std::to_string(q)},
             {"s", std::to_string(s)}, {"t", std::to_string(t)}},
            [=](CheckResult& r) {
              FixedQReport f = fixed_q_product_check(n, q, s, t);
              r.expected = "no transvection in S*T";
              r.actual = f.transvection_free ? "none found" : "found";
              r.pass = f.transvection_free;
            });
}

void suite_gauss_binomial(Recorder& rec) {
  rec.check("gauss-binomial/sandwich", {}, [](CheckResult& r) {
    long long violations = 0;
    for (int q : {2, 3, 4, 5, 7, 8, 9})
      for (int k = 0; k <= 10; ++k)
        for (int m = 0; m <= k; ++m) {
          BigInt v = gaussian_binomial(k, m, q);
          BigInt base = boost::multiprecision::pow(BigInt(q), m * (k - m));
          if (v < base || v >= 4 * base) ++violations;
        }
    r.expected = "0 violations";
    r.actual = std::to_string(violations) + " violations";
    r.pass = violations == 0;
  });
  rec.check("gauss-binomial/duality", {}, [](CheckResult& r) {
    bool ok = true;
    for (int k = 0; k <= 8; ++k)
      for (int m = 0; m <= k; ++m)
        for (int q = 2; q <= 5; ++q)
          if (gaussian_binomial(k, m, q) != gaussian_binomial(k, k - m, q))
            ok = false;
    r.expected = "[k,m]_q = [k,k-m]_q";
    r.actual = ok ? "holds" : "violated";
    r.pass = ok;
  });
}

void suite_symbols_core(Recorder& rec) {
  rec.check("symbols-core/rank-forms", {{"max_rank", "12"}},
            [](CheckResult& r) {
              long long count = 0;
              for (int rk = 0; rk <= 12; ++rk)
                for (const EnumeratedSymbol& e :
                     enumerate_symbols(rk, [](int) { return true; })) {
                  if (rank(e.symbol) != rk)
                    throw std::logic_error("rank mismatch");
                  ++count;
                }
              r.expected = "all ranks consistent";
              r.actual = std::to_string(count) + " symbols checked";
              r.pass = true;
            });
  rec.check("symbols-core/removals", {{"max_rank", "8"}}, [](CheckResult& r) {
    long long bad = 0;
    for (int rk = 0; rk <= 8; ++rk)
      for (const EnumeratedSymbol& e :
           enumerate_symbols(rk, [](int) { return true; }))
        for (int d = 1; d <= rk; ++d) {
          for (const HookRecord& h : hooks(e.symbol, d))
            if (rank(remove_hook(e.symbol, h)) != rk - d) ++bad;
          for (const HookRecord& h : cohooks(e.symbol, d))
            if (rank(remove_cohook(e.symbol, h)) != rk - d) ++bad;
        }
    r.expected = "every removal drops rank by d";
    r.actual = std::to_string(bad) + " violations";
    r.pass = bad == 0;
  });
  rec.check("symbols-core/defect1-bipartitions", {{"max_rank", "12"}},
            [](CheckResult& r) {
              bool ok = true;
              for (int rk = 0; rk <= 12; ++rk) {
                long long expect = 0;
                for (int k = 0; k <= rk; ++k)
                  expect += static_cast<long long>(partitions_of(k).size()) *
                            static_cast<long long>(partitions_of(rk - k).size());
                auto got = enumerate_symbols(rk, [](int d) { return d == 1; });
                if (static_cast<long long>(got.size()) != expect) ok = false;
              }
              r.expected = "defect-1 count = bipartition count";
              r.actual = ok ? "matches" : "mismatch";
              r.pass = ok;
            });
}

void suite_symbols_bounded(Recorder& rec) {
  auto all = [](int) { return true; };
  for (auto [k, k2] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}})
    rec.check("symbols-bounded/stabilization",
              {{"k", std::to_string(k)}, {"k2", std::to_string(k2)}},
              [k, k2, &all](CheckResult& r) {
                bool ok = true;
                for (HookKind kind1 : {HookKind::Hook, HookKind::Cohook})
                  for (HookKind kind2 : {HookKind::Hook, HookKind::Cohook}) {
                    long long base = count_constrained(
                        12, {{kind1, 12 - k}, {kind2, 12 - k2}}, all);
                    for (int rk = 13; rk <= 16; ++rk)
                      if (count_constrained(
                              rk, {{kind1, rk - k}, {kind2, rk - k2}}, all) !=
                          base)
                        ok = false;
                  }
                r.expected = "constant over r = 12..16";
                r.actual = ok ? "constant" : "drifts";
                r.pass = ok;
              });
}

void suite_symbols_classify(Recorder& rec) {
  auto iota_set = [](int from, int to) {
    std::vector<int> v;
    for (int i = from; i <= to; ++i) v.push_back(i);
    return v;
  };
  for (int n : {6, 8, 10})
    rec.check("symbols-classify/even-rank", {{"n", std::to_string(n)}},
              [n, &iota_set](CheckResult& r) {
                auto got = classify_surviving_symbols(
                    n, DefectClass::Odd,
                    {{HookKind::Cohook, n}, {HookKind::Hook, n - 1}});
                std::set<SymbolXY> symbols;
                for (const EnumeratedSymbol& e : got) symbols.insert(e.symbol);
                std::vector<int> third = iota_set(0, n - 2);
                third.push_back(n);
                std::set<SymbolXY> expect = {
                    SymbolXY{{n}, {}}, SymbolXY{{0, n}, {1}},
                    SymbolXY{third, iota_set(1, n - 1)},
                    SymbolXY{iota_set(0, n), iota_set(1, n)}};
                r.expected = "the 4 surviving symbols";
                r.actual = std::to_string(symbols.size()) + " symbols";
                r.pass = symbols == expect;
              });
  for (int n : {7, 9, 11})
    rec.check("symbols-classify/odd-rank", {{"n", std::to_string(n)}},
              [n, &iota_set](CheckResult& r) {
                auto got = classify_surviving_symbols(
                    n, DefectClass::Odd,
                    {{HookKind::Hook, n}, {HookKind::Cohook, n - 1}});
                std::set<SymbolXY> symbols;
                for (const EnumeratedSymbol& e : got) symbols.insert(e.symbol);
                std::vector<int> third = iota_set(1, n - 2);
                third.push_back(n);
                std::set<SymbolXY> expect = {
                    SymbolXY{{n}, {}}, SymbolXY{{1, n}, {0}},
                    SymbolXY{iota_set(0, n - 1), third},
                    SymbolXY{iota_set(0, n), iota_set(1, n)}};
                r.expected = "the 4 surviving symbols";
                r.actual = std::to_string(symbols.size()) + " symbols";
                r.pass = symbols == expect;
              });
}

void suite_unipotent_degree_bound(Recorder& rec) {
  const int top = cap(rec.cfg(), 12);
  std::vector<int> qs = rec.cfg().qs.empty() ? std::vector<int>{2, 3}
                                             : rec.cfg().qs;
  for (int q : qs)
    for (int L = 0; L <= 3; ++L)
      rec.check("unipotent-degree-bound/adegree",
                {{"q", std::to_string(q)}, {"L", std::to_string(L)}},
                [top, q, L](CheckResult& r) {
                  long long bad = 0, total = 0;
                  for (int n = std::max(2 * L + 1, 1); n <= top; ++n)
                    for (const ADegreeWitness& w :
                         verify_adegree_bound(n, L, q)) {
                      ++total;
                      if (!w.ok) ++bad;
                    }
                  r.expected = "0 violations";
                  r.actual = std::to_string(bad) + " of " +
                             std::to_string(total) + " violated";
                  r.pass = bad == 0;
                });
}

void suite_twelve_characters(Recorder& rec) {
  const int top = cap(rec.cfg(), 12);
  for (int n = 10; n <= top; ++n)
    rec.check("twelve-characters/classification", {{"n", std::to_string(n)}},
              [n](CheckResult& r) {
                std::vector<NonvanishingPair> got = classify_nonvanishing_pair(n);
                bool products_ok = true;
                for (const NonvanishingPair& p : got)
                  if (p.v1 * p.v2 != 1 && p.v1 * p.v2 != -1)
                    products_ok = false;
                r.expected = "12 partitions, products in {-1,+1}";
                r.actual = std::to_string(got.size()) + " partitions, products " +
                           (products_ok ? "ok" : "bad");
                r.pass = got.size() == 12 && products_ok;
              });
}

void suite_mixing_l1(Recorder& rec) {
  const int top = std::min(cap(rec.cfg(), 9), 9);
  std::vector<std::pair<int, Rat>> values;
  for (int n = 6; n <= top; ++n) {
    NormalSubset d = derangement_subset(n);
    values.emplace_back(n, product_distribution_distance(d, d).l1_exact);
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    int n = values[i].first;
    Rat l1 = values[i].second;
    rec.check("mixing-l1/derangement-walk", {{"n", std::to_string(n)}},
              [&, i, n, l1](CheckResult& r) {
                r.expected = i == 0 ? "baseline" : "l1(n) < l1(n-1)";
                r.actual = "l1 = " + fmt(static_cast<double>(l1));
                r.pass = i == 0 || l1 < values[i - 1].second;
              });
  }
}

using SuiteFn = void (*)(Recorder&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> kSuites = {
      {"sym-char-orthogonality", suite_sym_char_orthogonality},
      {"frobenius-bruteforce", suite_frobenius_bruteforce},
      {"class-cover", suite_class_cover},
      {"bnp-inequality", suite_bnp_inequality},
      {"gowers", suite_gowers},
      {"witten-zeta", suite_witten_zeta},
      {"word-images", suite_word_images},
      {"cycle-mod-counts", suite_cycle_mod_counts},
      {"rising-factorial", suite_rising_factorial},
      {"alt-threecycle-gap", suite_alt_threecycle_gap},
      {"split-type-bound", suite_split_type_bound},
      {"derangement-asymptotics", suite_derangement_asymptotics},
      {"an-two-derangements", suite_an_two_derangements},
      {"d-squared", suite_d_squared},
      {"ell-criterion", suite_ell_criterion},
      {"sl-strata", suite_sl_strata},
      {"fixedq-transvection", suite_fixedq_transvection},
      {"gauss-binomial", suite_gauss_binomial},
      {"symbols-core", suite_symbols_core},
      {"symbols-bounded", suite_symbols_bounded},
      {"symbols-classify", suite_symbols_classify},
      {"unipotent-degree-bound", suite_unipotent_degree_bound},
      {"twelve-characters", suite_twelve_characters},
      {"mixing-l1", suite_mixing_l1},
  };
  return kSuites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> kNames = [] {
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry()) names.push_back(name);
    return names;
  }();
  return kNames;
}

std::vector<CheckResult> run_suite(const std::string& name,
                                   const SuiteConfig& config) {
  Recorder rec(config);
  if (name == "all") {
    for (const auto& [suite, fn] : registry()) fn(rec);
    return rec.results;
  }
  for (const auto& [suite, fn] : registry())
    if (suite == name) {
      fn(rec);
      return rec.results;
    }
  throw UnknownSuite("unknown suite: " + name);
}

std::string to_json_line(const CheckResult& r) {
  nlohmann::json j;
  j["check_name"] = r.check_name;
  j["params"] = r.params;
  j["expected"] = r.expected;
  j["actual"] = r.actual;
  j["pass"] = r.pass;
  j["skipped"] = r.skipped;
  j["runtime_ms"] = r.runtime_ms;
  j["seed"] = r.seed;
  return j.dump();
}

std::string to_tsv_line(const CheckResult& r) {
  std::ostringstream os;
  os << r.check_name << '\t';
  bool first = true;
  for (const auto& [k, v] : r.params) {
    os << (first ? "" : ",") << k << '=' << v;
    first = false;
  }
  os << '\t' << (r.pass ? "pass" : "fail") << '\t' << r.expected << '\t'
     << r.actual << '\t' << r.seed;
  return os.str();
}

}  // namespace npd
